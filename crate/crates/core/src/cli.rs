//! Command-line front end: argument parsing, report assembly and exit codes.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::suites::{check_names, run_all, CheckResult, Status, Suite, SuiteConfig, Summary};

/// Exit status when every result is as expected.
pub const EXIT_OK: i32 = 0;
/// Exit status when some check failed or was inconclusive.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "x13check", version, about = "Certify the SL(2,13) invariant and modular identities")]
pub struct Args {
    /// Suite to run (repeatable); all suites when omitted.
    #[arg(long = "suite", value_name = "NAME")]
    pub suites: Vec<String>,
    /// Whole q-powers computed beyond each valuation.
    #[arg(long, value_name = "N", default_value_t = 30)]
    pub truncation: u32,
    /// Worker threads; defaults to the available cores.
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// List suite names and exit.
    #[arg(long)]
    pub list: bool,
    /// Also run negative controls, which are expected to fail.
    #[arg(long)]
    pub self_test: bool,
}

impl Args {
    pub fn config(&self) -> Result<SuiteConfig, CliError> {
        let mut config = SuiteConfig { truncation_margin: self.truncation, self_test: self.self_test, ..Default::default() };
        if !self.suites.is_empty() {
            config.suites = self.suites.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
        }
        if let Some(j) = self.jobs {
            config.jobs = j;
        }
        config.validate()?;
        Ok(config)
    }
}

/// The machine-readable report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(config: SuiteConfig, results: Vec<CheckResult>) -> Self {
        let summary = Summary::of(&results);
        Self { version: env!("CARGO_PKG_VERSION").to_string(), config, results, summary }
    }

    /// Whether every check produced its expected status.
    pub fn all_as_expected(&self) -> bool {
        self.results.iter().all(CheckResult::as_expected)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            let control = if r.control { " (control, expected to fail)" } else { "" };
            s.push_str(&format!("{tag:<12} {}{control}  [{}] {} ms", r.name, r.truncation, r.ms));
            if let Some(w) = &r.witness {
                s.push_str(&format!("\n             {w}"));
            }
            s.push('\n');
        }
        let m = &self.summary;
        s.push_str(&format!("{} pass, {} fail, {} inconclusive\n", m.pass, m.fail, m.inconclusive));
        s
    }
}

/// Runs the tool with explicit arguments and output streams; returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    if args.list {
        for s in Suite::ALL {
            let _ = writeln!(out, "{s}");
        }
        return EXIT_OK;
    }
    let config = match args.config() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let results = match run_all(&config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    debug_assert_eq!(results.len(), check_names(&config).len());
    let report = ReportDocument::new(config, results);
    let text = if args.json {
        match report.to_json() {
            Ok(j) => j + "\n",
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILED;
            }
        }
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
    if report.all_as_expected() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
