//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Two criteria cannot hold as stated, because the printed relations are
//! wrong: the group relations hold only up to −I, and six orbit-sum constants
//! are misprinted. Those lines print FAIL. The run itself only fails if a
//! criterion's outcome differs from that analysis, including a FAIL spreading
//! to checks outside the known set.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use x13::suites::{run_all, CheckResult, Status, Suite, SuiteConfig};

const MARGIN: u32 = 30;

struct Run {
    results: Vec<CheckResult>,
    elapsed: Duration,
}

impl Run {
    fn new(suite: Suite) -> Self {
        let config = SuiteConfig { truncation_margin: MARGIN, suites: vec![suite], self_test: true, ..Default::default() };
        let t0 = Instant::now();
        let results = run_all(&config).expect("valid config");
        Self { results, elapsed: t0.elapsed() }
    }

    fn checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.control)
    }

    fn failing(&self) -> BTreeSet<&str> {
        self.checks().filter(|r| r.status != Status::Pass).map(|r| r.name.as_str()).collect()
    }

    fn within(&self, secs: u64) -> bool {
        self.elapsed < Duration::from_secs(secs)
    }
}

fn depth(r: &CheckResult) -> Option<i64> {
    r.truncation.rsplit("depth ").next()?.trim_end_matches(']').parse().ok()
}

/// A criterion's verdict, and whether that verdict is the analysed one.
struct Verdict {
    pass: bool,
    expected: bool,
    detail: String,
}

fn plain(pass: bool, detail: String) -> Verdict {
    Verdict { pass, expected: pass, detail }
}

/// A criterion known to fail on exactly `known`.
fn pinned(run: &Run, known: &[&str], secs: u64, detail: &str) -> Verdict {
    let failing = run.failing();
    let known: BTreeSet<&str> = known.iter().copied().collect();
    let pass = failing.is_empty() && run.within(secs);
    let expected = failing == known && run.within(secs);
    let list: Vec<&str> = failing.into_iter().collect();
    Verdict { pass, expected, detail: format!("{detail}; failing: {}; {:.1?}", list.join(", "), run.elapsed) }
}

fn main() -> ExitCode {
    let runs: BTreeMap<Suite, Run> = Suite::ALL.into_iter().map(|s| (s, Run::new(s))).collect();
    let mut verdicts = Vec::new();

    let g = &runs[&Suite::Group];
    verdicts.push(pinned(
        g,
        &["ST_cubed", "H_sixth_power", "H_conjugation", "Q3P4_cubed", "H_matches_printed"],
        5,
        "group relations hold only up to the central sign -I",
    ));

    let s = &runs[&Suite::Symbolic];
    verdicts.push(plain(
        s.failing().is_empty() && s.within(60),
        format!("{} exact checks; {:.1?}", s.checks().count(), s.elapsed),
    ));

    let m = &runs[&Suite::ModularEquations];
    let b: Vec<&CheckResult> = m.checks().filter(|r| r.name.ends_with("_vanishes")).collect();
    let shallow = b.iter().filter(|r| depth(r).is_none_or(|d| d < 20)).count();
    verdicts.push(plain(
        b.len() == 21 && shallow == 0 && m.failing().is_empty() && m.within(120),
        format!("{} B-series zero, min depth {}; {:.1?}", b.len(), b.iter().filter_map(|r| depth(r)).min().unwrap_or(0), m.elapsed),
    ));

    let p = &runs[&Suite::PhiIdentifications];
    verdicts.push(pinned(
        p,
        &[
            "phi_3_3_identification",
            "phi_5_2_identification",
            "phi_2_4_identification",
            "phi_3_5_identification",
            "phi_6_3_identification",
            "phi_9_1_identification",
            "phi_3_3_leading_coefficient",
        ],
        600,
        "six printed normalisation constants disagree with the computed multiples",
    ));

    let sing = &runs[&Suite::Singularities];
    let required = [
        "E6_relation",
        "E7_relation",
        "E8_relation",
        "Q18_relation",
        "E20_relation",
        "j_decomposition_E7type",
        "j_decomposition_E8type",
        "pair_3_0_vs_0_2",
        "pair_3_1_vs_0_3",
        "pair_5_0_vs_2_2",
        "pair_5_1_vs_2_3",
    ];
    let sing_fail = sing.failing();
    let extra: Vec<&str> = sing_fail.iter().copied().filter(|n| !required.contains(n)).collect();
    let mut v = plain(
        required.iter().all(|n| !sing_fail.contains(n)),
        format!("{} relations and pairs; outside the criterion: {}", required.len(), extra.join(", ")),
    );
    // The weight-32 triple inherits the misprinted Φ_{5,2}, Φ_{2,4} constants.
    v.expected &= extra == ["pair_8_0_vs_5_2_vs_2_4"];
    verdicts.push(v);

    let h = &runs[&Suite::Hauptmodul];
    verdicts.push(plain(h.failing().is_empty(), format!("{} checks for N = 2, 3, 5, 7, 13", h.checks().count())));

    let k = &runs[&Suite::KleinAde];
    verdicts.push(plain(k.failing().is_empty(), format!("{} checks", k.checks().count())));

    let controls: Vec<&CheckResult> = runs.values().flat_map(|r| &r.results).filter(|r| r.control).collect();
    let controls_ok = controls.len() == 3
        && controls.iter().all(|r| r.status == Status::Fail && r.witness.as_deref().is_some_and(|w| !w.is_empty()));
    let low_config = SuiteConfig { truncation_margin: 10, self_test: true, ..Default::default() };
    let low = run_all(&low_config).expect("valid config");
    let high: BTreeMap<&str, Status> =
        runs.values().flat_map(|r| &r.results).map(|r| (r.name.as_str(), r.status)).collect();
    let flips: Vec<&str> = low
        .iter()
        .filter(|r| r.status != Status::Inconclusive && high.get(r.name.as_str()) != Some(&r.status))
        .map(|r| r.name.as_str())
        .collect();
    verdicts.push(plain(
        controls_ok && flips.is_empty() && low.len() == high.len(),
        format!("{} controls fail with witnesses; margin 10 -> 30 changes: {}", controls.len(), flips.len()),
    ));

    let mut ok = true;
    for (i, v) in verdicts.iter().enumerate() {
        let tag = if v.pass { "PASS" } else { "FAIL" };
        let note = if v.expected { "" } else { "  ** UNEXPECTED **" };
        println!("{tag} criterion {}: {}{note}", i + 1, v.detail);
        ok &= v.expected;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
