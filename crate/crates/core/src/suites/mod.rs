//! The verification engine: named checks grouped into suites, run in
//! parallel over a shared cache of base series, reported in a fixed order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::CyclotomicNumber as Cyc;
use crate::error::CliError;
use crate::qseries::{describe_coeff, QSeries};

mod context;
pub mod group;
pub mod hauptmodul;
pub mod klein_ade;
pub mod modular;
pub mod phi;
pub mod singularities;
pub mod symbolic;

pub use context::Context;

/// Whole q-powers a vanishing difference must be known beyond its potential
/// valuation before it counts as a pass.
pub const CONFIDENCE_DEPTH: i64 = 10;

/// Smallest accepted truncation margin.
pub const MIN_MARGIN: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Group,
    Symbolic,
    ModularEquations,
    PhiIdentifications,
    Singularities,
    Hauptmodul,
    KleinAde,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Group,
        Suite::Symbolic,
        Suite::ModularEquations,
        Suite::PhiIdentifications,
        Suite::Singularities,
        Suite::Hauptmodul,
        Suite::KleinAde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Symbolic => "symbolic",
            Suite::ModularEquations => "modular-equations",
            Suite::PhiIdentifications => "phi-identifications",
            Suite::Singularities => "singularities",
            Suite::Hauptmodul => "hauptmodul",
            Suite::KleinAde => "klein-ade",
        }
    }

    fn checks(self, self_test: bool) -> Vec<Check> {
        let mut v = match self {
            Suite::Group => group::checks(),
            Suite::Symbolic => symbolic::checks(),
            Suite::ModularEquations => modular::checks(),
            Suite::PhiIdentifications => phi::checks(),
            Suite::Singularities => singularities::checks(),
            Suite::Hauptmodul => hauptmodul::checks(),
            Suite::KleinAde => klein_ade::checks(),
        };
        if self_test {
            v.extend(match self {
                Suite::Group => group::controls(),
                Suite::ModularEquations => modular::controls(),
                Suite::Hauptmodul => hauptmodul::controls(),
                _ => Vec::new(),
            });
        }
        v
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

/// What to run and how hard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub truncation_margin: u32,
    pub suites: Vec<Suite>,
    pub jobs: usize,
    pub self_test: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            truncation_margin: 30,
            suites: Suite::ALL.to_vec(),
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            self_test: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.truncation_margin < MIN_MARGIN {
            return Err(CliError::MarginTooSmall(self.truncation_margin));
        }
        if self.jobs == 0 {
            return Err(CliError::ZeroJobs);
        }
        Ok(())
    }
}

/// One named verification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// "symbolic" for exact checks, otherwise the truncation of the compared
    /// series and its reliable depth in whole powers of q.
    pub truncation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
    /// Negative controls are expected to fail.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub control: bool,
}

impl CheckResult {
    /// Whether the result is what a correct implementation should produce.
    pub fn as_expected(&self) -> bool {
        if self.control {
            self.status == Status::Fail
        } else {
            self.status == Status::Pass
        }
    }
}

/// A check's verdict before timing and naming are attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub truncation: String,
    pub witness: Option<String>,
}

impl Outcome {
    /// Result of an exact comparison.
    pub fn exact(ok: bool, witness: impl FnOnce() -> String) -> Self {
        Self {
            status: if ok { Status::Pass } else { Status::Fail },
            truncation: "symbolic".into(),
            witness: if ok { None } else { Some(witness()) },
        }
    }

    /// Exact check that passes when `first_difference` is `None`.
    pub fn exact_diff(diff: Option<String>) -> Self {
        let ok = diff.is_none();
        Self::exact(ok, || diff.unwrap_or_default())
    }

    /// Requires `diff` to vanish; `required` whole powers of q of reliable
    /// depth turn a vanishing difference into a pass.
    pub fn series_zero(diff: &QSeries, required: i64) -> Self {
        let truncation = describe_truncation(diff);
        if let Some((e, c)) = diff.leading() {
            return Self {
                status: Status::Fail,
                truncation,
                witness: Some(format!(
                    "nonzero coefficient {} at q^({})",
                    describe_coeff(c),
                    crate::cyclo::Rational::new((*e).into(), diff.den().into())
                )),
            };
        }
        match diff.reliable_depth() {
            Some(d) if d < required => Self {
                status: Status::Inconclusive,
                truncation,
                witness: Some(format!("vanishes, but only {d} q-powers are reliable (need {required})")),
            },
            _ => Self { status: Status::Pass, truncation, witness: None },
        }
    }

    /// `lhs == rhs` as series.
    pub fn series_eq(lhs: &QSeries, rhs: &QSeries, required: i64) -> Self {
        let mut o = Self::series_zero(&lhs.sub(rhs), required);
        if o.status == Status::Fail {
            let (e, _) = *lhs.sub(rhs).leading().unwrap();
            let w = o.witness.take().unwrap();
            o.witness = Some(format!(
                "{w}; lhs coefficient {}, rhs coefficient {}",
                describe_coeff(&lhs.coeff(e)),
                describe_coeff(&rhs.coeff(e))
            ));
        }
        o
    }

    /// Combines several outcomes: the first failure wins, then inconclusive.
    pub fn all(parts: impl IntoIterator<Item = (String, Outcome)>) -> Self {
        let mut worst: Option<Outcome> = None;
        for (label, o) in parts {
            let rank = |s: Status| match s {
                Status::Pass => 0,
                Status::Inconclusive => 1,
                Status::Fail => 2,
            };
            let replace = match &worst {
                None => true,
                Some(w) => rank(o.status) > rank(w.status),
            };
            if replace {
                let witness = o.witness.map(|w| format!("{label}: {w}"));
                worst = Some(Outcome { witness, ..o });
            }
        }
        worst.unwrap_or_else(|| Outcome::exact(true, String::new))
    }

    pub fn with_value(mut self, v: impl fmt::Display) -> Self {
        if self.status == Status::Pass {
            self.witness = Some(format!("value {v}"));
        }
        self
    }
}

fn describe_truncation(s: &QSeries) -> String {
    match (s.trunc_q(), s.reliable_depth()) {
        (Some(t), Some(d)) => format!("O(q^({t})), depth {d}"),
        _ => "exact".into(),
    }
}

/// Vanishing test for a difference of level-one forms of weight k (any
/// multiplier). A nonzero such form has order at most k/12 at the cusp, so a
/// difference known to vanish beyond q^(k/12) is zero; otherwise the usual
/// confidence depth applies.
pub fn modular_zero(diff: &QSeries, weight: u32) -> Outcome {
    let mut o = Outcome::series_zero(diff, CONFIDENCE_DEPTH);
    if o.status == Status::Inconclusive {
        let bound = crate::cyclo::Rational::new(weight.into(), 12.into());
        if diff.trunc_q().is_some_and(|t| t > bound) {
            o.status = Status::Pass;
            o.witness = None;
        }
    }
    o
}

/// `lhs == rhs` for level-one forms of weight k; see [`modular_zero`].
pub fn modular_eq(lhs: &QSeries, rhs: &QSeries, weight: u32) -> Outcome {
    let mut o = modular_zero(&lhs.sub(rhs), weight);
    if o.status == Status::Fail {
        o = Outcome::series_eq(lhs, rhs, CONFIDENCE_DEPTH);
    }
    o
}

type CheckFn = Box<dyn Fn(&Context) -> Outcome + Send + Sync>;

/// A named check.
pub struct Check {
    pub name: String,
    pub control: bool,
    run: CheckFn,
}

impl Check {
    pub fn new(name: impl Into<String>, f: impl Fn(&Context) -> Outcome + Send + Sync + 'static) -> Self {
        Self { name: name.into(), control: false, run: Box::new(f) }
    }

    pub fn control(name: impl Into<String>, f: impl Fn(&Context) -> Outcome + Send + Sync + 'static) -> Self {
        Self { name: name.into(), control: true, run: Box::new(f) }
    }

    pub fn run(&self, ctx: &Context) -> CheckResult {
        let t0 = Instant::now();
        let o = (self.run)(ctx);
        debug_assert!(o.status != Status::Fail || o.witness.is_some(), "{}: failure without witness", self.name);
        CheckResult {
            name: self.name.clone(),
            status: o.status,
            truncation: o.truncation,
            witness: o.witness,
            ms: t0.elapsed().as_millis() as u64,
            control: self.control,
        }
    }
}

/// Names of the checks a configuration would run, in report order.
pub fn check_names(config: &SuiteConfig) -> Vec<String> {
    ordered_suites(config).into_iter().flat_map(|s| s.checks(config.self_test)).map(|c| c.name).collect()
}

fn ordered_suites(config: &SuiteConfig) -> Vec<Suite> {
    let mut s = config.suites.clone();
    s.sort();
    s.dedup();
    s
}

/// Runs every enabled check. Output order is suite order, then declaration
/// order, independent of scheduling.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<CheckResult>, CliError> {
    config.validate()?;
    let suites = ordered_suites(config);
    let checks: Vec<Check> = suites.iter().flat_map(|s| s.checks(config.self_test)).collect();
    let needs_series = suites.iter().any(|s| !matches!(s, Suite::Group | Suite::Symbolic));
    let ctx = Context::new(config.truncation_margin as i64, needs_series);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build().expect("thread pool");
    Ok(pool.install(|| checks.par_iter().map(|c| c.run(&ctx)).collect()))
}

/// Per-status tally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Self::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

/// Integer coefficient as a cyclotomic number.
pub(crate) fn int(n: i64) -> Cyc {
    Cyc::from_int(n)
}
