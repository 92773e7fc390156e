//! Seeded property runs over random factored instances.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::sample::{instance_rng, random_factored};
use crate::scalar::{PadicContext, Valuation};
use crate::sendov::{
    absolute_form_violations, check_optimal, i_of_f, sendov_radius, valuation_form_violations,
    verify_theorem1, Magnitude, Regime,
};

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// `I(f) ≤ r_n`, and some critical point lies in the radius disc.
    Theorem1,
    /// The coefficient criterion agrees with the oracle's `I(f) = r_n`.
    CheckerOracle,
    /// Valuation and absolute-value forms of the ramified criterion agree
    /// on synthetic valuation vectors.
    CriterionForms,
    /// Roots of a repeated factor are critical, so their distance is 0.
    RepeatedFactor,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Theorem1,
        Property::CheckerOracle,
        Property::CriterionForms,
        Property::RepeatedFactor,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::Theorem1 => "theorem1",
            Property::CheckerOracle => "checker-oracle",
            Property::CriterionForms => "criterion-forms",
            Property::RepeatedFactor => "repeated-factor",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Property::ALL.iter().map(Property::name).collect();
                format!(
                    "unknown property '{s}' (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: u64,
    pub ram: u32,
    pub property: Property,
    pub seed: u64,
    pub count: usize,
}

impl RunConfig {
    pub fn ctx(&self) -> Result<PadicContext> {
        PadicContext::new(self.prime, self.ram)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RegimeCounts {
    pub ramified: usize,
    pub unramified: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub property: Property,
    pub seed: u64,
    pub count: usize,
    pub prime: u64,
    pub ram: u32,
    pub passed: usize,
    pub failed: usize,
    /// Instances whose oracle verdict was `I(f) = r_n`.
    pub optimal: usize,
    pub regimes: RegimeCounts,
    pub failures: Vec<Failure>,
}

impl BatchReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

struct Outcome {
    regime: Regime,
    optimal: bool,
    failure: Option<(String, String)>,
}

pub fn run_batch(cfg: &RunConfig) -> Result<BatchReport> {
    let ctx = cfg.ctx()?;
    let mut outcomes: Vec<(usize, Outcome)> = (0..cfg.count)
        .into_par_iter()
        .map(|i| (i, run_instance(cfg, ctx, i)))
        .collect();
    outcomes.sort_by_key(|(i, _)| *i);

    let mut report = BatchReport {
        property: cfg.property,
        seed: cfg.seed,
        count: cfg.count,
        prime: cfg.prime,
        ram: cfg.ram,
        passed: 0,
        failed: 0,
        optimal: 0,
        regimes: RegimeCounts::default(),
        failures: Vec::new(),
    };
    for (index, o) in outcomes {
        match o.regime {
            Regime::Ramified => report.regimes.ramified += 1,
            Regime::Unramified => report.regimes.unramified += 1,
        }
        report.optimal += o.optimal as usize;
        match o.failure {
            None => report.passed += 1,
            Some((instance, detail)) => {
                report.failed += 1;
                report.failures.push(Failure {
                    index,
                    instance,
                    detail,
                });
            }
        }
    }
    Ok(report)
}

fn run_instance(cfg: &RunConfig, ctx: PadicContext, index: usize) -> Outcome {
    let mut rng = instance_rng(cfg.seed, index as u64);
    let n = rng.gen_range(MIN_DEGREE..=MAX_DEGREE);
    let regime = Regime::of_degree(ctx, n);
    if cfg.property == Property::CriterionForms {
        return criterion_forms_instance(&mut rng, ctx, n);
    }
    let f = random_factored(&mut rng, ctx, n);
    let describe = || {
        f.factors()
            .iter()
            .map(|(h, e)| format!("({h})^{e}"))
            .collect::<Vec<_>>()
            .join(";")
    };
    let fail = |detail: String| Outcome {
        regime,
        optimal: false,
        failure: Some((describe(), detail)),
    };
    let radius = sendov_radius(n, ctx).expect("n >= 2");
    let (ioff, orbits) = match i_of_f(&f) {
        Ok(x) => x,
        Err(e) => return fail(format!("oracle error: {e}")),
    };
    let optimal = ioff == radius;
    let failure = match cfg.property {
        Property::Theorem1 => match verify_theorem1(f.expanded()) {
            _ if ioff < radius => Some(format!("I(f) valuation {ioff} below radius {radius}")),
            Ok(true) => None,
            Ok(false) => Some("no critical point within the radius".to_string()),
            Err(e) => Some(format!("witness error: {e}")),
        },
        Property::CheckerOracle => match check_optimal(f.expanded()) {
            Ok(verdict) if verdict == optimal => None,
            Ok(verdict) => Some(format!(
                "criterion says {verdict}, oracle gives I(f) valuation {ioff} vs radius {radius}"
            )),
            Err(e) => Some(format!("criterion error: {e}")),
        },
        Property::RepeatedFactor => orbits
            .iter()
            .find(|o| o.multiplicity > 1 && o.min_distance != Valuation::Infinity)
            .map(|o| {
                format!(
                    "factor {} repeated but at distance {}",
                    o.factor, o.min_distance
                )
            }),
        Property::CriterionForms => unreachable!(),
    };
    match failure {
        None => Outcome {
            regime,
            optimal,
            failure: None,
        },
        Some(detail) => fail(detail),
    }
}

/// Draws valuations of `a_0, …, a_{n-1}` around the criterion thresholds,
/// with `a_n = 1`, and compares both forms.
fn criterion_forms_instance<R: Rng>(rng: &mut R, ctx: PadicContext, n: usize) -> Outcome {
    let vals = random_valuation_vector(rng, ctx, n);
    let mags: Vec<Magnitude> = vals.iter().map(Magnitude::of_valuation).collect();
    let a = valuation_form_violations(ctx, &vals);
    let b = absolute_form_violations(ctx, &mags);
    let failure = (a != b).then(|| {
        let shown: Vec<String> = vals.iter().map(Valuation::to_string).collect();
        (
            shown.join(","),
            format!("valuation form flags {a:?}, absolute form flags {b:?}"),
        )
    });
    Outcome {
        regime: Regime::of_degree(ctx, n),
        optimal: a.is_empty(),
        failure,
    }
}

/// Coefficient valuations for a synthetic monic degree-`n` polynomial:
/// `+∞` or a rational `k / (b (n-1))` with small `k`, biased toward 0 for
/// `a_1`.
pub fn random_valuation_vector<R: Rng>(rng: &mut R, ctx: PadicContext, n: usize) -> Vec<Valuation> {
    let den = (ctx.ram() as i64) * (n as i64 - 1);
    let mut vals: Vec<Valuation> = (0..n)
        .map(|j| {
            if rng.gen_bool(0.2) {
                Valuation::Infinity
            } else if j == 1 && rng.gen_bool(0.5) {
                Valuation::zero()
            } else {
                let k: i64 = rng.gen_range(-den..=3 * den);
                Valuation::from_ratio(k, den)
            }
        })
        .collect();
    vals.push(Valuation::zero());
    vals
}
