//! Sendov radius, the executable bound check, optimality criteria, the
//! `z^n - z` family and the exact `I(f)` oracle.
//!
//! Distances are reported as valuations: the radius `r_n = |n|^(-1/(n-1))`
//! is `p^(-q)` with `q = -v(n)/(n-1)`, and `I(f) ≤ r_n` reads
//! `v_I ≥ q`.

mod criteria;
mod factored;
mod oracle;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use criteria::{
    absolute_form_violations, check_optimal, check_optimal_ramified, check_optimal_unramified,
    valuation_form_violations, Magnitude, RamifiedVerdict,
};
pub use factored::{certify_irreducible, FactoredPoly, IrreducibilityCertificate};
pub use oracle::{i_of_f, min_distance_profile, OrbitProfile};

use crate::error::{Error, Result};
use crate::newton::root_valuations;
use crate::poly::{cyclotomic, UPoly};
use crate::scalar::{ExtScalar, PadicContext, Valuation};

/// Whether the degree has `|n| < 1` (ramified) or `|n| = 1` (unramified).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Ramified,
    Unramified,
}

impl Regime {
    pub fn of_degree(ctx: PadicContext, n: usize) -> Regime {
        if ctx.valuation_of_int(n as i64) > Valuation::zero() {
            Regime::Ramified
        } else {
            Regime::Unramified
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Ramified => "ramified",
            Regime::Unramified => "unramified",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `-v(n)/(n-1)`, the valuation of `r_n`.
pub fn sendov_radius(n: usize, ctx: PadicContext) -> Result<Valuation> {
    if n < 2 {
        return Err(Error::DegreeTooLow { got: n, min: 2 });
    }
    let vn = ctx.valuation_of_int(n as i64);
    let k = BigRational::new(BigInt::from(-1), BigInt::from(n - 1));
    Ok(vn.scale(&k))
}

/// All roots of a monic `f` lie in the closed unit disc iff every
/// coefficient is integral.
pub fn roots_in_unit_disc(f: &UPoly) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() == Some(0) {
        return Err(Error::DegreeTooLow { got: 0, min: 1 });
    }
    Ok(first_non_integral(f).is_none())
}

fn first_non_integral(f: &UPoly) -> Option<(usize, Valuation)> {
    f.coeffs()
        .iter()
        .map(ExtScalar::valuation)
        .enumerate()
        .find(|(_, v)| *v < Valuation::zero())
}

/// Checks monicity and `deg f ≥ 2`; returns the degree.
pub fn require_monic_degree(f: &UPoly) -> Result<usize> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().expect("monic polynomials are nonzero");
    if n < 2 {
        return Err(Error::DegreeTooLow { got: n, min: 2 });
    }
    Ok(n)
}

pub(crate) fn require_hypothesis(f: &UPoly) -> Result<()> {
    match first_non_integral(f) {
        Some((index, valuation)) => Err(Error::HypothesisViolated { index, valuation }),
        None => Ok(()),
    }
}

/// Witnesses the bound: some critical point `w` satisfies `|w| ≤ r_n`.
pub fn verify_theorem1(f: &UPoly) -> Result<bool> {
    let n = require_monic_degree(f)?;
    require_hypothesis(f)?;
    let radius = sendov_radius(n, f.ctx())?;
    let crit = root_valuations(&f.derivative())?;
    Ok(crit.iter().any(|v| *v >= radius))
}

/// `z^n - z` as `z · ∏_{d | n-1} Φ_d`, defined when `p | n`.
pub fn counterexample_family(n: usize, ctx: PadicContext) -> Result<FactoredPoly> {
    if n < 2 {
        return Err(Error::DegreeTooLow { got: n, min: 2 });
    }
    if !(n as u64).is_multiple_of(ctx.prime()) {
        return Err(Error::PrimeDoesNotDivideDegree { p: ctx.prime(), n });
    }
    let mut factors = vec![(UPoly::x(ctx), 1)];
    factors.extend(
        (1..n)
            .filter(|d| (n - 1).is_multiple_of(*d))
            .map(|d| (cyclotomic(ctx, d), 1)),
    );
    FactoredPoly::new(factors)
}

/// Everything known about a factored polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SendovReport {
    pub regime: Regime,
    pub radius_val: Valuation,
    pub i_of_f_val: Option<Valuation>,
    /// Oracle verdict `I(f) = r_n` when the oracle ran, else the criterion.
    pub optimal: bool,
    /// Verdict of the regime's coefficient criterion; `None` when the
    /// unit-disc hypothesis fails.
    pub criterion: Option<bool>,
    pub hypothesis_ok: bool,
    pub per_orbit: Vec<OrbitProfile>,
}

/// Runs the oracle and, when the hypothesis holds, the matching criterion.
pub fn analyze(f: &FactoredPoly) -> Result<SendovReport> {
    let poly = f.expanded();
    let n = require_monic_degree(poly)?;
    let ctx = f.ctx();
    let radius_val = sendov_radius(n, ctx)?;
    let (ioff, per_orbit) = i_of_f(f)?;
    let hypothesis_ok = roots_in_unit_disc(poly)?;
    let criterion = if hypothesis_ok {
        Some(check_optimal(poly)?)
    } else {
        None
    };
    Ok(SendovReport {
        regime: Regime::of_degree(ctx, n),
        optimal: ioff == radius_val,
        radius_val,
        i_of_f_val: Some(ioff),
        criterion,
        hypothesis_ok,
        per_orbit,
    })
}

/// Criterion-only report for an unfactored polynomial.
pub fn check_report(f: &UPoly) -> Result<SendovReport> {
    let n = require_monic_degree(f)?;
    let ctx = f.ctx();
    let radius_val = sendov_radius(n, ctx)?;
    let optimal = check_optimal(f)?;
    Ok(SendovReport {
        regime: Regime::of_degree(ctx, n),
        radius_val,
        i_of_f_val: None,
        optimal,
        criterion: Some(optimal),
        hypothesis_ok: true,
        per_orbit: Vec::new(),
    })
}
