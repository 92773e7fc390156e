//! Coefficient criteria deciding whether `I(f)` attains the Sendov radius.
//!
//! In the ramified regime (`v(n) > 0`) the criterion is a list of
//! inequalities on coefficient valuations, checked twice: once on valuations
//! and once on absolute values `|x| = p^(-v(x))`. In the unramified regime it
//! is the non-divisibility `f̄ ∤ f̄'^n` over the residue field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{require_hypothesis, require_monic_degree, Regime};
use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::residue::{divides_power, reduce_poly};
use crate::scalar::{ExtScalar, PadicContext, Valuation};

/// An absolute value `p^e`, or zero.
///
/// The derived order puts `Zero` below every power of `p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Magnitude {
    Zero,
    PowerOfP(BigRational),
}

impl Magnitude {
    pub fn one() -> Self {
        Magnitude::PowerOfP(BigRational::zero())
    }

    pub fn of_valuation(v: &Valuation) -> Self {
        match v {
            Valuation::Finite(q) => Magnitude::PowerOfP(-q),
            Valuation::Infinity => Magnitude::Zero,
        }
    }

    pub fn of_scalar(x: &ExtScalar) -> Self {
        Self::of_valuation(&x.valuation())
    }

    pub fn of_int(ctx: PadicContext, n: i64) -> Self {
        Self::of_valuation(&ctx.valuation_of_int(n))
    }

    pub fn mul(&self, other: &Magnitude) -> Magnitude {
        match (self, other) {
            (Magnitude::PowerOfP(a), Magnitude::PowerOfP(b)) => Magnitude::PowerOfP(a + b),
            _ => Magnitude::Zero,
        }
    }

    /// Panics when dividing by zero.
    pub fn div(&self, other: &Magnitude) -> Magnitude {
        match (self, other) {
            (_, Magnitude::Zero) => panic!("division by |0|"),
            (Magnitude::Zero, _) => Magnitude::Zero,
            (Magnitude::PowerOfP(a), Magnitude::PowerOfP(b)) => Magnitude::PowerOfP(a - b),
        }
    }

    /// `|x|^k` for a positive rational `k`.
    pub fn powr(&self, k: &BigRational) -> Magnitude {
        match self {
            Magnitude::Zero => Magnitude::Zero,
            Magnitude::PowerOfP(e) => Magnitude::PowerOfP(e * k),
        }
    }
}

/// Indices `j` where the valuation form fails, for `vals = [v(a_0), …, v(a_n)]`:
/// `v(a_j) ≥ max{0, (j-1)/(n-1)·v(n) - v(j)}` for `2 ≤ j ≤ n`, `v(a_1) = 0`,
/// `v(a_0) ≥ 0`.
pub fn valuation_form_violations(ctx: PadicContext, vals: &[Valuation]) -> Vec<usize> {
    let n = vals.len() - 1;
    assert!(n >= 2, "criterion needs degree at least 2");
    let vn = ctx
        .valuation_of_int(n as i64)
        .finite()
        .cloned()
        .expect("n is nonzero");
    let zero = Valuation::zero();
    let mut bad = Vec::new();
    if vals[0] < zero {
        bad.push(0);
    }
    if vals[1] != zero {
        bad.push(1);
    }
    for (j, v) in vals.iter().enumerate().skip(2) {
        let vj = ctx.valuation_of_int(j as i64).finite().cloned().unwrap();
        let slope_bound = BigRational::new(BigInt::from(j - 1), BigInt::from(n - 1)) * &vn - vj;
        let bound = Valuation::Finite(slope_bound).max(zero.clone());
        if *v < bound {
            bad.push(j);
        }
    }
    bad
}

/// Indices `j` where the absolute-value form fails, for `mags = [|a_0|, …, |a_n|]`:
/// `|a_j| ≤ min{1, |n^((j-1)/(n-1)) / j|}` for `2 ≤ j ≤ n`, `|a_1| = 1`,
/// `|a_0| ≤ 1`.
pub fn absolute_form_violations(ctx: PadicContext, mags: &[Magnitude]) -> Vec<usize> {
    let n = mags.len() - 1;
    assert!(n >= 2, "criterion needs degree at least 2");
    let one = Magnitude::one();
    let abs_n = Magnitude::of_int(ctx, n as i64);
    let mut bad = Vec::new();
    if mags[0] > one {
        bad.push(0);
    }
    if mags[1] != one {
        bad.push(1);
    }
    for (j, m) in mags.iter().enumerate().skip(2) {
        let root = abs_n.powr(&BigRational::new(BigInt::from(j - 1), BigInt::from(n - 1)));
        let bound = root.div(&Magnitude::of_int(ctx, j as i64)).min(one.clone());
        if *m > bound {
            bad.push(j);
        }
    }
    bad
}

/// Outcome of the ramified-regime criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedVerdict {
    pub optimal: bool,
    /// Coefficient indices violating the criterion (empty iff optimal).
    pub violations: Vec<usize>,
}

/// Decides `I(f) = r_n` for monic `f` of degree `n` with `v(n) > 0` and all
/// roots in the closed unit disc.
pub fn check_optimal_ramified(f: &UPoly) -> Result<RamifiedVerdict> {
    let n = require_monic_degree(f)?;
    let ctx = f.ctx();
    let regime = Regime::of_degree(ctx, n);
    if regime != Regime::Ramified {
        return Err(Error::WrongRegime {
            expected: Regime::Ramified,
            actual: regime,
        });
    }
    require_hypothesis(f)?;
    let vals: Vec<Valuation> = f.coeffs().iter().map(ExtScalar::valuation).collect();
    let mags: Vec<Magnitude> = f.coeffs().iter().map(Magnitude::of_scalar).collect();
    let by_valuation = valuation_form_violations(ctx, &vals);
    let by_magnitude = absolute_form_violations(ctx, &mags);
    if by_valuation != by_magnitude {
        return Err(Error::CriterionMismatch);
    }
    Ok(RamifiedVerdict {
        optimal: by_valuation.is_empty(),
        violations: by_valuation,
    })
}

/// Decides `I(f) = 1` for monic `f` of degree `n` with `v(n) = 0` and all
/// roots in the closed unit disc: optimal iff `f̄ ∤ f̄'^n`.
pub fn check_optimal_unramified(f: &UPoly) -> Result<bool> {
    let n = require_monic_degree(f)?;
    let regime = Regime::of_degree(f.ctx(), n);
    if regime != Regime::Unramified {
        return Err(Error::WrongRegime {
            expected: Regime::Unramified,
            actual: regime,
        });
    }
    require_hypothesis(f)?;
    let fbar = reduce_poly(f)?;
    let dbar = reduce_poly(&f.derivative())?;
    Ok(!divides_power(&fbar, &dbar, n as u32)?)
}

/// Runs whichever criterion matches the regime of `deg f`.
pub fn check_optimal(f: &UPoly) -> Result<bool> {
    let n = require_monic_degree(f)?;
    match Regime::of_degree(f.ctx(), n) {
        Regime::Ramified => Ok(check_optimal_ramified(f)?.optimal),
        Regime::Unramified => check_optimal_unramified(f),
    }
}
