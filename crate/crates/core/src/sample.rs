//! Seeded random instances: factored monic polynomials with integral
//! coefficients, built from linear factors and Eisenstein quadratics.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::UPoly;
use crate::scalar::{ExtScalar, PadicContext, Valuation};
use crate::sendov::FactoredPoly;

/// Independent, reproducible stream for instance `index` of a seeded run.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A rational of `p`-adic valuation exactly 0.
pub fn random_unit_rational<R: Rng>(rng: &mut R, p: u64) -> BigRational {
    let p = p as i64;
    let num = loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n % p != 0 {
            break n;
        }
    };
    let den = loop {
        let d: i64 = rng.gen_range(1..=6);
        if d % p != 0 {
            break d;
        }
    };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A rational of nonnegative `p`-adic valuation (possibly zero).
pub fn random_integral_rational<R: Rng>(rng: &mut R, p: u64) -> BigRational {
    if rng.gen_bool(0.1) {
        return BigRational::from_integer(BigInt::from(0));
    }
    let k = match rng.gen_range(0..10) {
        0..=5 => 0,
        6..=8 => 1,
        _ => 2,
    };
    random_unit_rational(rng, p) * BigRational::from_integer(num_traits::pow(BigInt::from(p), k))
}

/// An element of the valuation ring of `E`.
pub fn random_integral_scalar<R: Rng>(rng: &mut R, ctx: PadicContext) -> ExtScalar {
    let coords = (0..ctx.ram())
        .map(|i| {
            if i > 0 && rng.gen_bool(0.5) {
                BigRational::from_integer(BigInt::from(0))
            } else {
                random_integral_rational(rng, ctx.prime())
            }
        })
        .collect();
    ExtScalar::from_coords(ctx, coords).expect("ram coordinates")
}

/// `z^2 + a z + c` with `v(a) ≥ v(π)` and `v(c) = v(π)`.
pub fn random_eisenstein_quadratic<R: Rng>(rng: &mut R, ctx: PadicContext) -> UPoly {
    let pi = ExtScalar::pi(ctx);
    let a = &pi * &random_integral_scalar(rng, ctx);
    let c = pi.scale(&random_unit_rational(rng, ctx.prime()));
    let c = &c + &(&pi * &pi).scale(&random_integral_rational(rng, ctx.prime()));
    debug_assert_eq!(
        c.valuation(),
        Valuation::Finite(BigRational::new(1.into(), (ctx.ram() as i64).into()))
    );
    UPoly::new(ctx, vec![c, a, ExtScalar::one(ctx)]).expect("single context")
}

/// A factored monic polynomial of the given degree with all roots in the
/// closed unit disc.
///
/// Factors are distinct linear polynomials `z - r` with `v(r) ≥ 0` and
/// distinct Eisenstein quadratics, with multiplicities up to 3.
pub fn random_factored<R: Rng>(rng: &mut R, ctx: PadicContext, degree: usize) -> FactoredPoly {
    assert!(degree >= 1);
    let mut factors: Vec<(UPoly, u32)> = Vec::new();
    let mut remaining = degree;
    while remaining > 0 {
        let h = if remaining >= 2 && rng.gen_bool(0.25) {
            random_eisenstein_quadratic(rng, ctx)
        } else {
            UPoly::linear(&random_integral_scalar(rng, ctx))
        };
        if factors.iter().any(|(g, _)| *g == h) {
            continue;
        }
        let d = h.degree().expect("nonzero");
        let max_mult = (remaining / d).min(3) as u32;
        let e = if max_mult > 1 && rng.gen_bool(0.3) {
            rng.gen_range(2..=max_mult)
        } else {
            1
        };
        remaining -= d * e as usize;
        factors.push((h, e));
    }
    FactoredPoly::new(factors).expect("distinct linear and Eisenstein factors are coprime")
}
