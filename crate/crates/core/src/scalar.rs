//! Exact arithmetic in the totally ramified field `E = Q(π)`, `π^b = p`.
//!
//! An [`ExtScalar`] is stored in the power basis `1, π, …, π^(b-1)` with
//! unbounded rational coordinates. Because the terms `c_i π^i` have pairwise
//! distinct valuations modulo 1, the valuation of a sum of basis terms is the
//! minimum of the term valuations, which makes [`ExtScalar::valuation`] exact
//! without any completion or precision tracking.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The prime `p` and ramification index `b` fixing `E = Q(p^(1/b))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicContext {
    p: u64,
    b: u32,
}

impl PadicContext {
    pub fn new(p: u64, b: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if b == 0 {
            return Err(Error::InvalidRamification);
        }
        Ok(PadicContext { p, b })
    }

    /// Unramified context `Q` with the `p`-adic valuation.
    pub fn unramified(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn ram(&self) -> u32 {
        self.b
    }

    /// `v_p(n)` for a nonzero integer, `None` for zero.
    pub fn vp_int(&self, n: &BigInt) -> Option<i64> {
        if n.is_zero() {
            return None;
        }
        let p = BigInt::from(self.p);
        let mut n = n.abs();
        let mut k = 0;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return Some(k);
            }
            n = q;
            k += 1;
        }
    }

    /// `v_p(q)` of a rational; `+∞` for zero.
    pub fn vp_rational(&self, q: &BigRational) -> Valuation {
        match self.vp_int(q.numer()) {
            None => Valuation::Infinity,
            Some(num) => {
                let den = self.vp_int(q.denom()).expect("denominator is nonzero");
                Valuation::from_int(num - den)
            }
        }
    }

    /// Valuation of the integer `n` viewed as the constant `n·π^0` of `E`.
    pub fn valuation_of_int(&self, n: i64) -> Valuation {
        self.vp_rational(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for PadicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 1 {
            write!(f, "Q (p = {})", self.p)
        } else {
            write!(f, "Q({}^(1/{}))", self.p, self.b)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A valuation value: an exact rational or `+∞` (the valuation of zero).
///
/// The derived order puts every finite value below `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(BigRational),
    Infinity,
}

impl Valuation {
    pub fn from_int(n: i64) -> Self {
        Valuation::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Valuation::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinity => None,
        }
    }

    /// Multiplies by a rational; `+∞` stays `+∞` for positive factors.
    ///
    /// Panics if `k` is not positive and `self` is infinite.
    pub fn scale(&self, k: &BigRational) -> Self {
        match self {
            Valuation::Finite(q) => Valuation::Finite(q * k),
            Valuation::Infinity => {
                assert!(k.is_positive(), "scaling +inf by a non-positive factor");
                Valuation::Infinity
            }
        }
    }
}

impl Add for &Valuation {
    type Output = Valuation;

    fn add(self, rhs: &Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        &self + &rhs
    }
}

impl Neg for &Valuation {
    type Output = Valuation;

    /// Panics on `+∞`, which has no additive inverse.
    fn neg(self) -> Valuation {
        match self {
            Valuation::Finite(q) => Valuation::Finite(-q),
            Valuation::Infinity => panic!("-inf is not a valuation"),
        }
    }
}

impl From<BigRational> for Valuation {
    fn from(q: BigRational) -> Self {
        Valuation::Finite(q)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// An exact element `Σ c_i π^i` of `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    ctx: PadicContext,
    coords: Vec<BigRational>,
}

impl ExtScalar {
    pub fn zero(ctx: PadicContext) -> Self {
        ExtScalar {
            ctx,
            coords: vec![BigRational::zero(); ctx.b as usize],
        }
    }

    pub fn one(ctx: PadicContext) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_rational(ctx: PadicContext, q: BigRational) -> Self {
        let mut x = Self::zero(ctx);
        x.coords[0] = q;
        x
    }

    pub fn from_int(ctx: PadicContext, n: i64) -> Self {
        Self::from_rational(ctx, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(ctx: PadicContext, num: i64, den: i64) -> Self {
        Self::from_rational(ctx, BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_coords(ctx: PadicContext, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != ctx.b as usize {
            return Err(Error::CoordinateCount {
                expected: ctx.b as usize,
                got: coords.len(),
            });
        }
        Ok(ExtScalar { ctx, coords })
    }

    /// `π^k` for any `k ≥ 0`, reduced with `π^b = p`.
    pub fn pi_pow(ctx: PadicContext, k: u32) -> Self {
        let b = ctx.b;
        let mut x = Self::zero(ctx);
        let p_pow = num_traits::pow(BigInt::from(ctx.p), (k / b) as usize);
        x.coords[(k % b) as usize] = BigRational::from_integer(p_pow);
        x
    }

    /// The uniformizer `π = p^(1/b)`.
    pub fn pi(ctx: PadicContext) -> Self {
        Self::pi_pow(ctx, 1)
    }

    pub fn ctx(&self) -> PadicContext {
        self.ctx
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `v(x) = min_i (v_p(c_i) + i/b)`, with `v(0) = +∞`.
    pub fn valuation(&self) -> Valuation {
        let b = BigInt::from(self.ctx.b);
        self.coords
            .iter()
            .enumerate()
            .filter_map(|(i, c)| {
                self.ctx
                    .vp_rational(c)
                    .finite()
                    .map(|v| Valuation::Finite(v + BigRational::new(BigInt::from(i), b.clone())))
            })
            .min()
            .unwrap_or(Valuation::Infinity)
    }

    /// Reduction modulo the maximal ideal, as an integer in `[0, p)`.
    pub fn residue(&self) -> Result<u64> {
        let v = self.valuation();
        if v < Valuation::zero() {
            return Err(Error::NegativeValuation(v));
        }
        Ok(rational_mod_p(&self.coords[0], self.ctx.p))
    }

    fn check_ctx(&self, other: &ExtScalar) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(self.ctx, other.ctx));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ExtScalar) -> Result<ExtScalar> {
        self.check_ctx(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExtScalar {
            ctx: self.ctx,
            coords,
        })
    }

    pub fn try_sub(&self, other: &ExtScalar) -> Result<ExtScalar> {
        self.check_ctx(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ExtScalar {
            ctx: self.ctx,
            coords,
        })
    }

    pub fn try_mul(&self, other: &ExtScalar) -> Result<ExtScalar> {
        self.check_ctx(other)?;
        let b = self.ctx.b as usize;
        if b == 1 {
            return Ok(ExtScalar {
                ctx: self.ctx,
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        let p = BigRational::from_integer(BigInt::from(self.ctx.p));
        let mut coords = vec![BigRational::zero(); b];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                if i + j >= b {
                    coords[i + j - b] += t * &p;
                } else {
                    coords[i + j] += t;
                }
            }
        }
        Ok(ExtScalar {
            ctx: self.ctx,
            coords,
        })
    }

    /// Multiplicative inverse, found by solving `x·y = 1` as a `b × b`
    /// linear system over `Q`.
    pub fn inv(&self) -> Result<ExtScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let b = self.ctx.b as usize;
        if b == 1 {
            return Ok(ExtScalar {
                ctx: self.ctx,
                coords: vec![self.coords[0].recip()],
            });
        }
        // Column j of the multiplication matrix holds the coordinates of x·π^j.
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); b + 1]; b];
        let mut col = self.clone();
        let pi = ExtScalar::pi(self.ctx);
        for j in 0..b {
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = col.coords[i].clone();
            }
            col = &col * &pi;
        }
        rows[0][b] = BigRational::one();
        let solution = solve_augmented(rows).expect("E is a field, so x·π^j are independent");
        Ok(ExtScalar {
            ctx: self.ctx,
            coords: solution,
        })
    }

    pub fn try_div(&self, other: &ExtScalar) -> Result<ExtScalar> {
        self.check_ctx(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Multiplies every coordinate by a rational.
    pub fn scale(&self, k: &BigRational) -> ExtScalar {
        ExtScalar {
            ctx: self.ctx,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> ExtScalar {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn pow(&self, mut e: u64) -> ExtScalar {
        let mut base = self.clone();
        let mut acc = ExtScalar::one(self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns the rational value when `x` lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }
}

/// `q mod p` for a rational with denominator prime to `p`.
pub(crate) fn rational_mod_p(q: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let den = q.denom().mod_floor(&pb).to_u64().expect("reduced below p");
    debug_assert!(den != 0, "denominator divisible by p");
    num * inv_mod(den, p) % p
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

/// Gauss-Jordan elimination on an augmented `n × (n+1)` system.
fn solve_augmented(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExtScalar> for &ExtScalar {
            type Output = ExtScalar;

            /// Panics if the operands belong to different contexts.
            fn $method(self, rhs: &ExtScalar) -> ExtScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<ExtScalar> for ExtScalar {
            type Output = ExtScalar;

            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &ExtScalar {
    type Output = ExtScalar;

    fn neg(self) -> ExtScalar {
        ExtScalar {
            ctx: self.ctx,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;

    fn neg(self) -> ExtScalar {
        -&self
    }
}
