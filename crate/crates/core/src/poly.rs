//! Dense univariate polynomials over `E`.
//!
//! `UPoly` stores coefficients in ascending degree order. The vector is empty
//! for the zero polynomial and has a nonzero last entry otherwise.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{ExtScalar, PadicContext};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    ctx: PadicContext,
    coeffs: Vec<ExtScalar>,
}

impl UPoly {
    pub fn new(ctx: PadicContext, coeffs: Vec<ExtScalar>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.ctx() != ctx) {
            return Err(Error::ContextMismatch(ctx, bad.ctx()));
        }
        Ok(Self::from_vec_unchecked(ctx, coeffs))
    }

    fn from_vec_unchecked(ctx: PadicContext, mut coeffs: Vec<ExtScalar>) -> Self {
        while coeffs.last().is_some_and(ExtScalar::is_zero) {
            coeffs.pop();
        }
        UPoly { ctx, coeffs }
    }

    pub fn zero(ctx: PadicContext) -> Self {
        UPoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: PadicContext) -> Self {
        Self::constant(ExtScalar::one(ctx))
    }

    pub fn constant(c: ExtScalar) -> Self {
        let ctx = c.ctx();
        Self::from_vec_unchecked(ctx, vec![c])
    }

    /// The indeterminate `z`.
    pub fn x(ctx: PadicContext) -> Self {
        Self::monomial(ExtScalar::one(ctx), 1)
    }

    /// `c·z^deg`.
    pub fn monomial(c: ExtScalar, deg: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![ExtScalar::zero(ctx); deg];
        coeffs.push(c);
        Self::from_vec_unchecked(ctx, coeffs)
    }

    /// The monic linear polynomial `z - root`.
    pub fn linear(root: &ExtScalar) -> Self {
        let ctx = root.ctx();
        Self::from_vec_unchecked(ctx, vec![-root, ExtScalar::one(ctx)])
    }

    pub fn from_ints(ctx: PadicContext, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| ExtScalar::from_int(ctx, c))
            .collect();
        Self::from_vec_unchecked(ctx, coeffs)
    }

    pub fn from_rationals(ctx: PadicContext, coeffs: Vec<BigRational>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| ExtScalar::from_rational(ctx, c))
            .collect();
        Self::from_vec_unchecked(ctx, coeffs)
    }

    pub fn ctx(&self) -> PadicContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[ExtScalar] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&ExtScalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(ExtScalar::is_one)
    }

    /// Coefficient of `z^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> ExtScalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| ExtScalar::zero(self.ctx))
    }

    fn check_ctx(&self, other: &UPoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(self.ctx, other.ctx));
        }
        Ok(())
    }

    pub fn eval(&self, at: &ExtScalar) -> ExtScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExtScalar::zero(self.ctx), |acc, c| &(&acc * at) + c)
    }

    pub fn scale(&self, k: &ExtScalar) -> UPoly {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        Self::from_vec_unchecked(self.ctx, coeffs)
    }

    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(i as i64))
            .collect();
        Self::from_vec_unchecked(self.ctx, coeffs)
    }

    /// `g(y) = f(c + y)` by repeated synthetic division.
    pub fn taylor_shift(&self, c: &ExtScalar) -> UPoly {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = c * &a[j + 1];
                a[j] = &a[j] + &t;
            }
        }
        Self::from_vec_unchecked(self.ctx, a)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(self.ctx), |acc, _| &acc * self)
    }

    pub fn monic(&self) -> Result<UPoly> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        self.check_ctx(divisor)?;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return Ok((UPoly::zero(self.ctx), self.clone()));
        };
        let mut quot = vec![ExtScalar::zero(self.ctx); n - d + 1];
        for k in (0..=n - d).rev() {
            let t = &rem[k + d] * &lc_inv;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&t * dc);
            }
            quot[k] = t;
        }
        rem.truncate(d);
        Ok((
            Self::from_vec_unchecked(self.ctx, quot),
            Self::from_vec_unchecked(self.ctx, rem),
        ))
    }

    /// Division that must leave no remainder; `None` otherwise.
    pub fn exact_div(&self, divisor: &UPoly) -> Result<Option<UPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn try_mul(&self, other: &UPoly) -> Result<UPoly> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UPoly::zero(self.ctx));
        }
        let mut out = vec![ExtScalar::zero(self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::from_vec_unchecked(self.ctx, out))
    }

    pub fn try_add(&self, other: &UPoly) -> Result<UPoly> {
        self.check_ctx(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Self::from_vec_unchecked(self.ctx, coeffs))
    }

    pub fn try_sub(&self, other: &UPoly) -> Result<UPoly> {
        self.try_add(&-other)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&UPoly> for &UPoly {
            type Output = UPoly;

            /// Panics if the operands belong to different contexts.
            fn $method(self, rhs: &UPoly) -> UPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

/// `Res(h, g) = lc(h)^deg(g) · ∏ g(α)` over the roots `α` of `h`; this is
/// the Sylvester determinant with the rows of `h` on top.
///
/// Computed by the Euclidean remainder chain over `E`.
pub fn resultant(h: &UPoly, g: &UPoly) -> Result<ExtScalar> {
    h.check_ctx(g)?;
    if h.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = h.ctx;
    let mut a = h.clone();
    let mut b = g.clone();
    let mut acc = ExtScalar::one(ctx);
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(&acc * &b.coeffs[0].pow(m as u64));
        }
        if m == 0 {
            return Ok(&acc * &a.coeffs[0].pow(n as u64));
        }
        let (_, r) = a.div_rem(&b)?;
        let Some(k) = r.degree() else {
            return Ok(ExtScalar::zero(ctx));
        };
        // Res(a, b) = (-1)^(mn) lc(b)^(m - k) Res(b, r)
        let mut factor = b.coeffs[n].pow((m - k) as u64);
        if (m * n) % 2 == 1 {
            factor = -factor;
        }
        acc = &acc * &factor;
        a = b;
        b = r;
    }
}

/// `R(y) = Res_x(h(x), g(x + y))`, whose roots are the differences `w - α`
/// between roots `w` of `g` and roots `α` of `h`.
///
/// `R` has degree exactly `deg h · deg g`; it is recovered from its values at
/// `y = 0, 1, …, deg h · deg g` by exact interpolation over `E`.
pub fn distance_resultant(h: &UPoly, g: &UPoly) -> Result<UPoly> {
    h.check_ctx(g)?;
    let (Some(dh), Some(dg)) = (h.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if dh == 0 || dg == 0 {
        return Err(Error::DegreeTooLow {
            got: dh.min(dg),
            min: 1,
        });
    }
    let ctx = h.ctx;
    let total = dh * dg;
    let values = (0..=total)
        .map(|y| resultant(h, &g.taylor_shift(&ExtScalar::from_int(ctx, y as i64))))
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate_consecutive(ctx, values))
}

/// The polynomial of degree `< values.len()` taking `values[k]` at `y = k`.
///
/// Uses the Newton forward-difference form, so only divisions by integers
/// occur.
pub fn interpolate_consecutive(ctx: PadicContext, mut values: Vec<ExtScalar>) -> UPoly {
    let n = values.len();
    // In place: values[k] becomes Δ^k f(0) / k!.
    for k in 1..n {
        for i in (k..n).rev() {
            values[i] = &values[i] - &values[i - 1];
        }
    }
    let mut fact = BigInt::one();
    for (k, v) in values.iter_mut().enumerate() {
        if k > 0 {
            fact *= BigInt::from(k);
        }
        *v = v.scale(&BigRational::new(BigInt::one(), fact.clone()));
    }
    // Horner on the Newton basis y(y-1)…(y-k+1).
    let mut acc = UPoly::zero(ctx);
    for (k, c) in values.iter().enumerate().rev() {
        let shifted = UPoly::linear(&ExtScalar::from_int(ctx, k as i64));
        acc = &(&acc * &shifted) + &UPoly::constant(c.clone());
    }
    acc
}

/// The `d`-th cyclotomic polynomial, from `z^d - 1 = ∏_{e | d} Φ_e(z)`.
pub fn cyclotomic(ctx: PadicContext, d: usize) -> UPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(ctx, d, &mut memo)
}

fn cyclotomic_memo(ctx: PadicContext, d: usize, memo: &mut BTreeMap<usize, UPoly>) -> UPoly {
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    let mut num = &UPoly::monomial(ExtScalar::one(ctx), d) - &UPoly::one(ctx);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let phi = cyclotomic_memo(ctx, e, memo);
        num = num
            .exact_div(&phi)
            .expect("same context")
            .expect("cyclotomic factor divides z^d - 1");
    }
    memo.insert(d, num.clone());
    num
}
