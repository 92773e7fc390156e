//! Polynomials over the residue field `F_p` and the divisibility test
//! `f̄ | ḡ^n`.

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::scalar::inv_mod;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ResiduePoly {
    /// Reduces every entry modulo `p` and trims trailing zeros.
    pub fn new(p: u64, coeffs: Vec<i64>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i64) as u64)
            .collect();
        Self::from_residues(p, coeffs)
    }

    fn from_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ResiduePoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ResiduePoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::from_residues(p, vec![1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn monic(&self) -> ResiduePoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                self.scale(inv)
            }
        }
    }

    fn scale(&self, k: u64) -> ResiduePoly {
        let p = self.p;
        Self::from_residues(p, self.coeffs.iter().map(|&c| mul_mod(c, k, p)).collect())
    }

    pub fn mul(&self, other: &ResiduePoly) -> ResiduePoly {
        assert_eq!(self.p, other.p, "residue polynomials over different primes");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::from_residues(p, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ResiduePoly) -> (ResiduePoly, ResiduePoly) {
        assert_eq!(
            self.p, divisor.p,
            "residue polynomials over different primes"
        );
        let p = self.p;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = inv_mod(divisor.coeffs[d], p);
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return (Self::zero(p), self.clone());
        };
        let mut quot = vec![0u64; n - d + 1];
        for k in (0..=n - d).rev() {
            let t = mul_mod(rem[k + d], lc_inv, p);
            if t == 0 {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(t, dc, p)) % p;
            }
            quot[k] = t;
        }
        rem.truncate(d);
        (Self::from_residues(p, quot), Self::from_residues(p, rem))
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Coefficient-wise reduction modulo the maximal ideal.
pub fn reduce_poly(f: &UPoly) -> Result<ResiduePoly> {
    let p = f.ctx().prime();
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.residue())
        .collect::<Result<Vec<_>>>()?;
    Ok(ResiduePoly::from_residues(p, coeffs))
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd_fp(a: &ResiduePoly, b: &ResiduePoly) -> Result<ResiduePoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Whether `fbar` divides `gbar^n`, decided by stripping `gcd(t, gbar)` from
/// `t = fbar` at most `n` times.
///
/// Each pass removes, for every irreducible `q`, up to `mult_q(gbar)` copies
/// of `q` from `t`, so `t` becomes a unit after `n` passes exactly when
/// `mult_q(fbar) ≤ n · mult_q(gbar)` for all `q`.
pub fn divides_power(fbar: &ResiduePoly, gbar: &ResiduePoly, n: u32) -> Result<bool> {
    if fbar.is_zero() || gbar.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut t = fbar.clone();
    for _ in 0..n {
        if t.is_unit() {
            break;
        }
        let g = gcd_fp(&t, gbar)?;
        if g.is_unit() {
            break;
        }
        t = t.div_rem(&g).0;
    }
    Ok(t.is_unit())
}
