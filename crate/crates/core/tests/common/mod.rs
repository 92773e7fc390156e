//! Independent reference computations shared by the integration tests.
//!
//! Each oracle deliberately takes the slow, textbook route so that it shares
//! no code path with the library routine it checks.

#![allow(dead_code)]

use std::ops::Range;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use rand::Rng;

use sendov_core::sample::{random_integral_rational, random_unit_rational};
use sendov_core::{ExtScalar, PadicContext, UPoly, Valuation};

pub fn ctx(p: u64, b: u32) -> PadicContext {
    PadicContext::new(p, b).unwrap()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sylvester matrix of `h` (degree m) and `g` (degree n): n shifted rows of
/// `h` followed by m shifted rows of `g`, coefficients in descending order.
fn sylvester_rows<T: Clone>(h: &[T], g: &[T], zero: T) -> Vec<Vec<T>> {
    let m = h.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in h.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for j in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[j + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `det Syl(h, g)` by Gaussian elimination over `E`.
pub fn sylvester_resultant(h: &UPoly, g: &UPoly) -> ExtScalar {
    let ctx = h.ctx();
    let mut a = sylvester_rows(h.coeffs(), g.coeffs(), ExtScalar::zero(ctx));
    let size = a.len();
    let mut det = ExtScalar::one(ctx);
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return ExtScalar::zero(ctx);
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let inv = a[col][col].inv().unwrap();
        det = &det * &a[col][col];
        for r in col + 1..size {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &(&factor * y);
            }
        }
    }
    det
}

/// Coefficients in `x` of `g(x + y)`, each a polynomial in `y`, computed by
/// binomial expansion.
fn shifted_in_x(g: &UPoly) -> Vec<UPoly> {
    let ctx = g.ctx();
    let n = g.degree().unwrap();
    (0..=n)
        .map(|k| {
            let y_coeffs = (k..=n)
                .map(|j| g.coeff(j).scale_int(binomial(j as i64, k as i64)))
                .collect();
            UPoly::new(ctx, y_coeffs).unwrap()
        })
        .collect()
}

/// `Res_x(h(x), g(x + y))` as a polynomial in `y`, by fraction-free Bareiss
/// elimination of the Sylvester matrix over `E[y]`.
pub fn bareiss_distance_resultant(h: &UPoly, g: &UPoly) -> UPoly {
    let ctx = h.ctx();
    let hc: Vec<UPoly> = h.coeffs().iter().cloned().map(UPoly::constant).collect();
    let gc = shifted_in_x(g);
    let mut a = sylvester_rows(&hc, &gc, UPoly::zero(ctx));
    let size = a.len();
    let mut sign = false;
    let mut prev = UPoly::one(ctx);
    for k in 0..size {
        let Some(piv) = (k..size).find(|&r| !a[r][k].is_zero()) else {
            return UPoly::zero(ctx);
        };
        if piv != k {
            a.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .unwrap()
                    .expect("Bareiss division is exact");
            }
            a[i][k] = UPoly::zero(ctx);
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Dense polynomial over `F_p`, constant term first, trimmed.
pub type Fp = Vec<u64>;

pub fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

/// Remainder of schoolbook long division by a nonzero `d`.
pub fn fp_rem(a: &Fp, d: &Fp, p: u64) -> Fp {
    let dd = d.len() - 1;
    let lc_inv = (1..p).find(|x| x * d[dd] % p == 1).unwrap();
    let mut r = a.clone();
    while r.len() > dd {
        let top = r.len() - 1;
        let t = r[top] * lc_inv % p;
        for (j, c) in d.iter().enumerate() {
            let k = top - dd + j;
            r[k] = (r[k] + p * p - t * c % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

/// `f | g^n` decided by computing `g^n` in full and dividing.
pub fn naive_divides_power(f: &Fp, g: &Fp, n: u32, p: u64) -> bool {
    let mut power = vec![1u64];
    for _ in 0..n {
        power = fp_mul(&power, g, p);
    }
    fp_rem(&power, f, p).is_empty()
}

/// All polynomials over `F_p` of degree exactly `deg`, optionally monic only.
pub fn fp_polys_of_degree(p: u64, deg: usize, monic: bool) -> Vec<Fp> {
    let leads: Vec<u64> = if monic { vec![1] } else { (1..p).collect() };
    let mut out = Vec::new();
    let lower = (p as usize).pow(deg as u32);
    for lead in leads {
        for mut code in 0..lower {
            let mut poly = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                poly.push((code % p as usize) as u64);
                code /= p as usize;
            }
            poly.push(lead);
            out.push(poly);
        }
    }
    out
}

/// A random scalar `u · π^k` with `u` a unit of `Q`, so `v = k / b`
/// (or zero when `k` is `None`).
pub fn scalar_with_valuation(ctx: PadicContext, unit: BigRational, k: Option<u32>) -> ExtScalar {
    match k {
        None => ExtScalar::zero(ctx),
        Some(k) => {
            let b = ctx.ram();
            let p = BigRational::from_integer(BigInt::from(ctx.prime()));
            let coarse = num_traits::pow(p, (k / b) as usize);
            ExtScalar::pi_pow(ctx, k % b).scale(&(unit * coarse))
        }
    }
}

/// `∏ (z - r_i)` with the valuations `v(r_i)` it was built from.
pub fn product_of_linears<R: Rng>(
    rng: &mut R,
    ctx: PadicContext,
    count: usize,
) -> (UPoly, Vec<Valuation>) {
    let mut f = UPoly::one(ctx);
    let mut vals = Vec::with_capacity(count);
    for _ in 0..count {
        let k = if rng.gen_bool(0.1) {
            None
        } else {
            Some(rng.gen_range(0..4 * ctx.ram()))
        };
        let r = scalar_with_valuation(ctx, random_unit_rational(rng, ctx.prime()), k);
        let r = if rng.gen_bool(0.2) {
            let p = ctx.prime() as i64;
            r.scale(&q(1, p * p * p * p))
        } else {
            r
        };
        vals.push(r.valuation());
        f = &f * &UPoly::linear(&r);
    }
    vals.sort();
    (f, vals)
}

/// Random polynomial of exact degree `deg` with rational coordinates of
/// mixed valuation.
pub fn random_poly<R: Rng>(rng: &mut R, ctx: PadicContext, degrees: Range<usize>) -> UPoly {
    let deg = rng.gen_range(degrees);
    loop {
        let coeffs: Vec<ExtScalar> = (0..=deg)
            .map(|_| {
                let coords = (0..ctx.ram())
                    .map(|_| {
                        let x = random_integral_rational(rng, ctx.prime());
                        if rng.gen_bool(0.2) {
                            x / BigRational::from_integer(BigInt::from(ctx.prime()))
                        } else {
                            x
                        }
                    })
                    .collect();
                ExtScalar::from_coords(ctx, coords).unwrap()
            })
            .collect();
        let f = UPoly::new(ctx, coeffs).unwrap();
        if f.degree() == Some(deg) {
            return f;
        }
    }
}
