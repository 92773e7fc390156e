//! Exact evaluation of `I(f) = max_{f(z)=0} min_{f'(w)=0} |z - w|`.
//!
//! Roots are never materialized. For a factor `h` of `f`, the polynomial
//! `R(y) = Res_x(h(x), f'(x + y))` vanishes exactly at the differences
//! `w - α`, so its Newton polygon yields the valuations `v(w - α)` over all
//! critical points `w` and roots `α` of `h`. When `h` is irreducible over the
//! completion, every root of `h` sees the same multiset, so dividing the
//! multiplicities by `deg h` gives the per-root distance profile.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::factored::FactoredPoly;
use crate::error::{Error, Result};
use crate::newton::root_valuations;
use crate::poly::{distance_resultant, UPoly};
use crate::scalar::Valuation;

/// Distance data for one factor of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitProfile {
    pub factor: usize,
    pub multiplicity: u32,
    /// Largest `v(w - α)`, i.e. the distance from a root of the factor to the
    /// nearest critical point.
    pub min_distance: Valuation,
    /// `v(w - α)` for a single root `α`, one entry per critical point `w`,
    /// sorted ascending.
    pub profile: Vec<Valuation>,
}

/// Valuation of the distance from a root of `h` to the critical set of `f`,
/// together with the full per-root profile.
pub fn min_distance_profile(h: &UPoly, f: &UPoly) -> Result<(Valuation, Vec<Valuation>)> {
    let dh = h.degree().ok_or(Error::ZeroPolynomial)?;
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    if df < 2 {
        return Err(Error::DegreeTooLow { got: df, min: 2 });
    }
    if !h.is_monic() {
        return Err(Error::NotMonic);
    }
    let r = distance_resultant(h, &f.derivative())?;
    let all = root_valuations(&r)?;
    let inconsistent = Error::ProfileInconsistent {
        size: all.len(),
        degree: dh,
    };
    let mut counts: BTreeMap<Valuation, usize> = BTreeMap::new();
    for v in all {
        *counts.entry(v).or_default() += 1;
    }
    let mut profile = Vec::with_capacity(df - 1);
    for (v, c) in counts {
        if c % dh != 0 {
            return Err(inconsistent);
        }
        profile.extend(std::iter::repeat_n(v, c / dh));
    }
    let min_distance = profile.last().cloned().ok_or(inconsistent)?;
    Ok((min_distance, profile))
}

/// `I(f)` as the valuation `q` with `I(f) = p^(-q)`, plus per-factor data.
///
/// The maximum over roots of the distance is the minimum over factors of the
/// profile maximum.
pub fn i_of_f(f: &FactoredPoly) -> Result<(Valuation, Vec<OrbitProfile>)> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { got: n, min: 2 });
    }
    let expanded = f.expanded();
    let orbits = f
        .factors()
        .par_iter()
        .enumerate()
        .map(|(k, (h, e))| {
            let (min_distance, profile) = min_distance_profile(h, expanded)?;
            Ok(OrbitProfile {
                factor: k,
                multiplicity: *e,
                min_distance,
                profile,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let value = orbits
        .iter()
        .map(|o| o.min_distance.clone())
        .min()
        .expect("at least one factor");
    Ok((value, orbits))
}
