//! Exact non-archimedean Sendov analysis over `E = Q(p^(1/b))`.
//!
//! For a monic `f` of degree `n` with roots in the closed unit disc, every
//! root lies within `r_n = |n|^(-1/(n-1))` of a critical point. This crate
//! computes `r_n`, the exact distance functional
//! `I(f) = max_z min_w |z - w|` and the coefficient criteria deciding
//! `I(f) = r_n`, using only exact rational arithmetic. Roots are never
//! approximated: every distance is read off a Newton polygon.

pub mod batch;
pub mod cli;
pub mod error;
pub mod newton;
pub mod poly;
pub mod residue;
pub mod sample;
pub mod scalar;
pub mod sendov;
pub mod text;

pub use error::{Error, Result};
pub use newton::{newton_polygon, root_valuations, NewtonPolygon, Segment};
pub use poly::{cyclotomic, distance_resultant, resultant, UPoly};
pub use residue::{divides_power, gcd_fp, reduce_poly, ResiduePoly};
pub use scalar::{ExtScalar, PadicContext, Valuation};
pub use sendov::{
    analyze, check_optimal, check_optimal_ramified, check_optimal_unramified,
    counterexample_family, i_of_f, min_distance_profile, roots_in_unit_disc, sendov_radius,
    verify_theorem1, FactoredPoly, Regime, SendovReport,
};
pub use text::{parse_poly, parse_scalar};
