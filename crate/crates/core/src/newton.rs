//! Newton polygons and the valuations of roots they certify.
//!
//! A segment of slope `μ` and horizontal length `λ` on the lower convex hull
//! of `{(i, v(a_i))}` accounts for exactly `λ` roots of valuation `-μ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::scalar::Valuation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: BigRational,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(usize, BigRational)>,
    segments: Vec<Segment>,
    zero_order: usize,
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[(usize, BigRational)] {
        &self.vertices
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Multiplicity of the root `0`.
    pub fn zero_order(&self) -> usize {
        self.zero_order
    }

    pub fn degree(&self) -> usize {
        self.zero_order + self.segments.iter().map(|s| s.length).sum::<usize>()
    }

    /// Root valuations as a sorted multiset: `-μ` repeated `λ` times per
    /// segment, then `+∞` for each root at zero.
    pub fn root_valuations(&self) -> Vec<Valuation> {
        let mut out: Vec<Valuation> = self
            .segments
            .iter()
            .rev()
            .flat_map(|s| std::iter::repeat_n(Valuation::Finite(-&s.slope), s.length))
            .collect();
        out.extend(std::iter::repeat_n(Valuation::Infinity, self.zero_order));
        out
    }
}

pub fn newton_polygon(f: &UPoly) -> Result<NewtonPolygon> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg < 1 {
        return Err(Error::DegreeTooLow { got: deg, min: 1 });
    }
    let points: Vec<(usize, BigRational)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c.valuation() {
            Valuation::Finite(v) => Some((i, v)),
            Valuation::Infinity => None,
        })
        .collect();
    let zero_order = points[0].0;

    // Monotone chain, lower hull; collinear middle points are dropped.
    let mut hull: Vec<(usize, BigRational)> = Vec::with_capacity(points.len());
    for pt in points {
        while hull.len() >= 2 {
            let (ox, oy) = &hull[hull.len() - 2];
            let (ax, ay) = &hull[hull.len() - 1];
            let cross = BigRational::from_integer(BigInt::from(*ax as i64 - *ox as i64))
                * (&pt.1 - oy)
                - (ay - oy) * BigRational::from_integer(BigInt::from(pt.0 as i64 - *ox as i64));
            if cross > BigRational::zero() {
                break;
            }
            hull.pop();
        }
        hull.push(pt);
    }

    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            Segment {
                slope: (&w[1].1 - &w[0].1) / BigRational::from_integer(BigInt::from(length)),
                length,
            }
        })
        .collect();
    Ok(NewtonPolygon {
        vertices: hull,
        segments,
        zero_order,
    })
}

/// The multiset of root valuations of `f`, sorted ascending, of size `deg f`.
pub fn root_valuations(f: &UPoly) -> Result<Vec<Valuation>> {
    Ok(newton_polygon(f)?.root_valuations())
}
