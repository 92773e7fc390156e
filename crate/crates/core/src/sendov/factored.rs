use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::newton::newton_polygon;
use crate::poly::{resultant, UPoly};
use crate::scalar::{PadicContext, Valuation};

/// A monic polynomial given as `∏ h_k^{e_k}` with pairwise coprime monic
/// factors.
///
/// Each `h_k` is taken to be irreducible over the `p`-adic completion of `E`,
/// so that its roots form one orbit under valuation-preserving automorphisms.
/// This is a caller contract; [`certify_irreducible`] recognizes the common
/// shapes, and the distance oracle reports
/// [`Error::ProfileInconsistent`] when the contract is visibly broken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    factors: Vec<(UPoly, u32)>,
    expanded: UPoly,
}

impl FactoredPoly {
    pub fn new(factors: Vec<(UPoly, u32)>) -> Result<Self> {
        let Some((first, _)) = factors.first() else {
            return Err(Error::EmptyFactorization);
        };
        let ctx = first.ctx();
        for (k, (h, e)) in factors.iter().enumerate() {
            if h.ctx() != ctx {
                return Err(Error::ContextMismatch(ctx, h.ctx()));
            }
            if !h.is_monic() || h.degree() == Some(0) || *e == 0 {
                return Err(Error::InvalidFactor(k));
            }
        }
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if resultant(&factors[i].0, &factors[j].0)?.is_zero() {
                    return Err(Error::FactorsNotCoprime(i, j));
                }
            }
        }
        let expanded = factors
            .iter()
            .fold(UPoly::one(ctx), |acc, (h, e)| &acc * &h.pow(*e));
        Ok(FactoredPoly { factors, expanded })
    }

    /// Pairs each polynomial with the matching multiplicity.
    pub fn with_multiplicities(polys: Vec<UPoly>, mults: Vec<u32>) -> Result<Self> {
        if polys.len() != mults.len() {
            return Err(Error::MultiplicityCount {
                factors: polys.len(),
                mults: mults.len(),
            });
        }
        Self::new(polys.into_iter().zip(mults).collect())
    }

    pub fn ctx(&self) -> PadicContext {
        self.expanded.ctx()
    }

    pub fn factors(&self) -> &[(UPoly, u32)] {
        &self.factors
    }

    pub fn expanded(&self) -> &UPoly {
        &self.expanded
    }

    pub fn degree(&self) -> usize {
        self.expanded.degree().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    Linear,
    /// The Newton polygon is one segment whose slope, measured in units of
    /// `v(π)`, has denominator equal to the degree. Eisenstein polynomials
    /// are the special case `v(a_0) = v(π)`.
    TotallyRamifiedSlope,
    /// Quadratic whose discriminant has a valuation no square in `E` can have.
    QuadraticDiscriminant,
}

/// A cheap sufficient test for irreducibility over the completion of `E`.
pub fn certify_irreducible(h: &UPoly) -> Option<IrreducibilityCertificate> {
    let deg = h.degree()?;
    match deg {
        0 => return None,
        1 => return Some(IrreducibilityCertificate::Linear),
        _ => {}
    }
    let ram = BigInt::from(h.ctx().ram());
    let np = newton_polygon(h).ok()?;
    if let [seg] = np.segments() {
        if np.zero_order() == 0 {
            let scaled = &seg.slope * BigRational::from_integer(ram.clone());
            if *scaled.denom() == BigInt::from(deg) {
                return Some(IrreducibilityCertificate::TotallyRamifiedSlope);
            }
        }
    }
    if deg == 2 {
        let b = h.coeff(1);
        let disc = &(&b * &b) - &(&h.coeff(0) * &h.coeff(2)).scale_int(4);
        if let Valuation::Finite(v) = disc.valuation() {
            let scaled = v * BigRational::from_integer(ram);
            if !scaled.is_integer() || scaled.to_integer() % 2 != BigInt::from(0) {
                return Some(IrreducibilityCertificate::QuadraticDiscriminant);
            }
        }
    }
    None
}
