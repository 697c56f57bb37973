use serde::Serialize;

use crate::{Error, Result};

use super::budget::candidates;
use super::hom::hom_basis;
use super::iso::{is_isomorphic, IsoVerdict};
use super::morphism::Morphism;
use super::rep::Representation;
use super::structure::exact_at;

/// A verified short exact sequence `0 -> left -> middle -> right -> 0`.
///
/// The constructor checks injectivity, surjectivity, exactness at the middle
/// and vertexwise dimension additivity, so holding a value means holding a
/// certificate.
#[derive(Clone, Serialize)]
pub struct ShortExactSeq {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub inj: Morphism,
    pub surj: Morphism,
}

impl ShortExactSeq {
    pub fn new(
        left: Representation,
        middle: Representation,
        right: Representation,
        inj: Morphism,
        surj: Morphism,
    ) -> Result<Self> {
        if inj.source() != &left || inj.target() != &middle {
            return Err(Error::InvalidMorphism("inj does not run left -> middle".into()));
        }
        if surj.source() != &middle || surj.target() != &right {
            return Err(Error::InvalidMorphism("surj does not run middle -> right".into()));
        }
        if !inj.is_injective() {
            return Err(Error::InvalidMorphism("left map has a kernel".into()));
        }
        if !surj.is_surjective() {
            return Err(Error::InvalidMorphism("right map has a cokernel".into()));
        }
        if !exact_at(&inj, &surj) {
            return Err(Error::InvalidMorphism("sequence is not exact at the middle".into()));
        }
        for (&v, &d) in middle.dim_vector() {
            if d != left.dim_at(v) + right.dim_at(v) {
                return Err(Error::InvalidRepresentation(format!(
                    "dimension additivity fails at vertex {v}"
                )));
            }
        }
        Ok(ShortExactSeq { left, middle, right, inj, surj })
    }
}

impl std::fmt::Debug for ShortExactSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "0 -> {:?} -> {:?} -> {:?} -> 0", self.left, self.middle, self.right)
    }
}

/// A realized sequence plus its splitness verdict.
#[derive(Debug)]
pub struct RealizedSes {
    pub seq: ShortExactSeq,
    pub non_split: bool,
    /// True when non-splitness rests on a budget-limited negative
    /// isomorphism verdict rather than a distinguishing invariant.
    pub non_split_budget_limited: bool,
}

/// Searches for a short exact sequence with the three given terms: candidate
/// injections from `hom(a, b)` within the deterministic budget, cokernel
/// compared against `c` up to isomorphism. Absence is a legitimate answer.
pub fn realize_ses(
    a: &Representation,
    b: &Representation,
    c: &Representation,
) -> Result<Option<RealizedSes>> {
    for (&v, &d) in b.dim_vector() {
        if d != a.dim_at(v) + c.dim_at(v) {
            return Ok(None);
        }
    }
    let cands = if a.is_zero() {
        vec![Morphism::zero(a.clone(), b.clone())?]
    } else {
        candidates(&hom_basis(a, b)?)?
    };
    for f in cands {
        if !f.is_injective() {
            continue;
        }
        let (coker, proj) = f.cokernel();
        let IsoVerdict::Yes(phi) = is_isomorphic(&coker, c)? else {
            continue;
        };
        let surj = proj.then(&phi)?;
        let seq = ShortExactSeq::new(a.clone(), b.clone(), c.clone(), f, surj)?;
        let (non_split, flagged) = match is_isomorphic(b, &a.direct_sum(c)?)? {
            IsoVerdict::Yes(_) => (false, false),
            IsoVerdict::No { budget_limited, .. } => (true, budget_limited),
        };
        return Ok(Some(RealizedSes { seq, non_split, non_split_budget_limited: flagged }));
    }
    Ok(None)
}
