use crate::Result;

use super::budget::candidates;
use super::hom::hom_basis;
use super::rep::{same_presentation, Representation};
use super::morphism::Morphism;
use super::structure::{radical_profile, socle_profile};

/// Why two representations were judged non-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoWitness {
    DimVector,
    HomDims,
    RadicalProfile,
    SocleProfile,
    NoInvertibleWithinBudget,
}

/// Isomorphism verdict: a `Yes` carries an exact invertible intertwiner; a
/// `No` carries the distinguishing invariant, and is flagged budget-limited
/// when every invariant agreed but the deterministic search found no
/// invertible hom.
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Yes(Morphism),
    No { witness: NonIsoWitness, budget_limited: bool },
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<IsoVerdict> {
    if !same_presentation(m, n) {
        return Err(crate::Error::PresentationMismatch);
    }
    if m.dim_vector() != n.dim_vector() {
        return Ok(IsoVerdict::No { witness: NonIsoWitness::DimVector, budget_limited: false });
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Yes(Morphism::identity(m)));
    }
    let hom_mn = hom_basis(m, n)?;
    let end_m = hom_basis(m, m)?.len();
    let end_n = hom_basis(n, n)?.len();
    let hom_nm = hom_basis(n, m)?.len();
    if !(hom_mn.len() == end_m && end_m == end_n && end_n == hom_nm) {
        return Ok(IsoVerdict::No { witness: NonIsoWitness::HomDims, budget_limited: false });
    }
    if radical_profile(m) != radical_profile(n) {
        return Ok(IsoVerdict::No { witness: NonIsoWitness::RadicalProfile, budget_limited: false });
    }
    if socle_profile(m) != socle_profile(n) {
        return Ok(IsoVerdict::No { witness: NonIsoWitness::SocleProfile, budget_limited: false });
    }
    for f in candidates(&hom_mn)? {
        if f.is_invertible() {
            return Ok(IsoVerdict::Yes(f));
        }
    }
    Ok(IsoVerdict::No {
        witness: NonIsoWitness::NoInvertibleWithinBudget,
        budget_limited: true,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiverrep::{AlgebraPresentation, Arrow, Quiver};

    fn line_presentation() -> Arc<AlgebraPresentation> {
        let quiver = Quiver::new(
            vec![0, 1],
            vec![Arrow { arrow_id: 0, source: 0, target: 1, label: "a".into() }],
        )
        .unwrap();
        Arc::new(AlgebraPresentation::new(quiver, vec![], 2, Default::default()).unwrap())
    }

    #[test]
    fn identity_is_isomorphism() {
        let pres = line_presentation();
        let s = Representation::simple(Arc::clone(&pres), 0).unwrap();
        match is_isomorphic(&s, &s).unwrap() {
            IsoVerdict::Yes(f) => assert!(f.is_invertible()),
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn different_simples_distinguished_by_dim_vector() {
        let pres = line_presentation();
        let s0 = Representation::simple(Arc::clone(&pres), 0).unwrap();
        let s1 = Representation::simple(Arc::clone(&pres), 1).unwrap();
        match is_isomorphic(&s0, &s1).unwrap() {
            IsoVerdict::No { witness, budget_limited } => {
                assert_eq!(witness, NonIsoWitness::DimVector);
                assert!(!budget_limited);
            }
            other => panic!("expected No, got {other:?}"),
        }
    }
}
