//! Deterministic enumeration of candidate hom-space elements: basis elements
//! first, then all nonzero {-2,-1,1,2}-coefficient combinations of two and
//! three basis elements, in index order. Shared by the isomorphism search,
//! Fitting splitting and short-exact-sequence realization.

use crate::exactlin::Rat;
use crate::Result;

use super::morphism::Morphism;

const COEFFS: [i64; 4] = [1, -1, 2, -2];

pub(crate) fn candidates(basis: &[Morphism]) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for b in basis {
        out.push(b.clone());
    }
    let n = basis.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for ci in COEFFS {
                for cj in COEFFS {
                    let f = basis[i]
                        .scale(&Rat::from_int(ci))
                        .add(&basis[j].scale(&Rat::from_int(cj)))?;
                    out.push(f);
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for ci in COEFFS {
                    for cj in COEFFS {
                        for ck in COEFFS {
                            let f = basis[i]
                                .scale(&Rat::from_int(ci))
                                .add(&basis[j].scale(&Rat::from_int(cj)))?
                                .add(&basis[k].scale(&Rat::from_int(ck)))?;
                            out.push(f);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
