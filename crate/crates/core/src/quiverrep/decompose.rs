use crate::Result;

use super::budget::candidates;
use super::hom::hom_basis;
use super::rep::Representation;

/// An indecomposable factor found by Fitting splitting, with the dimension
/// of its endomorphism algebra as a certificate of how hard it resisted.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Representation,
    pub end_dim: usize,
}

/// Krull-Schmidt decomposition by Fitting's lemma: for each enumerated
/// endomorphism `f` (basis elements, then small integer combinations), the
/// stable power `f^N` with `N = total dim` splits `m` into kernel and image;
/// recurse until nothing splits within the budget.
pub fn fitting_decompose(m: &Representation) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    decompose_into(m, &mut out)?;
    out.sort_by(|a, b| {
        (a.rep.total_dim(), a.rep.dim_vector().clone())
            .cmp(&(b.rep.total_dim(), b.rep.dim_vector().clone()))
    });
    Ok(out)
}

fn decompose_into(m: &Representation, out: &mut Vec<Summand>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_basis(m, m)?;
    let n = m.total_dim();
    for f in candidates(&end)? {
        if f.is_scalar() {
            continue;
        }
        let stable = f.pow(n)?;
        let (ker, _) = stable.kernel();
        let (im, _) = stable.image();
        if ker.total_dim() > 0 && im.total_dim() > 0 {
            debug_assert_eq!(ker.total_dim() + im.total_dim(), n);
            decompose_into(&ker, out)?;
            decompose_into(&im, out)?;
            return Ok(());
        }
    }
    out.push(Summand { rep: m.clone(), end_dim: end.len() });
    Ok(())
}
