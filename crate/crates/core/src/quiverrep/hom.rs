use std::collections::BTreeMap;

use crate::exactlin::RatMatrix;
use crate::{Error, Result};

use super::morphism::Morphism;
use super::rep::{same_presentation, Representation};
use super::quiver::VertexId;

/// Flattened coordinates of a would-be morphism: for each vertex in quiver
/// order, the block entries row-major.
fn unknown_layout(m: &Representation, n: &Representation) -> (Vec<(VertexId, usize, usize)>, usize) {
    let mut layout = Vec::new();
    let mut total = 0;
    for &v in &m.presentation().quiver().vertices {
        let rows = n.dim_at(v);
        let cols = m.dim_at(v);
        layout.push((v, rows, cols));
        total += rows * cols;
    }
    (layout, total)
}

/// Deterministic basis of `Hom(m, n)`, solved exactly from the intertwining
/// constraints.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    if !same_presentation(m, n) {
        return Err(Error::PresentationMismatch);
    }
    let (layout, unknowns) = unknown_layout(m, n);
    let mut offsets = BTreeMap::new();
    let mut off = 0;
    for (v, rows, cols) in &layout {
        offsets.insert(*v, off);
        off += rows * cols;
    }
    // One row of constraints per entry of N(a)*B_u - B_v*M(a) per arrow.
    let mut rows_data: Vec<Vec<crate::exactlin::Rat>> = Vec::new();
    for arrow in &m.presentation().quiver().arrows {
        let u = arrow.source;
        let v = arrow.target;
        let ma = m.arrow_matrix(arrow.arrow_id);
        let na = n.arrow_matrix(arrow.arrow_id);
        let (du_m, dv_n) = (m.dim_at(u), n.dim_at(v));
        for r in 0..dv_n {
            for c in 0..du_m {
                let mut row = vec![crate::exactlin::Rat::zero(); unknowns];
                // + N(a)[r,k] * Bu[k,c]
                for k in 0..n.dim_at(u) {
                    let coef = na.at(r, k);
                    if !coef.is_zero() {
                        row[offsets[&u] + k * m.dim_at(u) + c] =
                            row[offsets[&u] + k * m.dim_at(u) + c].clone() + coef.clone();
                    }
                }
                // - Bv[r,l] * M(a)[l,c]
                for l in 0..m.dim_at(v) {
                    let coef = ma.at(l, c);
                    if !coef.is_zero() {
                        let idx = offsets[&v] + r * m.dim_at(v) + l;
                        row[idx] = row[idx].clone() - coef.clone();
                    }
                }
                rows_data.push(row);
            }
        }
    }
    let constraints = if rows_data.is_empty() {
        RatMatrix::zeros(0, unknowns)
    } else {
        RatMatrix::from_rows(&rows_data)
    };
    let null = constraints.nullspace_basis();
    let mut basis = Vec::with_capacity(null.cols());
    for j in 0..null.cols() {
        let mut blocks = BTreeMap::new();
        for (v, rows, cols) in &layout {
            let mut b = RatMatrix::zeros(*rows, *cols);
            for r in 0..*rows {
                for c in 0..*cols {
                    b.set(r, c, null.at(offsets[v] + r * cols + c, j).clone());
                }
            }
            blocks.insert(*v, b);
        }
        basis.push(Morphism::new_unchecked(m.clone(), n.clone(), blocks)?);
    }
    Ok(basis)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Writes a morphism's blocks as one flat column, matching the unknown
/// layout used by `hom_basis` (needed to express homs in a hom basis).
pub(crate) fn vectorize(f: &Morphism) -> RatMatrix {
    let (layout, total) = unknown_layout(f.source(), f.target());
    let mut col = RatMatrix::zeros(total, 1);
    let mut off = 0;
    for (v, rows, cols) in &layout {
        let b = f.block(*v);
        for r in 0..*rows {
            for c in 0..*cols {
                col.set(off + r * cols + c, 0, b.at(r, c).clone());
            }
        }
        off += rows * cols;
    }
    col
}

/// Expresses `f` as a coordinate column in the given hom basis.
pub(crate) fn coordinates_in(basis: &[Morphism], f: &Morphism) -> Option<RatMatrix> {
    let target_vec = vectorize(f);
    if basis.is_empty() {
        return target_vec.is_zero().then(|| RatMatrix::zeros(0, 1));
    }
    let mut mat = vectorize(&basis[0]);
    for b in &basis[1..] {
        mat = mat.hstack(&vectorize(b));
    }
    mat.solve(&target_vec)
}
