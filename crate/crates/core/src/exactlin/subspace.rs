use super::RatMatrix;

/// Sum, intersection and containment data for two subspaces given by bases.
pub struct SubspaceOps {
    pub sum: RatMatrix,
    pub intersection: RatMatrix,
    pub a_in_b: bool,
    pub b_in_a: bool,
}

/// Combines two subspaces of the same ambient space.
///
/// `basis_a` and `basis_b` are matrices whose columns are linearly
/// independent vectors of length `ambient_dim`. The sum is computed by
/// concatenation followed by a canonical image basis; the intersection via
/// the kernel of the block matrix `[A | -B]`. Panics on an ambient mismatch.
pub fn subspace_ops(basis_a: &RatMatrix, basis_b: &RatMatrix, ambient_dim: usize) -> SubspaceOps {
    assert_eq!(basis_a.rows(), ambient_dim, "basis_a ambient mismatch");
    assert_eq!(basis_b.rows(), ambient_dim, "basis_b ambient mismatch");
    let sum = basis_a.hstack(basis_b).image_basis();

    let block = basis_a.hstack(&basis_b.scale(&-super::Rat::one()));
    let null = block.nullspace_basis();
    // A column (x; y) of the kernel satisfies A x = B y, so A x lies in both.
    let mut x_part = RatMatrix::zeros(basis_a.cols(), null.cols());
    for r in 0..basis_a.cols() {
        for c in 0..null.cols() {
            x_part.set(r, c, null.at(r, c).clone());
        }
    }
    let intersection = basis_a.mul(&x_part).image_basis();

    let a_in_b = sum.cols() == basis_b.cols();
    let b_in_a = sum.cols() == basis_a.cols();
    SubspaceOps { sum, intersection, a_in_b, b_in_a }
}

/// True if every column of `inner` lies in the column span of `outer`.
pub fn is_contained(inner: &RatMatrix, outer: &RatMatrix) -> bool {
    assert_eq!(inner.rows(), outer.rows(), "ambient mismatch");
    outer.solve(inner).is_some()
}

/// True if the two column spans coincide.
pub fn same_span(a: &RatMatrix, b: &RatMatrix) -> bool {
    is_contained(a, b) && is_contained(b, a)
}
