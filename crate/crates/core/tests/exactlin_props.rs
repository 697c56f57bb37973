//! Property tests for the exact linear algebra kernel: rank-nullity, rref
//! idempotence, exact solvability, and the subspace dimension formula.

use artau_core::exactlin::{subspace_ops, Rat, RatMatrix};
use proptest::prelude::*;

fn small_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-6i64..=6, 1i64..=4), r * c)
            .prop_map(move |entries| {
                let rats: Vec<Rat> = entries.into_iter().map(|(n, d)| Rat::new(n, d)).collect();
                RatMatrix::new(r, c, rats)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_cols(m in small_matrix(8)) {
        let rank = m.rank();
        let nullity = m.nullspace_basis().cols();
        prop_assert_eq!(rank + nullity, m.cols());
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(8)) {
        let once = m.rref().reduced;
        let twice = once.rref().reduced;
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn nullspace_columns_are_killed(m in small_matrix(8)) {
        let k = m.nullspace_basis();
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_is_exact_on_consistent_systems(
        a in small_matrix(6),
        xs in proptest::collection::vec((-5i64..=5, 1i64..=3), 1..=6)
    ) {
        // Build a consistent right-hand side b = a * x.
        let x = RatMatrix::new(
            a.cols(),
            1,
            (0..a.cols())
                .map(|i| {
                    let (n, d) = xs[i % xs.len()];
                    Rat::new(n, d)
                })
                .collect(),
        );
        let b = a.mul(&x);
        let sol = a.solve(&b).expect("consistent by construction");
        prop_assert_eq!(a.mul(&sol), b);
    }

    #[test]
    fn subspace_dimension_formula(ma in small_matrix(8), mb in small_matrix(8)) {
        let ambient = ma.rows().max(mb.rows());
        let pad = |m: &RatMatrix| -> RatMatrix {
            let mut out = RatMatrix::zeros(ambient, m.cols());
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.set(r, c, m.at(r, c).clone());
                }
            }
            out
        };
        let a = pad(&ma).image_basis();
        let b = pad(&mb).image_basis();
        let ops = subspace_ops(&a, &b, ambient);
        prop_assert_eq!(
            ops.sum.cols() + ops.intersection.cols(),
            a.cols() + b.cols()
        );
    }
}
