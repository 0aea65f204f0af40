//! Property tests cutting across modules.

use proptest::prelude::*;

use crate::fieldlin::{self, FieldMatrix, Fp};

fn arb_matrix(q: u64) -> impl Strategy<Value = FieldMatrix> {
    (0usize..5, 0usize..5).prop_flat_map(move |(rows, cols)| {
        proptest::collection::vec(0..q, rows * cols).prop_map(move |entries| {
            let field = Fp::new(q).unwrap();
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| entries[i * cols..(i + 1) * cols].iter().map(|&x| x as i64).collect())
                .collect();
            FieldMatrix::from_rows(field, &data).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in arb_matrix(5)) {
        let ker = fieldlin::kernel_basis(&m);
        prop_assert_eq!(fieldlin::rank(&m) + ker.dim(), m.cols());
        for v in ker.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn row_reduce_idempotent(m in arb_matrix(3)) {
        let red = fieldlin::row_reduce(&m);
        let again = fieldlin::row_reduce(&red.rref);
        prop_assert_eq!(red.rref, again.rref);
    }
}
