use e510::exact::{nullspace, rank, Echelon, Rational, SparseMatrix, SparseVector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #[test]
    fn rational_text_round_trip(x in rational()) {
        let back: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity_holds(rows in matrix()) {
        let m = SparseMatrix::from_ints(&rows);
        let ker = nullspace(&m);
        prop_assert_eq!(rank(&m) + ker.len(), m.ncols());
        for k in &ker {
            prop_assert!(m.mul_vec(k).is_zero());
        }
    }

    #[test]
    fn echelon_membership_matches_rank(rows in matrix(), probe in prop::collection::vec(-3i64..=3, 6)) {
        let m = SparseMatrix::from_ints(&rows);
        let mut e = Echelon::new(m.ncols());
        for r in m.rows() {
            e.insert(r);
        }
        let v = SparseVector::from_ints(&probe[..m.ncols()]);
        let mut bigger = SparseMatrix::from_ints(&rows);
        bigger.push_row(v.clone());
        prop_assert_eq!(e.contains(&v), rank(&bigger) == rank(&m));
    }
}
