use fitting_core::algebra::{det_i64, parse_polynomial, rational_rank};
use fitting_core::{Budget, Monomial, PolyMatrix, Polynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2), 0..=3).prop_map(|terms| {
        Polynomial::normalize(
            terms
                .into_iter()
                .map(|(c, a, b)| (c, Monomial::from_pairs([(0, a), (1, b)]))),
        )
    })
}

fn square(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(poly(), n), n).prop_map(PolyMatrix::from_rows)
    })
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_is_transpose_invariant(a in square(4)) {
        prop_assert_eq!(a.determinant(), a.transpose().determinant());
    }

    #[test]
    fn cofactor_and_fraction_free_determinants_agree(a in square(4)) {
        prop_assert_eq!(a.determinant(), a.determinant_bareiss());
    }

    #[test]
    fn laplace_expansion_along_any_row(a in square(4), r in 0usize..4) {
        let r = r % a.rows();
        prop_assert_eq!(a.determinant_along_row(r), a.determinant());
    }

    #[test]
    fn determinant_is_multiplicative_on_scalars(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 3)) {
        let as_poly = PolyMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Polynomial::constant(x)).collect()).collect(),
        );
        let mut flat: Vec<i64> = rows.concat();
        let det = det_i64(&mut flat, 3).expect("small entries");
        prop_assert_eq!(as_poly.determinant(), Polynomial::constant(det));
    }

    #[test]
    fn rank_matches_largest_nonzero_minor(rows in int_matrix()) {
        let m = PolyMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Polynomial::constant(x)).collect()).collect(),
        );
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rank = rational_rank(&big);
        let b = Budget::default();
        let largest = (1..=rows.len().min(rows[0].len()))
            .rev()
            .find(|&t| m.minors(t as i64, &b).unwrap().iter().any(|p| !p.is_zero()))
            .unwrap_or(0);
        prop_assert_eq!(rank, largest);
    }

    #[test]
    fn polynomial_text_round_trip(p in poly()) {
        let names = vec!["x".to_string(), "y".to_string()];
        let text = p.format_with(&names);
        prop_assert_eq!(parse_polynomial(&text, &names).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }
}

#[test]
fn minors_respect_the_unit_and_zero_conventions() {
    let b = Budget::default();
    let m = PolyMatrix::from_rows(vec![vec![Polynomial::constant(2), Polynomial::constant(3)]]);
    assert_eq!(m.minors(0, &b).unwrap(), vec![Polynomial::one()]);
    assert_eq!(m.minors(-1, &b).unwrap(), vec![Polynomial::one()]);
    assert!(m.minors(2, &b).unwrap().iter().all(Polynomial::is_zero));
}
