//! Algebraic laws of the polynomial engine on random inputs.

mod common;

use common::leibniz_det;
use orbital_core::sympoly::{poisson, Monomial, Poly, PolyMatrix, Var};
use proptest::prelude::*;

fn var(n: usize) -> impl Strategy<Value = Var> {
    prop_oneof![
        8 => (1..=n, 1..=n).prop_map(|(i, j)| Var::Coord(i, j)),
        1 => Just(Var::Param),
    ]
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(n), 1u32..=2), 0..=3).prop_map(Monomial::from_pairs)
}

fn poly(n: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, monomial(n)), 0..=max_terms).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Poly::zero(), |acc, (c, m)| &acc + &Poly::term(c, m))
    })
}

/// A 4×4 matrix whose entries are sparse: each entry is zero with
/// probability one half, otherwise a short random polynomial.
fn sparse_matrix() -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop_oneof![1 => Just(Poly::zero()), 1 => poly(4, 2)], 16)
        .prop_map(|cells| PolyMatrix::from_fn(4, 4, |i, j| cells[(i - 1) * 4 + (j - 1)].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bracket_is_antisymmetric(p in poly(5, 4), q in poly(5, 4)) {
        prop_assert_eq!(poisson(&p, &q), -poisson(&q, &p));
    }

    #[test]
    fn bracket_satisfies_jacobi(p in poly(4, 4), q in poly(4, 4), r in poly(4, 4)) {
        let total = &(&poisson(&p, &poisson(&q, &r)) + &poisson(&q, &poisson(&r, &p))) + &poisson(&r, &poisson(&p, &q));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_is_a_derivation(p in poly(5, 4), q in poly(5, 4), r in poly(5, 4)) {
        let lhs = poisson(&p, &(&q * &r));
        let rhs = &(&poisson(&p, &q) * &r) + &(&q * &poisson(&p, &r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_round_trip(p in poly(4, 4), q in poly(4, 4)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), Some(p));
    }

    #[test]
    fn ring_laws(p in poly(3, 3), q in poly(3, 3), r in poly(3, 3)) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn det_matches_leibniz_on_sparse_matrices(m in sparse_matrix()) {
        let all = [1, 2, 3, 4];
        prop_assert_eq!(m.det(&all, &all).unwrap(), leibniz_det(&m, &all, &all));
    }

    #[test]
    fn det_vanishes_on_equal_columns(m in sparse_matrix(), a in 1usize..=4, b in 1usize..=4) {
        prop_assume!(a != b);
        let copy = PolyMatrix::from_fn(4, 4, |i, j| m.get(i, if j == b { a } else { j }).clone());
        prop_assert!(copy.det(&[1, 2, 3, 4], &[1, 2, 3, 4]).unwrap().is_zero());
    }
}
