mod common;

use common::strategies::*;
use common::*;
use proptest::prelude::*;
use stp_reach::annihilator::{
    eval_on_vector, is_annihilator, min_annihilator_space, min_annihilator_union,
    min_annihilator_vector, union_annihilators,
};
use stp_reach::dimension::{bounded_shape, DimensionProfile};
use stp_reach::stp::power_vprod;
use stp_reach::{Poly, RMatrix, RVector, Rational};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(500)
}

fn bounded_with_vector() -> impl Strategy<Value = (RMatrix, RVector)> {
    (bounded_matrix(2, 4), 1usize..=8).prop_flat_map(|(a, r)| (Just(a), vector_of(r)))
}

/// Oracle iterates `x, A⋉→x, …` built from the materialized product and
/// lifted to their common dimension.
fn oracle_chain(a: &RMatrix, x: &RVector, len: usize) -> Vec<Vec<Rational>> {
    let mut chain = vec![x.as_slice().to_vec()];
    while chain.len() < len {
        let next = oracle_vprod(a, chain.last().unwrap());
        chain.push(next);
    }
    let s = chain.iter().map(Vec::len).fold(1, lcm);
    chain.iter().map(|v| oracle_lift(v, s)).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn minimal_annihilator_annihilates((a, x) in bounded_with_vector()) {
        let qx = min_annihilator_vector(&a, &x).unwrap();
        prop_assert!(qx.is_monic());
        prop_assert!(is_annihilator(&qx, &a, &x).unwrap());
    }

    #[test]
    fn minimal_annihilator_is_minimal((a, x) in bounded_with_vector()) {
        prop_assume!(!x.is_zero());
        let d = min_annihilator_vector(&a, &x).unwrap().degree().unwrap();
        // degree d ⇔ the first d iterates are independent and the first d+1 are not
        prop_assert_eq!(oracle_rank(&oracle_chain(&a, &x, d)), d);
        prop_assert_eq!(oracle_rank(&oracle_chain(&a, &x, d + 1)), d);
    }

    #[test]
    fn every_annihilator_is_a_multiple(
        (a, x) in bounded_with_vector(),
        g in prop::collection::vec(-3i64..=3, 1..4),
    ) {
        let g = Poly::from_i64s(&g);
        prop_assume!(!g.is_zero());
        let qx = min_annihilator_vector(&a, &x).unwrap();
        let multiple = qx.mul(&g);
        prop_assert!(is_annihilator(&multiple, &a, &x).unwrap());
        // a non-multiple of strictly smaller degree never annihilates
        if let Some(d) = qx.degree().filter(|&d| d > 0) {
            let truncated = Poly::new(qx.coeffs()[..d].to_vec());
            prop_assume!(!truncated.is_zero());
            prop_assert!(!is_annihilator(&truncated, &a, &x).unwrap());
        }
    }

    #[test]
    fn vector_annihilators_divide_the_union((a, p) in (bounded_matrix(2, 3), 1usize..=6)) {
        let u = union_annihilators(&a, p).unwrap();
        for q in &u.per_generator {
            prop_assert!(q.divides(&u.union));
        }
        let (m, k) = bounded_shape(&a).unwrap();
        let r_star = DimensionProfile::build(m, k, p as u64).unwrap().r_star as usize;
        prop_assert!(u.union.divides(&min_annihilator_space(&a, r_star).unwrap()));
        for i in 0..p {
            let gen = power_vprod(&a, u.t_star, &RVector::unit(p, i).unwrap());
            prop_assert!(is_annihilator(&u.union, &a, &gen).unwrap());
        }
    }

    #[test]
    fn square_case_matches_ordinary_evaluation(
        (a, x) in square_matrix(6).prop_flat_map(|a| { let n = a.rows(); (Just(a), vector_of(n)) }),
        coeffs in prop::collection::vec(-3i64..=3, 1..5),
    ) {
        let g = Poly::from_i64s(&coeffs);
        prop_assume!(!g.is_zero());
        let got = eval_on_vector(&g, &a, &x).unwrap();
        prop_assert_eq!(got.into_vec(), classical_eval(&g, &a, x.as_slice()));
    }

    #[test]
    fn square_case_vector_annihilator_is_classical(
        (a, x) in square_matrix(6).prop_flat_map(|a| { let n = a.rows(); (Just(a), vector_of(n)) }),
    ) {
        prop_assert_eq!(min_annihilator_vector(&a, &x).unwrap(), classical_vector_min_poly(&a, x.as_slice()));
    }
}

#[test]
fn square_case_space_annihilator_is_the_minimal_polynomial() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let a = RMatrix::from_fn(n, n, |_, _| q(rng.gen_range(-3..=3))).unwrap();
        assert_eq!(
            min_annihilator_space(&a, n).unwrap(),
            classical_min_poly(&a),
            "A = {a}"
        );
    }
}

#[test]
fn example_chain_dependences() {
    let a = a_2x4();
    // A⋉→δ_3^1 and A⋉→δ_3^3 share q1; A⋉→δ_3^2 has q2
    for (i, expected) in [(1, q1()), (2, q2()), (3, q1())] {
        let x = delta(3, i);
        assert_eq!(min_annihilator_vector(&a, &x).unwrap(), expected);
        let ax = power_vprod(&a, 1, &x);
        assert_eq!(min_annihilator_vector(&a, &ax).unwrap(), expected);
    }
    // q1 = (z - 1)·q2, so the union over the generators is just q1
    assert_eq!(q1(), poly(&[-1, 1]).mul(&q2()));
    assert_eq!(min_annihilator_union(&a, 3).unwrap(), q1());
    assert_eq!(min_annihilator_space(&a, 6).unwrap(), f6());
}

#[test]
fn zero_vector_has_unit_annihilator() {
    let x = RVector::zeros(3).unwrap();
    assert_eq!(min_annihilator_vector(&a_2x4(), &x).unwrap(), Poly::one());
}
