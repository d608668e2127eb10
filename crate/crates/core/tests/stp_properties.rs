mod common;

use common::strategies::*;
use common::*;
use proptest::prelude::*;
use stp_reach::stp::{common_dim, kron, lift, stp, vadd, vprod, vprod_dim, vsum};
use stp_reach::{RMatrix, RVector};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(500)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn kron_matches_index_formula(a in small_matrix(4), b in small_matrix(4)) {
        prop_assert_eq!(dense(&kron(&a, &b)), naive_kron(&dense(&a), &dense(&b)));
    }

    #[test]
    fn stp_matches_materialized_definition(a in small_matrix(4), b in small_matrix(4)) {
        prop_assert_eq!(dense(&stp(&a, &b)), oracle_stp(&a, &b));
    }

    #[test]
    fn vprod_kernel_matches_materialized_definition(a in small_matrix(8), x in small_vector(8)) {
        let got = vprod(&a, &x);
        prop_assert_eq!(got.dim(), vprod_dim(a.rows(), a.cols(), x.dim()));
        prop_assert_eq!(got.into_vec(), oracle_vprod(&a, x.as_slice()));
    }

    #[test]
    fn vprod_dimension_law(rows in 1usize..=8, cols in 1usize..=8, r in 1usize..=8) {
        let s = lcm(cols, r);
        prop_assert_eq!(vprod_dim(rows, cols, r), rows * s / cols);
    }

    #[test]
    fn vprod_is_linear(
        (a, x, y) in small_matrix(6).prop_flat_map(|a| {
            (Just(a), (1usize..=6).prop_flat_map(|r| (vector_of(r), vector_of(r))))
        }).prop_map(|(a, (x, y))| (a, x, y)),
        c in rational(),
        d in rational(),
    ) {
        let combo = x.scale(&c).add(&y.scale(&d)).unwrap();
        let lhs = vprod(&a, &combo);
        let rhs = vprod(&a, &x).scale(&c).add(&vprod(&a, &y).scale(&d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vprod_composes_with_stp(a in small_matrix(4), b in small_matrix(4), x in small_vector(6)) {
        let lhs = vprod(&stp(&a, &b), &x);
        let rhs = vprod(&a, &vprod(&b, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lift_matches_kron_with_ones(x in small_vector(6), factor in 1usize..=5) {
        let s = x.dim() * factor;
        prop_assert_eq!(lift(&x, s).unwrap().into_vec(), oracle_lift(x.as_slice(), s));
    }

    #[test]
    fn lift_composes(x in small_vector(5), f1 in 1usize..=4, f2 in 1usize..=4) {
        let once = lift(&x, x.dim() * f1 * f2).unwrap();
        let twice = lift(&lift(&x, x.dim() * f1).unwrap(), x.dim() * f1 * f2).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn vadd_is_lifted_addition(x in small_vector(6), y in small_vector(6)) {
        let s = lcm(x.dim(), y.dim());
        let expected: Vec<_> = oracle_lift(x.as_slice(), s)
            .into_iter()
            .zip(oracle_lift(y.as_slice(), s))
            .map(|(a, b)| a + b)
            .collect();
        prop_assert_eq!(vadd(&x, &y).into_vec(), expected);
        prop_assert_eq!(vadd(&x, &y), vadd(&y, &x));
    }

    #[test]
    fn vsum_equals_left_fold_of_vadd(
        xs in prop::collection::vec(small_vector(6), 1..5),
        seed in prop::collection::vec(rational(), 5),
    ) {
        let coeffs = seed[..xs.len()].to_vec();
        let folded = xs
            .iter()
            .zip(&coeffs)
            .map(|(x, c)| x.scale(c))
            .reduce(|acc, x| vadd(&acc, &x))
            .unwrap();
        let summed = vsum(&xs, &coeffs).unwrap();
        prop_assert_eq!(summed.dim(), common_dim(xs.iter().map(RVector::dim)));
        prop_assert_eq!(summed, folded);
    }
}

#[test]
fn vprod_on_identity_lifts_the_vector() {
    let x = rvec(&[1, -2, 3]);
    let i2 = RMatrix::identity(2).unwrap();
    assert_eq!(vprod(&i2, &x), lift(&x, 6).unwrap());
}

#[test]
fn lift_rejects_non_multiple() {
    assert!(lift(&rvec(&[1, 2]), 3).is_err());
}

#[test]
fn vsum_rejects_empty_and_ragged_input() {
    assert!(vsum::<stp_reach::Rational>(&[], &[]).is_err());
    assert!(vsum(&[rvec(&[1])], &[q(1), q(2)]).is_err());
}

#[test]
fn f64_and_rational_vprod_agree_on_integers() {
    let a = a_2x4();
    let x = rvec(&[2, -1, 0]);
    let af = a.map(|v| v.to_integer().to_string().parse::<f64>().unwrap());
    let xf = x.map(|v| v.to_integer().to_string().parse::<f64>().unwrap());
    let exact = vprod(&a, &x).map(|v| v.to_integer().to_string().parse::<f64>().unwrap());
    assert_eq!(vprod(&af, &xf), exact);
}
