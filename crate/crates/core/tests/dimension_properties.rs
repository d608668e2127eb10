use proptest::prelude::*;
use stp_reach::dimension::{
    dim_trajectory, is_reachable_dim, minimal_invariant_time, step_dim, DimensionProfile,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `r(t+1) = lcm(km, r)/k`, written out independently.
fn oracle_step(m: u64, k: u64, r: u64) -> u64 {
    let km = k * m;
    km / gcd(km, r) * r / k
}

fn triple() -> impl Strategy<Value = (u64, u64, u64)> {
    (1u64..=50, 1u64..=50, 1u64..=1_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn step_matches_oracle((m, k, r) in triple()) {
        prop_assert_eq!(step_dim(m, k, r).unwrap(), oracle_step(m, k, r));
    }

    #[test]
    fn closed_form_matches_recursion((m, k, p) in triple()) {
        let profile = DimensionProfile::build(m, k, p).unwrap();
        let horizon = profile.t_star_bound + 3;
        let traj = dim_trajectory(m, k, p, horizon).unwrap();
        for t in 1..=horizon {
            prop_assert_eq!(profile.closed_form_dim(t).unwrap(), traj.dims[t], "t = {}", t);
        }
    }

    #[test]
    fn m_divides_every_later_dimension((m, k, p) in triple()) {
        let traj = dim_trajectory(m, k, p, 8).unwrap();
        prop_assert_eq!(traj.dims[0], p);
        for &r in &traj.dims[1..] {
            prop_assert_eq!(r % m, 0);
        }
    }

    #[test]
    fn decomposition_reconstructs_p((m, k, p) in triple()) {
        let profile = DimensionProfile::build(m, k, p).unwrap();
        prop_assert_eq!(profile.reconstruct().unwrap(), p);
        prop_assert_eq!(profile.invariant_dim(), profile.r_star);
        prop_assert!(profile.k_primes.windows(2).all(|w| (w[0].tau, w[0].prime) <= (w[1].tau, w[1].prime)));
        prop_assert_eq!(profile.d, profile.k_primes.iter().filter(|kp| kp.tau == 0).count());
    }

    #[test]
    fn invariant_dimension_is_a_fixed_point((m, k, p) in triple()) {
        let profile = DimensionProfile::build(m, k, p).unwrap();
        prop_assert_eq!(oracle_step(m, k, profile.r_star), profile.r_star);
        let t_min = minimal_invariant_time(m, k, p).unwrap();
        prop_assert!(t_min <= profile.invariant_time_bound());
        let traj = dim_trajectory(m, k, p, profile.t_star_bound + 3).unwrap();
        prop_assert!(traj.dims[t_min..].iter().all(|&r| r == profile.r_star));
        if t_min > 0 {
            prop_assert_ne!(traj.dims[t_min - 1], profile.r_star);
        }
    }

    #[test]
    fn reachable_dimensions_are_the_trajectory((m, k, p) in triple(), probe in 1u64..=2_000) {
        let profile = DimensionProfile::build(m, k, p).unwrap();
        let traj = dim_trajectory(m, k, p, profile.t_star_bound).unwrap();
        let answer = is_reachable_dim(m, k, p, probe).unwrap();
        prop_assert_eq!(answer.is_reachable(), traj.dims.contains(&probe));
        prop_assert_eq!(answer.at_initial, probe == p);
        for &t in &answer.witnesses {
            prop_assert_eq!(traj.dims[t], probe);
        }
    }
}

#[test]
fn closed_form_rejects_time_zero() {
    assert!(DimensionProfile::build(2, 3, 5)
        .unwrap()
        .closed_form_dim(0)
        .is_err());
}

#[test]
fn zero_parameters_are_rejected() {
    assert!(DimensionProfile::build(0, 2, 3).is_err());
    assert!(dim_trajectory(1, 0, 3, 2).is_err());
    assert!(is_reachable_dim(1, 2, 3, 0).is_err());
}
