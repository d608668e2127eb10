//! State-dimension law of `x(t+1) = A ⋉→ x(t)` for `A ∈ M_{m×km}`.
//!
//! One step maps `V_r` into `V_{lcm(km, r)/k}`. Besides the plain recursion
//! this module decomposes the initial dimension `p` against the primes of `k`
//! and `m` ([`DimensionProfile`]) and evaluates the three-case closed form,
//! the invariant dimension `r*` and the invariant time.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization};
use crate::linalg::Matrix;

/// `(m, k)` for a dimension-bounded `A ∈ M_{m×km}`; errors when `m ∤ n`.
pub fn bounded_shape<T>(a: &Matrix<T>) -> Result<(u64, u64)>
where
    T: crate::Scalar,
{
    let (rows, cols) = a.shape();
    if cols % rows != 0 {
        return Err(Error::NotDimensionBounded { rows, cols });
    }
    Ok((rows as u64, (cols / rows) as u64))
}

fn check_positive(m: u64, k: u64, p: u64) -> Result<()> {
    if m == 0 || k == 0 || p == 0 {
        return Err(Error::invalid(format!(
            "m, k and p must be positive (got m={m}, k={k}, p={p})"
        )));
    }
    Ok(())
}

/// Dimension after one step: `lcm(k·m, r) / k`.
pub fn step_dim(m: u64, k: u64, r: u64) -> Result<u64> {
    check_positive(m, k, r)?;
    let km = u128::from(k) * u128::from(m);
    let next = km.lcm(&u128::from(r)) / u128::from(k);
    u64::try_from(next).map_err(|_| Error::Overflow("step_dim"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTrajectory {
    pub m: u64,
    pub k: u64,
    pub p: u64,
    /// `dims[t] = r(t)`, starting with `r(0) = p`.
    pub dims: Vec<u64>,
}

/// `r(0), …, r(horizon)` by direct recursion.
pub fn dim_trajectory(m: u64, k: u64, p: u64, horizon: usize) -> Result<DimTrajectory> {
    check_positive(m, k, p)?;
    let mut dims = Vec::with_capacity(horizon + 1);
    dims.push(p);
    for _ in 0..horizon {
        let last = *dims.last().expect("nonempty");
        dims.push(step_dim(m, k, last)?);
    }
    Ok(DimTrajectory { m, k, p, dims })
}

/// A prime `k_i` of `k` and how it appears in `p` after removing `k^α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPrime {
    pub prime: u64,
    /// Exponent in `k`.
    pub mu: u32,
    /// Exponent in `p / k^α`.
    pub beta: u32,
    /// `beta / mu`
    pub tau: u32,
    /// `beta % mu`
    pub eta: u32,
    /// Exponent of this prime in `m` (0 unless `m` and `k` share it).
    pub in_m: u32,
}

/// A prime `m_j` of `m` coprime to `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPrime {
    pub prime: u64,
    /// Exponent in `m`.
    pub nu: u32,
    /// Exponent in `p`.
    pub theta: u32,
}

impl MPrime {
    /// Primes with `θ ≥ ν` survive into `r*` with exponent `θ − ν`.
    pub fn surplus(&self) -> Option<u32> {
        self.theta.checked_sub(self.nu)
    }
}

/// Prime decomposition `p = k^α · ∏ k_i^{β_i} · ∏ m_j^{θ_j} · p₁` and the
/// quantities derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionProfile {
    pub m: u64,
    pub k: u64,
    pub p: u64,
    pub alpha: u32,
    /// Sorted by `tau` ascending (ties by prime).
    pub k_primes: Vec<KPrime>,
    /// Number of `k_primes` with `tau == 0`.
    pub d: usize,
    /// Primes with `ν > θ` first, then those with `ν ≤ θ`; ascending within each group.
    pub m_primes: Vec<MPrime>,
    /// Cofactor of `p` coprime to `k·m`.
    pub p1: u64,
    pub r_star: u64,
    /// `α + max τ + 1`
    pub t_star_bound: usize,
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("prime power"))
}

fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("dimension product"))
}

impl DimensionProfile {
    pub fn build(m: u64, k: u64, p: u64) -> Result<Self> {
        check_positive(m, k, p)?;
        let fk = factorize(k)?;
        let fm = factorize(m)?;
        let fp = factorize(p)?;

        let alpha = fk
            .factors()
            .iter()
            .map(|(&q, &mu)| fp.exponent(q) / mu)
            .min()
            .unwrap_or(0);

        let mut k_primes: Vec<KPrime> = fk
            .factors()
            .iter()
            .map(|(&prime, &mu)| {
                let beta = fp.exponent(prime) - alpha * mu;
                KPrime {
                    prime,
                    mu,
                    beta,
                    tau: beta / mu,
                    eta: beta % mu,
                    in_m: fm.exponent(prime),
                }
            })
            .collect();
        k_primes.sort_by_key(|kp| (kp.tau, kp.prime));
        let d = k_primes.iter().filter(|kp| kp.tau == 0).count();

        let mut m_primes: Vec<MPrime> = fm
            .factors()
            .iter()
            .filter(|(q, _)| !k.is_multiple_of(**q))
            .map(|(&prime, &nu)| MPrime {
                prime,
                nu,
                theta: fp.exponent(prime),
            })
            .collect();
        m_primes.sort_by_key(|mp| (mp.nu <= mp.theta, mp.prime));

        let p1 = residual_cofactor(&fp, m, k)?;

        let mut r_star = checked_mul(m, p1)?;
        for mp in &m_primes {
            if let Some(e) = mp.surplus() {
                r_star = checked_mul(r_star, checked_pow(mp.prime, e)?)?;
            }
        }
        let max_tau = k_primes.iter().map(|kp| kp.tau).max().unwrap_or(0);
        let t_star_bound = (alpha + max_tau) as usize + 1;

        Ok(DimensionProfile {
            m,
            k,
            p,
            alpha,
            k_primes,
            d,
            m_primes,
            p1,
            r_star,
            t_star_bound,
        })
    }

    /// Partition of `m_primes` into `ν > θ` (absorbed by `m`) and `ν ≤ θ`.
    pub fn m_primes_split(&self) -> (&[MPrime], &[MPrime]) {
        let l = self
            .m_primes
            .iter()
            .take_while(|mp| mp.nu > mp.theta)
            .count();
        self.m_primes.split_at(l)
    }

    pub fn invariant_dim(&self) -> u64 {
        self.r_star
    }

    /// Upper bound on the invariant time: `r(t) = r*` for every `t ≥` this.
    pub fn invariant_time_bound(&self) -> usize {
        self.t_star_bound
    }

    /// Multiplies the decomposition back together; equals `p`.
    pub fn reconstruct(&self) -> Result<u64> {
        let mut acc = self.p1;
        for kp in &self.k_primes {
            acc = checked_mul(acc, checked_pow(kp.prime, kp.beta + self.alpha * kp.mu)?)?;
        }
        for mp in &self.m_primes {
            acc = checked_mul(acc, checked_pow(mp.prime, mp.theta)?)?;
        }
        Ok(acc)
    }

    /// `r(t)` for `t ≥ 1` without iterating.
    ///
    /// Three regimes, by `t` against `α` and the sorted `τ_i`:
    ///
    /// 1. `t ≤ α`: every `k_i` carries `(α − t)μ_i + β_i`;
    /// 2. `α + τ_j < t ≤ α + τ_{j+1}`: only primes with `τ_i ≥ t − α` remain,
    ///    with exponent `(τ_i + α − t)μ_i + η_i`;
    /// 3. `t ≥ α + max τ + 1`: `r(t) = r*`.
    ///
    /// When a `k_i` also divides `m`, the leading factor `m` already carries
    /// `in_m` copies of it, so only the excess over `in_m` is multiplied in.
    pub fn closed_form_dim(&self, t: usize) -> Result<u64> {
        if t == 0 {
            return Err(Error::invalid(
                "closed form holds for t >= 1; r(0) is p itself",
            ));
        }
        let alpha = self.alpha as usize;
        let mut r = self.r_star;
        if t >= self.t_star_bound {
            return Ok(r);
        }
        for kp in &self.k_primes {
            let exponent = if t <= alpha {
                (alpha - t) as u64 * u64::from(kp.mu) + u64::from(kp.beta)
            } else if kp.tau as usize + alpha >= t {
                (kp.tau as usize + alpha - t) as u64 * u64::from(kp.mu) + u64::from(kp.eta)
            } else {
                continue;
            };
            let excess = exponent.saturating_sub(u64::from(kp.in_m));
            let excess = u32::try_from(excess).map_err(|_| Error::Overflow("closed_form_dim"))?;
            r = checked_mul(r, checked_pow(kp.prime, excess)?)?;
        }
        Ok(r)
    }
}

fn residual_cofactor(fp: &Factorization, m: u64, k: u64) -> Result<u64> {
    fp.factors()
        .iter()
        .filter(|(q, _)| !m.is_multiple_of(**q) && !k.is_multiple_of(**q))
        .try_fold(1u64, |acc, (&q, &e)| checked_mul(acc, checked_pow(q, e)?))
}

/// Smallest `t` with `r(t) = r*`. Never exceeds the invariant-time bound.
pub fn minimal_invariant_time(m: u64, k: u64, p: u64) -> Result<usize> {
    let profile = DimensionProfile::build(m, k, p)?;
    let traj = dim_trajectory(m, k, p, profile.t_star_bound)?;
    Ok(traj
        .dims
        .iter()
        .position(|&r| r == profile.r_star)
        .expect("r(t) = r* at the bound"))
}

/// Answer to "is `r` a reachable dimension?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReachability {
    pub r: u64,
    /// Every `t ∈ [0, t*-bound]` with `r(t) = r`, ascending.
    pub witnesses: Vec<usize>,
    /// `r = p`, i.e. `t = 0` is among the witnesses.
    pub at_initial: bool,
    /// When `r = r*`: the minimal invariant time, from which on every `t` is a witness.
    pub invariant_from: Option<usize>,
}

impl DimReachability {
    pub fn is_reachable(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

pub fn is_reachable_dim(m: u64, k: u64, p: u64, r: u64) -> Result<DimReachability> {
    if r == 0 {
        return Err(Error::invalid("dimension r must be positive"));
    }
    let profile = DimensionProfile::build(m, k, p)?;
    let traj = dim_trajectory(m, k, p, profile.t_star_bound)?;
    let witnesses: Vec<usize> = traj
        .dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == r)
        .map(|(t, _)| t)
        .collect();
    let invariant_from = (r == profile.r_star).then(|| {
        traj.dims
            .iter()
            .position(|&d| d == r)
            .expect("r* is attained")
    });
    Ok(DimReachability {
        r,
        at_initial: witnesses.first() == Some(&0),
        witnesses,
        invariant_from,
    })
}
