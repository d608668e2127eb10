//! Test-only oracles, written directly from the definitions and sharing no
//! code paths with the library beyond its container types.
#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::{One, Zero};
use stp_reach::{Poly, RMatrix, RVector, Rational};

pub type Dense = Vec<Vec<Rational>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn dense(a: &RMatrix) -> Dense {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

pub fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

/// Index-formula Kronecker product: ((a·br + b), (c·bc + d)) = A[a][c]·B[b][d].
pub fn naive_kron(a: &Dense, b: &Dense) -> Dense {
    let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![q(0); ac * bc]; ar * br];
    for ia in 0..ar {
        for ic in 0..ac {
            for ib in 0..br {
                for id in 0..bc {
                    out[ia * br + ib][ic * bc + id] = a[ia][ic].clone() * b[ib][id].clone();
                }
            }
        }
    }
    out
}

pub fn naive_matmul(a: &Dense, b: &Dense) -> Dense {
    assert_eq!(a[0].len(), b.len());
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| (0..b.len()).fold(q(0), |acc, l| acc + a[i][l].clone() * b[l][j].clone()))
                .collect()
        })
        .collect()
}

pub fn column(v: &[Rational]) -> Dense {
    v.iter().map(|x| vec![x.clone()]).collect()
}

pub fn ones(n: usize) -> Dense {
    vec![vec![q(1)]; n]
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Materialized `(A ⊗ I_{s/n})(x ⊗ 1_{s/r})`.
pub fn oracle_vprod(a: &RMatrix, x: &[Rational]) -> Vec<Rational> {
    let n = a.cols();
    let r = x.len();
    let s = lcm(n, r);
    let left = naive_kron(&dense(a), &identity(s / n));
    let right = naive_kron(&column(x), &ones(s / r));
    naive_matmul(&left, &right)
        .into_iter()
        .map(|row| row[0].clone())
        .collect()
}

/// Materialized `(P ⊗ I_{t/n})(Q ⊗ I_{t/p})`.
pub fn oracle_stp(p: &RMatrix, qm: &RMatrix) -> Dense {
    let t = lcm(p.cols(), qm.rows());
    naive_matmul(
        &naive_kron(&dense(p), &identity(t / p.cols())),
        &naive_kron(&dense(qm), &identity(t / qm.rows())),
    )
}

pub fn oracle_lift(x: &[Rational], s: usize) -> Vec<Rational> {
    naive_kron(&column(x), &ones(s / x.len()))
        .into_iter()
        .map(|r| r[0].clone())
        .collect()
}

/// Plain (non-reduced) Gaussian elimination rank over the columns of `cols`.
pub fn oracle_rank(cols: &[Vec<Rational>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let nrows = cols[0].len();
    let ncols = cols.len();
    let mut m: Dense = (0..nrows)
        .map(|i| (0..ncols).map(|j| cols[j][i].clone()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..nrows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone() / m[rank][c].clone();
            for j in c..ncols {
                let sub = f.clone() * m[rank][j].clone();
                m[r][j] = m[r][j].clone() - sub;
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `Σ c_j cols_j = target` by elimination on the augmented system.
pub fn oracle_solve(cols: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = cols.len();
    let rows = target.len();
    let mut m: Dense = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..=n {
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if c == n {
            return None;
        }
        m.swap(rank, piv);
        let inv = q(1) / m[rank][c].clone();
        for j in 0..=n {
            m[rank][j] = m[rank][j].clone() * inv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..=n {
                    let sub = f.clone() * m[rank][j].clone();
                    m[r][j] = m[r][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let mut sol = vec![q(0); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][n].clone();
    }
    Some(sol)
}

/// Classical minimal polynomial of a square matrix: first dependence of
/// `vec(I), vec(A), vec(A²), …` as n²-vectors.
pub fn classical_min_poly(a: &RMatrix) -> Poly {
    let n = a.rows();
    let ad = dense(a);
    let mut powers = vec![identity(n)];
    loop {
        let next = naive_matmul(powers.last().unwrap(), &ad);
        let flat = |m: &Dense| m.iter().flatten().cloned().collect::<Vec<_>>();
        let cols: Vec<Vec<Rational>> = powers.iter().map(flat).collect();
        if let Some(c) = oracle_solve(&cols, &flat(&next)) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(q(1));
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
}

/// Classical minimal polynomial of `x` under a square `A`: first dependence
/// of `x, Ax, A²x, …`.
pub fn classical_vector_min_poly(a: &RMatrix, x: &[Rational]) -> Poly {
    if x.iter().all(Zero::is_zero) {
        return Poly::one();
    }
    let ad = dense(a);
    let mut chain = vec![x.to_vec()];
    loop {
        let next: Vec<Rational> = naive_matmul(&ad, &column(chain.last().unwrap()))
            .into_iter()
            .map(|r| r[0].clone())
            .collect();
        if let Some(c) = oracle_solve(&chain, &next) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        chain.push(next);
    }
}

/// Ordinary `q(A)·x` for square `A` by Horner on matrices.
pub fn classical_eval(qp: &Poly, a: &RMatrix, x: &[Rational]) -> Vec<Rational> {
    let ad = dense(a);
    let mut acc = vec![q(0); x.len()];
    for c in qp.coeffs().iter().rev() {
        let ax: Vec<Rational> = naive_matmul(&ad, &column(&acc))
            .into_iter()
            .map(|r| r[0].clone())
            .collect();
        acc = ax
            .into_iter()
            .zip(x)
            .map(|(v, xi)| v + c.clone() * xi.clone())
            .collect();
    }
    acc
}

pub fn rvec(v: &[i64]) -> RVector {
    RVector::from_i64s(v).unwrap()
}

pub fn a_2x4() -> RMatrix {
    RMatrix::from_i64_rows(&[&[1, 0, 1, 1], &[0, 1, 0, 1]]).unwrap()
}

pub fn delta(n: usize, i: usize) -> RVector {
    RVector::unit(n, i - 1).unwrap()
}

pub fn poly(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

/// z^4 - 2z^3 - 2z^2 + 2z + 1
pub fn q1() -> Poly {
    poly(&[1, 2, -2, -2, 1])
}

/// z^3 - z^2 - 3z - 1
pub fn q2() -> Poly {
    poly(&[-1, -3, -1, 1])
}

/// z^6 - 2z^5 - 2z^4 + 2z^3 + z^2
pub fn f6() -> Poly {
    poly(&[0, 0, 1, 2, -2, -2, 1])
}

pub mod strategies {
    use proptest::prelude::*;
    use stp_reach::{RMatrix, RVector};

    pub fn small_matrix(max_dim: usize) -> impl Strategy<Value = RMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |vals| {
                RMatrix::from_fn(r, c, |i, j| super::q(vals[i * c + j])).unwrap()
            })
        })
    }

    pub fn vector_of(dim: usize) -> impl Strategy<Value = RVector> {
        prop::collection::vec(-3i64..=3, dim).prop_map(|v| RVector::from_i64s(&v).unwrap())
    }

    pub fn small_vector(max_dim: usize) -> impl Strategy<Value = RVector> {
        (1..=max_dim).prop_flat_map(vector_of)
    }

    /// A ∈ M_{m×km}.
    pub fn bounded_matrix(max_m: usize, max_k: usize) -> impl Strategy<Value = RMatrix> {
        (1..=max_m, 1..=max_k).prop_flat_map(|(m, k)| {
            let c = m * k;
            prop::collection::vec(-2i64..=2, m * c).prop_map(move |vals| {
                RMatrix::from_fn(m, c, |i, j| super::q(vals[i * c + j])).unwrap()
            })
        })
    }

    pub fn square_matrix(max_n: usize) -> impl Strategy<Value = RMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * n).prop_map(move |vals| {
                RMatrix::from_fn(n, n, |i, j| super::q(vals[i * n + j])).unwrap()
            })
        })
    }

    pub fn rational() -> impl Strategy<Value = stp_reach::Rational> {
        (-5i64..=5, 1i64..=4).prop_map(|(n, d)| stp_reach::Rational::new(n.into(), d.into()))
    }
}
