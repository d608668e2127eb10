//! Semi-tensor product toolkit: Kronecker product, STP, lifting, the
//! V-product `A ⋉→ x` and the V-addition `x ⊞ y`.
//!
//! None of the operations require conforming shapes. When shapes do conform
//! they reduce to the ordinary matrix product, matrix-vector product and
//! vector sum.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Kronecker product `A ⊗ B`.
pub fn kron<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (br, bc) = b.shape();
    Matrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a.get(i / br, j / bc).clone() * b.get(i % br, j % bc).clone()
    })
    .expect("kronecker shape is positive")
}

/// Semi-tensor product `P ⋉ Q = (P ⊗ I_{t/n})(Q ⊗ I_{t/p})`, `t = lcm(n, p)`.
pub fn stp<T: Scalar>(p: &Matrix<T>, q: &Matrix<T>) -> Matrix<T> {
    let t = p.cols().lcm(&q.rows());
    let left = pad_identity(p, t / p.cols());
    let right = pad_identity(q, t / q.rows());
    left.matmul(&right)
        .expect("inner dimensions agree by construction")
}

fn pad_identity<T: Scalar>(a: &Matrix<T>, n: usize) -> Matrix<T> {
    if n == 1 {
        a.clone()
    } else {
        kron(a, &Matrix::identity(n).expect("positive size"))
    }
}

/// `x ⊗ 1_{s/r}`: repeats every entry of `x` `s / x.dim()` times.
pub fn lift<T: Scalar>(x: &Vector<T>, s: usize) -> Result<Vector<T>> {
    if s == 0 || !s.is_multiple_of(x.dim()) {
        return Err(Error::NotAMultiple {
            dim: x.dim(),
            target: s,
        });
    }
    Ok(lift_unchecked(x, s))
}

fn lift_unchecked<T: Scalar>(x: &Vector<T>, s: usize) -> Vector<T> {
    let reps = s / x.dim();
    if reps == 1 {
        return x.clone();
    }
    let data = x
        .iter()
        .flat_map(|v| std::iter::repeat_n(v, reps))
        .cloned()
        .collect();
    Vector::new(data).expect("positive dimension")
}

/// Dimension of `A ⋉→ x` for `A ∈ M_{rows×cols}`, `x ∈ V_r`: `rows·lcm(cols, r)/cols`.
pub fn vprod_dim(rows: usize, cols: usize, r: usize) -> usize {
    rows * (cols.lcm(&r) / cols)
}

/// V-product `A ⋉→ x = (A ⊗ I_{s/n})(x ⊗ 1_{s/r})`, `s = lcm(n, r)`.
///
/// Neither Kronecker factor is materialized: entry `i·a + j` of the result
/// (with `a = s/n`, `b = s/r`) is `Σ_c A[i,c]·x[(c·a + j) / b]`.
pub fn vprod<T: Scalar>(a: &Matrix<T>, x: &Vector<T>) -> Vector<T> {
    let (m, n) = a.shape();
    let r = x.dim();
    if n == r {
        return a.mul_vec(x).expect("conforming");
    }
    let s = n.lcm(&r);
    let pad = s / n;
    let rep = s / r;
    let xs = x.as_slice();
    let mut out = Vec::with_capacity(m * pad);
    for i in 0..m {
        let row = a.row(i);
        for j in 0..pad {
            let mut acc = T::zero();
            for (c, coef) in row.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let xv = &xs[(c * pad + j) / rep];
                if !xv.is_zero() {
                    acc = acc + coef.clone() * xv.clone();
                }
            }
            out.push(acc);
        }
    }
    Vector::new(out).expect("positive dimension")
}

/// `A^i ⋉→ x`, the i-fold nested V-product. `i = 0` returns `x`.
pub fn power_vprod<T: Scalar>(a: &Matrix<T>, i: usize, x: &Vector<T>) -> Vector<T> {
    (0..i).fold(x.clone(), |acc, _| vprod(a, &acc))
}

/// V-addition `x ⊞ y = (x ⊗ 1_{s/n}) + (y ⊗ 1_{s/r})`, `s = lcm(n, r)`.
pub fn vadd<T: Scalar>(x: &Vector<T>, y: &Vector<T>) -> Vector<T> {
    let s = x.dim().lcm(&y.dim());
    lift_unchecked(x, s)
        .add(&lift_unchecked(y, s))
        .expect("same dimension after lifting")
}

/// Weighted n-ary V-addition `c_1 x_1 ⊞ c_2 x_2 ⊞ … ⊞ c_k x_k`.
///
/// All operands are lifted once to the lcm of their dimensions. Because
/// lifting composes, this agrees with any parenthesization of binary [`vadd`].
pub fn vsum<T: Scalar>(xs: &[Vector<T>], coeffs: &[T]) -> Result<Vector<T>> {
    if xs.is_empty() {
        return Err(Error::invalid("vsum needs at least one operand"));
    }
    if xs.len() != coeffs.len() {
        return Err(Error::DimensionMismatch {
            expected: xs.len(),
            got: coeffs.len(),
        });
    }
    let s = common_dim(xs.iter().map(Vector::dim));
    let mut acc = vec![T::zero(); s];
    for (x, c) in xs.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let reps = s / x.dim();
        for (k, v) in x.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let term = c.clone() * v.clone();
            for slot in &mut acc[k * reps..(k + 1) * reps] {
                *slot = slot.clone() + term.clone();
            }
        }
    }
    Vector::new(acc)
}

/// lcm of a collection of dimensions (1 for an empty collection).
pub fn common_dim(dims: impl IntoIterator<Item = usize>) -> usize {
    dims.into_iter().fold(1, |acc, d| acc.lcm(&d))
}
