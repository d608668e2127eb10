//! Exact Gauss-Jordan elimination over an [`ExactField`].

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::ExactField;

/// Reduced row-echelon form of a list of row vectors.
///
/// `rows[i]` has a leading 1 at `pivots[i]`, every other row is zero in that
/// column, and pivots increase strictly. Zero rows are dropped, so
/// `rows.len()` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<T> {
    pub width: usize,
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

impl<T: ExactField> Rref<T> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `x` against the stored rows; the residual is zero iff `x` lies
    /// in their span.
    pub fn residual(&self, x: &[T]) -> Vec<T> {
        let mut res = x.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if res[p].is_zero() {
                continue;
            }
            let f = res[p].clone();
            for (slot, r) in res.iter_mut().zip(row) {
                if !r.is_zero() {
                    *slot = slot.clone() - f.clone() * r.clone();
                }
            }
        }
        res
    }

    pub fn contains(&self, x: &[T]) -> bool {
        self.residual(x).iter().all(|v| v.is_zero())
    }
}

/// Row-reduces `rows` (all of length `width`) in place and returns the RREF.
pub fn rref_rows<T: ExactField>(width: usize, mut rows: Vec<Vec<T>>) -> Rref<T> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = T::one() / rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() * inv.clone();
            }
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, rest) = tail.split_first_mut().expect("rank < len");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (slot, p) in other.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !p.is_zero() {
                    *slot = slot.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Rref {
        width,
        rows,
        pivots,
    }
}

/// RREF of the row space spanned by `vectors`, which must share `ambient`.
pub fn rref<T: ExactField>(ambient: usize, vectors: &[Vector<T>]) -> Result<Rref<T>> {
    check_dims(ambient, vectors)?;
    Ok(rref_rows(
        ambient,
        vectors.iter().map(|v| v.as_slice().to_vec()).collect(),
    ))
}

/// Exact rank of a family of vectors of common dimension `ambient`.
pub fn rank<T: ExactField>(ambient: usize, vectors: &[Vector<T>]) -> Result<usize> {
    rref(ambient, vectors).map(|r| r.rank())
}

/// Solves `Σ c_j basis_j = target` exactly.
///
/// Returns `None` when the system is inconsistent; free variables are set to
/// zero, so for an independent `basis` the solution is the unique one.
pub fn solve_combination<T: ExactField>(
    basis: &[Vector<T>],
    target: &Vector<T>,
) -> Result<Option<Vec<T>>> {
    let ambient = target.dim();
    check_dims(ambient, basis)?;
    let n = basis.len();
    // ambient equations, n unknowns, augmented by the target column
    let rows = (0..ambient)
        .map(|i| {
            basis
                .iter()
                .map(|b| b[i].clone())
                .chain(std::iter::once(target[i].clone()))
                .collect()
        })
        .collect();
    let reduced = rref_rows(n + 1, rows);
    if reduced.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut sol = vec![T::zero(); n];
    for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
        sol[p] = row[n].clone();
    }
    Ok(Some(sol))
}

fn check_dims<T: ExactField>(ambient: usize, vectors: &[Vector<T>]) -> Result<()> {
    match vectors.iter().find(|v| v.dim() != ambient) {
        Some(bad) => Err(Error::DimensionMismatch {
            expected: ambient,
            got: bad.dim(),
        }),
        None => Ok(()),
    }
}
