//! t-step reachable subspaces `R_t = span{A^t ⋉→ δ_p^i}` and the rank test
//! for membership.
//!
//! Nothing here requires `A` to be dimension-bounded; the same computations
//! are valid for any shape.

use std::fmt;

use crate::echelon::{self, Rref};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::ExactField;
use crate::stp::{vprod, vprod_dim};

/// Exact rank of `vectors`, all of dimension `ambient`.
pub fn rank_of<T: ExactField>(ambient: usize, vectors: &[Vector<T>]) -> Result<usize> {
    echelon::rank(ambient, vectors)
}

/// A linear subspace of `V_ambient`, stored as a reduced echelon basis:
/// each basis vector has a leading 1 in a column where all the others are 0.
/// Equal subspaces therefore have identical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<T> {
    echelon: Rref<T>,
}

impl<T: ExactField> Subspace<T> {
    pub fn span(ambient: usize, vectors: &[Vector<T>]) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::invalid("ambient dimension must be positive"));
        }
        Ok(Subspace {
            echelon: echelon::rref(ambient, vectors)?,
        })
    }

    pub fn full(ambient: usize) -> Result<Self> {
        Subspace::span(ambient, &Vector::standard_basis(ambient)?)
    }

    pub fn zero(ambient: usize) -> Result<Self> {
        Subspace::span(ambient, &[])
    }

    pub fn ambient(&self) -> usize {
        self.echelon.width
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> Vec<Vector<T>> {
        self.echelon
            .rows
            .iter()
            .map(|r| Vector::new(r.clone()).expect("positive ambient"))
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    /// False for vectors of the wrong dimension.
    pub fn contains(&self, x: &Vector<T>) -> bool {
        x.dim() == self.ambient() && self.echelon.contains(x.as_slice())
    }

    /// `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut all = self.basis();
        all.extend(other.basis());
        Subspace::span(self.ambient(), &all)
    }

    /// Image under an ordinary linear map `V_ambient → V_rows`.
    pub fn image(&self, map: &Matrix<T>) -> Result<Self> {
        let images = self
            .basis()
            .iter()
            .map(|b| map.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(map.rows(), &images)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                got: other.ambient(),
            });
        }
        Ok(())
    }
}

impl<T: ExactField> fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient())
            .field("basis", &self.basis())
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimMismatch {
    pub expected: usize,
    pub got: usize,
}

/// Outcome of the rank test `rank(x, generators) = dim R`.
///
/// `reachable ⇔ rank_with == rank_without`. For a vector of the wrong
/// dimension `mismatch` is set and `rank_with` is reported as
/// `rank_without + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachVerdict {
    pub reachable: bool,
    pub time: Option<usize>,
    pub rank_with: usize,
    pub rank_without: usize,
    pub mismatch: Option<DimMismatch>,
}

pub fn is_member<T: ExactField>(space: &Subspace<T>, x: &Vector<T>) -> ReachVerdict {
    let rank_without = space.dim();
    if x.dim() != space.ambient() {
        return ReachVerdict {
            reachable: false,
            time: None,
            rank_with: rank_without + 1,
            rank_without,
            mismatch: Some(DimMismatch {
                expected: space.ambient(),
                got: x.dim(),
            }),
        };
    }
    let inside = space.echelon.contains(x.as_slice());
    ReachVerdict {
        reachable: inside,
        time: None,
        rank_with: rank_without + usize::from(!inside),
        rank_without,
        mismatch: None,
    }
}

/// `A^t ⋉→ δ_p^i` for `i = 1..p`, in order.
pub fn reach_generators<T: ExactField>(
    a: &Matrix<T>,
    p: usize,
    t: usize,
) -> Result<Vec<Vector<T>>> {
    let mut gens = Vector::standard_basis(p)?;
    for _ in 0..t {
        gens = gens.iter().map(|g| vprod(a, g)).collect();
    }
    Ok(gens)
}

/// Dimension of the states at time `t` from `V_p`, for any shape of `A`.
pub fn state_dim(rows: usize, cols: usize, p: usize, t: usize) -> usize {
    (0..t).fold(p, |r, _| vprod_dim(rows, cols, r))
}

/// `R_t` as a subspace of `V_{r(t)}`; `t = 0` gives all of `V_p`.
pub fn reach_basis<T: ExactField>(a: &Matrix<T>, p: usize, t: usize) -> Result<Subspace<T>> {
    let gens = reach_generators(a, p, t)?;
    Subspace::span(gens[0].dim(), &gens)
}

/// Rank test for "x is t-step reachable from V_p".
pub fn is_t_step_reachable<T: ExactField>(
    a: &Matrix<T>,
    p: usize,
    t: usize,
    x: &Vector<T>,
) -> Result<ReachVerdict> {
    let space = reach_basis(a, p, t)?;
    Ok(ReachVerdict {
        time: Some(t),
        ..is_member(&space, x)
    })
}

/// All `t ≤ t_max` at which `x` is t-step reachable.
pub fn scan_reachability<T: ExactField>(
    a: &Matrix<T>,
    p: usize,
    x: &Vector<T>,
    t_max: usize,
) -> Result<Vec<usize>> {
    let mut gens = Vector::standard_basis(p)?;
    let mut hits = Vec::new();
    for t in 0..=t_max {
        if t > 0 {
            gens = gens.iter().map(|g| vprod(a, g)).collect();
        }
        if gens[0].dim() == x.dim() && Subspace::span(x.dim(), &gens)?.contains(x) {
            hits.push(t);
        }
    }
    Ok(hits)
}

/// Square matrix of `x ↦ A ⋉→ x` on an A-invariant `V_r`; column `i` is `A ⋉→ δ_r^i`.
pub fn induced_matrix<T: ExactField>(a: &Matrix<T>, r: usize) -> Result<Matrix<T>> {
    let image_dim = vprod_dim(a.rows(), a.cols(), r);
    if image_dim != r {
        return Err(Error::NotInvariant {
            dim: r,
            column: 1,
            image_dim,
        });
    }
    let cols: Vec<_> = Vector::standard_basis(r)?
        .iter()
        .map(|e| vprod(a, e))
        .collect();
    Matrix::from_columns(&cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inclusion {
    Equal,
    /// The first subspace is strictly inside the second.
    FirstInSecond,
    /// The second subspace is strictly inside the first.
    SecondInFirst,
    Incomparable,
}

impl fmt::Display for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inclusion::Equal => "equal",
            Inclusion::FirstInSecond => "first ⊂ second",
            Inclusion::SecondInFirst => "second ⊂ first",
            Inclusion::Incomparable => "incomparable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceRelation {
    pub inclusion: Inclusion,
    pub intersection_dim: usize,
}

pub fn subspace_relate<T: ExactField>(
    s1: &Subspace<T>,
    s2: &Subspace<T>,
) -> Result<SubspaceRelation> {
    let sum_dim = s1.sum(s2)?.dim();
    let (d1, d2) = (s1.dim(), s2.dim());
    let inclusion = match (sum_dim == d2, sum_dim == d1) {
        (true, true) => Inclusion::Equal,
        (true, false) => Inclusion::FirstInSecond,
        (false, true) => Inclusion::SecondInFirst,
        (false, false) => Inclusion::Incomparable,
    };
    Ok(SubspaceRelation {
        inclusion,
        intersection_dim: d1 + d2 - sum_dim,
    })
}
