//! Minimal A-annihilators under the V-product.
//!
//! `q(z) = z^n + c_{n-1} z^{n-1} + … + c_0` annihilates `x` when
//! `A^n ⋉→ x ⊞ c_{n-1} A^{n-1} ⋉→ x ⊞ … ⊞ c_0 x = 0`. The minimal one is found
//! from the first linear dependence along the Krylov chain `x, A ⋉→ x, …`
//! once all iterates are lifted to a common dimension.

use crate::dimension::{bounded_shape, minimal_invariant_time, DimensionProfile};
use crate::echelon::solve_combination;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::poly::Polynomial;
use crate::scalar::ExactField;
use crate::stp::{common_dim, lift, power_vprod, vprod, vsum};

/// `x, A ⋉→ x, A² ⋉→ x, …` together with the lcm of the iterate dimensions.
#[derive(Clone, Debug)]
pub struct KrylovChain<'a, T> {
    matrix: &'a Matrix<T>,
    iterates: Vec<Vector<T>>,
    common_dim: usize,
}

impl<'a, T: ExactField> KrylovChain<'a, T> {
    pub fn new(matrix: &'a Matrix<T>, base: Vector<T>) -> Self {
        let common_dim = base.dim();
        KrylovChain {
            matrix,
            iterates: vec![base],
            common_dim,
        }
    }

    pub fn base(&self) -> &Vector<T> {
        &self.iterates[0]
    }

    /// `iterates()[i] = A^i ⋉→ x`.
    pub fn iterates(&self) -> &[Vector<T>] {
        &self.iterates
    }

    pub fn common_dim(&self) -> usize {
        self.common_dim
    }

    /// Appends the next iterate and returns it.
    pub fn extend(&mut self) -> &Vector<T> {
        let next = vprod(self.matrix, self.iterates.last().expect("nonempty"));
        self.common_dim = common_dim([self.common_dim, next.dim()]);
        self.iterates.push(next);
        self.iterates.last().expect("just pushed")
    }

    /// Every iterate lifted to `common_dim`.
    pub fn lifted(&self) -> Vec<Vector<T>> {
        self.iterates
            .iter()
            .map(|v| lift(v, self.common_dim).expect("common_dim is a multiple"))
            .collect()
    }
}

/// `q(A) ⋉→ x`, lifted to the lcm of the iterate dimensions.
pub fn eval_on_vector<T: ExactField>(
    q: &Polynomial<T>,
    a: &Matrix<T>,
    x: &Vector<T>,
) -> Result<Vector<T>> {
    let degree = q
        .degree()
        .ok_or_else(|| Error::invalid("cannot evaluate the zero polynomial"))?;
    let mut chain = KrylovChain::new(a, x.clone());
    for _ in 0..degree {
        chain.extend();
    }
    vsum(chain.iterates(), q.coeffs())
}

pub fn is_annihilator<T: ExactField>(
    q: &Polynomial<T>,
    a: &Matrix<T>,
    x: &Vector<T>,
) -> Result<bool> {
    Ok(eval_on_vector(q, a, x)?.is_zero())
}

/// Minimal monic `q` with `q(A) ⋉→ x = 0`; the constant `1` for `x = 0`.
///
/// Requires a dimension-bounded `A`, which is what guarantees the chain
/// eventually lives in one invariant space and hence becomes dependent.
pub fn min_annihilator_vector<T: ExactField>(
    a: &Matrix<T>,
    x: &Vector<T>,
) -> Result<Polynomial<T>> {
    bounded_shape(a)?;
    if x.is_zero() {
        return Ok(Polynomial::one());
    }
    let mut chain = KrylovChain::new(a, x.clone());
    loop {
        chain.extend();
        let lifted = chain.lifted();
        let (newest, previous) = lifted.split_last().expect("at least two iterates");
        // previous iterates are independent, otherwise we would have stopped
        if let Some(c) = solve_combination(previous, newest)? {
            return Ok(Polynomial::monic_from_lower(
                c.into_iter().map(|v| -v).collect(),
            ));
        }
    }
}

/// Minimal annihilator of `span{vectors}`: the lcm of the per-vector ones.
pub fn min_annihilator_span<T: ExactField>(
    a: &Matrix<T>,
    vectors: &[Vector<T>],
) -> Result<Polynomial<T>> {
    if vectors.is_empty() {
        return Err(Error::invalid("span of an empty family"));
    }
    let polys = vectors
        .iter()
        .map(|v| min_annihilator_vector(a, v))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::lcm_all(&polys)
}

/// Minimal annihilator of all of `V_n`, via the standard basis.
pub fn min_annihilator_space<T: ExactField>(a: &Matrix<T>, n: usize) -> Result<Polynomial<T>> {
    min_annihilator_span(a, &Vector::standard_basis(n)?)
}

/// Per-generator data for the union `⋃_{t ≥ t*} R_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnionAnnihilators<T> {
    /// Minimal invariant time used as the base point.
    pub t_star: usize,
    pub r_star: u64,
    /// Minimal annihilator of `A^{t*} ⋉→ δ_p^i`, `i = 1..p`.
    pub per_generator: Vec<Polynomial<T>>,
    /// lcm of `per_generator`.
    pub union: Polynomial<T>,
}

pub fn union_annihilators<T: ExactField>(a: &Matrix<T>, p: usize) -> Result<UnionAnnihilators<T>> {
    let (m, k) = bounded_shape(a)?;
    if p == 0 {
        return Err(Error::invalid("initial dimension p must be positive"));
    }
    let p64 = p as u64;
    let t_star = minimal_invariant_time(m, k, p64)?;
    let r_star = DimensionProfile::build(m, k, p64)?.r_star;
    let per_generator = Vector::standard_basis(p)?
        .iter()
        .map(|e| min_annihilator_vector(a, &power_vprod(a, t_star, e)))
        .collect::<Result<Vec<_>>>()?;
    let union = Polynomial::lcm_all(&per_generator)?;
    Ok(UnionAnnihilators {
        t_star,
        r_star,
        per_generator,
        union,
    })
}

/// Minimal annihilator of the reachable set after the invariant time.
pub fn min_annihilator_union<T: ExactField>(a: &Matrix<T>, p: usize) -> Result<Polynomial<T>> {
    union_annihilators(a, p).map(|u| u.union)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Properness {
    /// The union's minimal annihilator differs from that of `V_{r*}`, so the
    /// union is certainly a proper subset.
    ProperSubset,
    /// The annihilators coincide; the test cannot decide.
    Inconclusive,
}

pub fn union_proper_test<T: ExactField>(a: &Matrix<T>, p: usize) -> Result<Properness> {
    let u = union_annihilators(a, p)?;
    let space = min_annihilator_space(a, r_star_usize(u.r_star)?)?;
    Ok(if u.union == space {
        Properness::Inconclusive
    } else {
        Properness::ProperSubset
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterVerdict {
    /// The minimal annihilator of `x` divides the union's; `x` may be reachable.
    Pass,
    /// Certifies `x ∉ ⋃_{t ≥ t*} R_t`.
    Fail,
}

/// Necessary condition for `x ∈ ⋃_{t ≥ t*} R_t`: its minimal annihilator
/// must divide the union's.
pub fn necessary_reach_filter<T: ExactField>(
    a: &Matrix<T>,
    p: usize,
    x: &Vector<T>,
) -> Result<FilterVerdict> {
    let u = union_annihilators(a, p)?;
    let r_star = r_star_usize(u.r_star)?;
    if x.dim() != r_star {
        return Err(Error::DimensionMismatch {
            expected: r_star,
            got: x.dim(),
        });
    }
    let qx = min_annihilator_vector(a, x)?;
    Ok(if qx.divides(&u.union) {
        FilterVerdict::Pass
    } else {
        FilterVerdict::Fail
    })
}

fn r_star_usize(r: u64) -> Result<usize> {
    usize::try_from(r).map_err(|_| Error::Overflow("invariant dimension"))
}
