//! Exact analysis of dimension-bounded cross-dimensional linear systems
//!
//! ```text
//! x(t+1) = A ⋉→ x(t),    A ∈ M_{m×km},  x(0) ∈ V_p
//! ```
//!
//! The crate covers the whole pipeline: the semi-tensor product toolkit
//! ([`stp`]), the closed-form state-dimension law ([`dimension`]), t-step
//! reachable subspaces with rank-based membership ([`reachability`]) and
//! minimal annihilator polynomials ([`annihilator`]). Everything that issues
//! a rank or degree verdict works over an [`ExactField`]; the default scalar
//! is the arbitrary-precision [`Rational`].
//!
//! The matrix and polynomial types are generic over the scalar. Floating
//! point scalars may be used for the products ([`stp::vprod`] and friends) but
//! not for rank decisions.

pub mod annihilator;
pub mod cli;
pub mod dimension;
pub mod echelon;
pub mod error;
pub mod factor;
pub mod linalg;
pub mod poly;
pub mod reachability;
pub mod scalar;
pub mod stp;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use poly::Polynomial;
pub use scalar::{ExactField, Scalar};

/// Arbitrary-precision exact fraction, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
/// Dense exact matrix.
pub type RMatrix = Matrix<Rational>;
/// Dense exact column vector.
pub type RVector = Vector<Rational>;
/// Univariate polynomial over the rationals.
pub type Poly = Polynomial<Rational>;

/// Double-precision matrix, for products only.
pub type F64Matrix = Matrix<f64>;
/// Double-precision vector, for products only.
pub type F64Vector = Vector<f64>;
