use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Ring-like scalar every matrix and vector operation is generic over.
pub trait Scalar:
    Num + Clone + PartialEq + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync
{
}

impl<T> Scalar for T where
    T: Num + Clone + PartialEq + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync
{
}

/// A field whose arithmetic is exact, so `== zero` is a sound test.
///
/// Rank, echelon and annihilator computations are only available for these
/// scalars. Floats deliberately do not implement it.
pub trait ExactField: Scalar {}

impl<T> ExactField for Ratio<T> where T: Integer + Signed + Clone + Debug + Display + Send + Sync {}
