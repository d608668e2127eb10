//! Dense univariate polynomials in `z`, coefficients in ascending degree.

use std::fmt;

use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::scalar::{ExactField, Scalar};

/// Invariant: the highest stored coefficient is nonzero, so the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// From ascending coefficients `c_0, c_1, …`; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![T::one()])
    }

    /// `z^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        Polynomial { coeffs }
    }

    /// Monic polynomial `z^n + c_{n-1} z^{n-1} + … + c_0` from the lower coefficients.
    pub fn monic_from_lower(lower: Vec<T>) -> Self {
        let mut coeffs = lower;
        coeffs.push(T::one());
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Scalar + FromPrimitive> Polynomial<T> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| T::from_i64(c).expect("representable"))
                .collect(),
        )
    }
}

impl<T: ExactField> Polynomial<T> {
    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = T::one() / lead.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::invalid("polynomial division by zero"))?;
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![T::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// `self | other`; the zero polynomial divides nothing.
    pub fn divides(&self, other: &Self) -> bool {
        other.divmod(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Monic greatest common divisor (Euclid).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::invalid("gcd(0, 0) is undefined"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple `f·g / gcd(f, g)`.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        let g = self.gcd(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero());
        }
        let (q, _) = self.divmod(&g)?;
        Ok(q.mul(other).monic())
    }

    /// lcm of a nonempty family.
    pub fn lcm_all<'a>(polys: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        T: 'a,
    {
        let mut iter = polys.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::invalid("lcm of an empty family"))?;
        iter.try_fold(first.monic(), |acc, p| acc.lcm(p))
    }
}

fn write_term<T: Scalar>(f: &mut fmt::Formatter<'_>, mag: &T, power: usize) -> fmt::Result {
    let text = mag.to_string();
    let fractional = text.contains('/');
    if power > 0 && mag.is_one() {
        // coefficient 1 is implicit
    } else if power > 0 && fractional {
        write!(f, "({text})")?;
    } else {
        f.write_str(&text)?;
    }
    match power {
        0 => Ok(()),
        1 => f.write_str("z"),
        n => write!(f, "z^{n}"),
    }
}

/// `z^4 - 2z^3 - 2z^2 + 2z + 1`; fractional coefficients are parenthesized.
impl<T: Scalar + PartialOrd> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write_term(f, &mag, power)?;
            first = false;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}
