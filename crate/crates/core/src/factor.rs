//! Trial-division prime factorization for dimension-sized integers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest input [`factorize`] accepts. Trial division up to 10^6 keeps it
/// well under a millisecond.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Prime → exponent, primes ascending.
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    /// Exponent of `prime` (0 when absent).
    pub fn exponent(&self, prime: u64) -> u32 {
        self.factors.get(&prime).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }
}

/// Renders as `2^3 × 3^5 × 5 × 7` (and `1` for the empty product).
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" × ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::invalid("cannot factorize 0"));
    }
    if n > FACTOR_LIMIT {
        return Err(Error::FactorTooLarge {
            value: n,
            limit: FACTOR_LIMIT,
        });
    }
    let mut factors = BTreeMap::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        while rest.is_multiple_of(d) {
            *factors.entry(d).or_insert(0) += 1;
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        *factors.entry(rest).or_insert(0) += 1;
    }
    Ok(Factorization { value: n, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_factorizations() {
        let f = factorize(68040).unwrap();
        assert_eq!(
            f.factors()
                .iter()
                .map(|(&p, &e)| (p, e))
                .collect::<Vec<_>>(),
            vec![(2, 3), (3, 5), (5, 1), (7, 1)]
        );
        assert_eq!(f.to_string(), "2^3 × 3^5 × 5 × 7");
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(1).unwrap().to_string(), "1");
        let g = factorize(1715).unwrap();
        assert_eq!(g.exponent(5), 1);
        assert_eq!(g.exponent(7), 3);
        assert_eq!(g.exponent(2), 0);
        assert_eq!(
            factorize(999_999_999_989)
                .unwrap()
                .exponent(999_999_999_989),
            1
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(factorize(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            factorize(FACTOR_LIMIT + 1),
            Err(Error::FactorTooLarge { .. })
        ));
    }

    #[test]
    fn matches_brute_force_reconstruction() {
        for n in 1..3000u64 {
            let f = factorize(n).unwrap();
            let prod: u64 = f.factors().iter().map(|(&p, &e)| p.pow(e)).product();
            assert_eq!(prod, n);
            for p in f.primes() {
                assert!((2..p).all(|q| p % q != 0), "{p} not prime");
            }
        }
    }
}
