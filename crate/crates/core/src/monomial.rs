//! Exponent-vector monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}` stored as its exponent vector.
///
/// The derived ordering is lexicographic on the exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::pure_power(i, 1, nvars)
    }

    pub fn pure_power(i: usize, e: u32, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// If this is `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub(crate) fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// `self | other`, i.e. coordinatewise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        })
    }

    /// Removes coordinate `i`.
    pub(crate) fn drop_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { exps }
    }

    /// Graded-lex comparison: total degree first, then lexicographic.
    pub fn cmp_graded(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }

    /// Renders with the given variable names, e.g. `X^3*Y`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Default variable names `x1, ..., xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(m(&[2, 1]).divides(&m(&[3, 2])).unwrap());
        assert!(!m(&[3, 0]).divides(&m(&[2, 5])).unwrap());
        assert!(Monomial::one(2).divides(&m(&[7, 0])).unwrap());
        assert_eq!(
            m(&[1]).divides(&m(&[1, 1])),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn product_overflow_is_an_error() {
        let big = m(&[u32::MAX, 0]);
        assert!(matches!(big.mul(&m(&[1, 0])), Err(Error::Overflow(_))));
    }

    #[test]
    fn colon_generator() {
        assert_eq!(m(&[2, 1]).colon(&m(&[1, 3])).unwrap(), m(&[1, 0]));
    }

    #[test]
    fn display() {
        let names = vec!["X".to_string(), "Y".to_string()];
        assert_eq!(m(&[3, 1]).display_with(&names).to_string(), "X^3*Y");
        assert_eq!(Monomial::one(2).display_with(&names).to_string(), "1");
    }

    #[test]
    fn graded_order() {
        assert_eq!(m(&[0, 2]).cmp_graded(&m(&[1, 0])), Ordering::Greater);
        assert_eq!(m(&[0, 2]).cmp_graded(&m(&[1, 1])), Ordering::Less);
    }
}
