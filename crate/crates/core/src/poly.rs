//! Sparse polynomials with integer coefficients.
//!
//! Coefficients stay in `i64` until a ring fixes the characteristic; the
//! local engine reduces them modulo its prime.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A nonzero-coefficient term list sorted graded-lex descending.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, i64)>,
}

impl Polynomial {
    /// Collects like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Self> {
        let mut terms: Vec<(Monomial, i64)> = terms.into_iter().collect();
        for (m, _) in &terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
        }
        terms.sort_by(|a, b| b.0.cmp_graded(&a.0));
        let mut out: Vec<(Monomial, i64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == m => {
                    *acc = acc
                        .checked_add(c)
                        .ok_or(Error::Overflow("polynomial coefficient"))?;
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Ok(Polynomial { nvars, terms: out })
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial {
            nvars: m.nvars(),
            terms: vec![(m, 1)],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars))
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::monomial(Monomial::var(i, nvars))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The monomial, if this polynomial is a single term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(m, _)] => Some(m),
            _ => None,
        }
    }

    /// Lowest total degree among the terms.
    pub fn order(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).min().unwrap_or(0)
    }

    /// Highest total degree among the terms.
    pub fn degree(&self) -> u64 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca
                    .checked_mul(*cb)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                terms.push((a.mul(b)?, c));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, names }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |p: &Polynomial| p.terms.iter().map(|(m, c)| (m.degree(), m.clone(), *c)).collect::<Vec<_>>();
        key(self).cmp(&key(other))
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = *c < 0;
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.unsigned_abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", m.display_with(self.names))?;
            } else {
                write!(f, "{a}*{}", m.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["X", "V", "Y"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn like_terms_combine_and_cancel() {
        let p = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![1, 0]), 2),
                (Monomial::new(vec![1, 0]), -2),
                (Monomial::new(vec![0, 1]), 3),
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.as_monomial(), Some(&Monomial::new(vec![0, 1])));
    }

    #[test]
    fn product_and_display() {
        let v = Polynomial::var(1, 3);
        let x = Polynomial::var(0, 3);
        let y = Polynomial::var(2, 3);
        let v2 = v.mul(&v).unwrap();
        let xy = x.mul(&y).unwrap();
        let rel = Polynomial::from_terms(
            3,
            v2.terms()
                .iter()
                .cloned()
                .chain(xy.terms().iter().map(|(m, c)| (m.clone(), -c))),
        )
        .unwrap();
        assert_eq!(rel.display_with(&names()).to_string(), "-X*Y + V^2");
        assert_eq!(rel.order(), 2);
        assert_eq!(Polynomial::one(3).display_with(&names()).to_string(), "1");
    }
}
