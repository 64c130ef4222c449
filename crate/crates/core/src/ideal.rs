//! Monomial ideals kept as minimal generating sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A nonzero monomial ideal given by its minimal generators.
///
/// Generators form a divisibility antichain sorted lexicographically
/// descending, so structural equality is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to the antichain of divisibility-minimal elements.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.cmp_graded(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // a proper divisor has strictly smaller degree, so it is already kept
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimal_antichain(gens),
        })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(nvars: usize, exps: &[&[u32]]) -> Result<Self> {
        Self::new(nvars, exps.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: minimal_antichain((0..nvars).map(|i| Monomial::var(i, nvars)).collect()),
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.nvars() == self.nvars && self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other)?;
        Ok(other.gens.iter().all(|m| self.contains_monomial(m)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimal_antichain(out),
        })
    }

    /// `self^n` by repeated squaring; `self^0 = (1)`.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.nvars);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimal_antichain(gens),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b)?);
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimal_antichain(out),
        })
    }

    /// `(self : m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m.nvars(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.colon(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimal_antichain(gens),
        })
    }

    /// `(self : other) = ∩_{g} (self : g)` over the generators of `other`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let part = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
            if acc.as_ref().is_some_and(|a| a == self) {
                // cannot shrink below self
                break;
            }
        }
        Ok(acc.expect("ideals have at least one generator"))
    }

    /// Pure-power exponent `b` with `x_i^b` a generator, if any.
    pub fn pure_power_exponent(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| {
                if g.is_one() {
                    return Some(0);
                }
                match g.as_pure_power() {
                    Some((j, e)) if j == i => Some(e),
                    _ => None,
                }
            })
            .min()
    }

    /// True iff every variable has a pure power among the generators.
    pub fn is_m_primary(&self) -> bool {
        self.is_unit() || (0..self.nvars).all(|i| self.pure_power_exponent(i).is_some())
    }

    /// Generators not lying in `base`.
    pub fn generators_outside(&self, base: &MonomialIdeal) -> Vec<Monomial> {
        self.gens
            .iter()
            .filter(|g| !base.contains_monomial(g))
            .cloned()
            .collect()
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> IdealDisplay<'a> {
        IdealDisplay { ideal: self, names }
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.ideal.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(exps[0].len(), exps).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    /// The staircase family with Q = (X^4, Y^4), I = Q + (X^3Y, XY^3).
    fn staircase_pair() -> (MonomialIdeal, MonomialIdeal) {
        let q = ideal(&[&[4, 0], &[0, 4]]);
        let i = q.sum(&ideal(&[&[3, 1], &[1, 3]])).unwrap();
        (i, q)
    }

    #[test]
    fn minimalize() {
        let a = ideal(&[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(a.gens(), &[m(&[2, 0]), m(&[0, 1])]);
        let b = ideal(&[&[4, 0], &[0, 4], &[3, 1], &[1, 3], &[4, 1]]);
        assert_eq!(b.gens().len(), 4);
        assert!(!b.gens().contains(&m(&[4, 1])));
        let again = MonomialIdeal::new(2, b.gens().to_vec()).unwrap();
        assert_eq!(again, b);
    }

    #[test]
    fn canonical_order_is_lex_descending() {
        let b = ideal(&[&[0, 4], &[1, 3], &[4, 0], &[3, 1]]);
        assert_eq!(b.gens(), &[m(&[4, 0]), m(&[3, 1]), m(&[1, 3]), m(&[0, 4])]);
    }

    #[test]
    fn empty_and_mismatched_inputs() {
        assert_eq!(MonomialIdeal::new(2, vec![]), Err(Error::ZeroIdeal));
        assert!(matches!(
            MonomialIdeal::new(2, vec![m(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = MonomialIdeal::maximal(2);
        let b = MonomialIdeal::maximal(3);
        assert!(a.product(&b).is_err());
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.colon(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn products() {
        let mm = MonomialIdeal::maximal(2);
        assert_eq!(mm.product(&mm).unwrap(), ideal(&[&[2, 0], &[1, 1], &[0, 2]]));

        let (i, q) = staircase_pair();
        let i2 = i.product(&i).unwrap();
        let qi = q.product(&i).unwrap();
        let extra = ideal(&[&[6, 2], &[2, 6]]);
        assert_eq!(i2, qi.sum(&extra).unwrap());

        let qi2 = q.product(&i2).unwrap();
        let q2i = q.power(2).unwrap().product(&i).unwrap();
        let extra = ideal(&[&[10, 2], &[6, 6], &[2, 10]]);
        assert_eq!(qi2, q2i.sum(&extra).unwrap());
    }

    #[test]
    fn sums() {
        let (i, _) = staircase_pair();
        assert_eq!(i, ideal(&[&[4, 0], &[0, 4], &[3, 1], &[1, 3]]));
        assert_eq!(i.sum(&i).unwrap(), i);
        assert!(i.sum(&MonomialIdeal::unit(2)).unwrap().is_unit());
    }

    #[test]
    fn intersections() {
        let x = ideal(&[&[1, 0]]);
        let y = ideal(&[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&[&[1, 1]]));

        let a = ideal(&[&[2, 0], &[0, 1]]);
        let b = ideal(&[&[1, 0], &[0, 2]]);
        let ab = a.intersect(&b).unwrap();
        // brute force over the 3x3 box: minimal common members
        let mut common = vec![];
        for u in 0..3 {
            for v in 0..3 {
                let t = m(&[u, v]);
                if a.contains_monomial(&t) && b.contains_monomial(&t) {
                    common.push(t);
                }
            }
        }
        assert_eq!(ab, MonomialIdeal::new(2, common).unwrap());
        assert_eq!(ab, ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn colons() {
        let a = ideal(&[&[2, 0], &[1, 1]]);
        let x = ideal(&[&[1, 0]]);
        assert_eq!(a.colon(&x).unwrap(), MonomialIdeal::maximal(2));
        assert_eq!(a.colon(&MonomialIdeal::unit(2)).unwrap(), a);

        let (i, _) = staircase_pair();
        let i2 = i.product(&i).unwrap();
        let c = i2.colon(&i).unwrap();
        // X^2Y^2 * g lies in I^2 for each generator g of I
        for g in i.gens() {
            assert!(i2.contains_monomial(&m(&[2, 2]).mul(g).unwrap()));
        }
        assert!(c.contains_monomial(&m(&[2, 2])));
    }

    #[test]
    fn containment() {
        let (i, q) = staircase_pair();
        let i2 = i.product(&i).unwrap();
        let qi = q.product(&i).unwrap();
        let mi2 = MonomialIdeal::maximal(2).product(&i2).unwrap();
        assert!(qi.contains(&mi2).unwrap());
        // every generator of I^2 is divisible by X^4 or Y^4
        for g in i2.gens() {
            assert!(g.exps()[0] >= 4 || g.exps()[1] >= 4);
        }
        assert!(q.contains(&i2).unwrap());
        assert!(!q.contains(&i).unwrap());
        assert!(i.contains(&i).unwrap());
    }

    #[test]
    fn m_primary() {
        let (i, _) = staircase_pair();
        assert!(i.is_m_primary());
        assert!(!ideal(&[&[1, 0], &[1, 1]]).is_m_primary());
        assert!(MonomialIdeal::unit(2).is_m_primary());
    }

    #[test]
    fn powers() {
        let (i, _) = staircase_pair();
        assert!(i.power(0).unwrap().is_unit());
        assert_eq!(i.power(1).unwrap(), i);
        let mut acc = i.clone();
        for n in 2..=5 {
            acc = acc.product(&i).unwrap();
            assert_eq!(i.power(n).unwrap(), acc);
        }
    }
}
