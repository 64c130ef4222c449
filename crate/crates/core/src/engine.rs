//! One interface over the two ideal engines.
//!
//! [`MonomialEngine`] is exact for monomial ideals of a regular ring.
//! [`LocalEngine`] handles quotients by polynomial relations at a fixed
//! truncation order, and reports `Uncertified` whenever a length would not be
//! exact there; callers retry at a larger order.

use std::fmt::Debug;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::local::{LocalIdeal, LocalRingSpec, QuotientRing};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::staircase;

pub trait IdealEngine {
    type Ideal: Clone + Debug;

    fn name(&self) -> &'static str;

    fn names(&self) -> &[String];

    fn nvars(&self) -> usize {
        self.names().len()
    }

    fn ideal(&self, gens: &[Polynomial]) -> Result<Self::Ideal>;

    fn maximal(&self) -> Result<Self::Ideal> {
        let n = self.nvars();
        let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
        self.ideal(&vars)
    }

    fn product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;

    fn sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;

    fn intersect(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;

    /// `(a : b)`.
    fn colon(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;

    /// `b ⊆ a`.
    fn contains(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<bool>;

    fn equal(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<bool> {
        Ok(self.contains(a, b)? && self.contains(b, a)?)
    }

    /// `ℓ(A/a)`.
    fn colength(&self, a: &Self::Ideal) -> Result<u64>;

    /// `ℓ(outer/inner)`; `inner ⊆ outer` is checked.
    fn quotient_length(&self, outer: &Self::Ideal, inner: &Self::Ideal) -> Result<u64> {
        if !self.contains(outer, inner)? {
            return Err(Error::NotContained("quotient length needs inner ⊆ outer".into()));
        }
        Ok(self.colength(inner)? - self.colength(outer)?)
    }

    /// `a^n` for `n ≥ 1` by repeated multiplication.
    fn power(&self, a: &Self::Ideal, n: u32) -> Result<Self::Ideal> {
        if n == 0 {
            return Err(Error::InvalidSpec("power exponent must be positive".into()));
        }
        let mut acc = a.clone();
        for _ in 1..n {
            acc = self.product(&acc, a)?;
        }
        Ok(acc)
    }

    /// A generating set of `a`.
    fn generators(&self, a: &Self::Ideal) -> Vec<Polynomial>;

    /// Generators of `big` that do not lie in `small`, reduced modulo `small`
    /// where the engine can do so.
    fn generators_outside(&self, big: &Self::Ideal, small: &Self::Ideal) -> Result<Vec<Polynomial>>;
}

fn as_monomials(nvars: usize, gens: &[Polynomial]) -> Result<Vec<Monomial>> {
    gens.iter()
        .map(|g| {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            match g.terms() {
                [(m, c)] if *c != 0 => Ok(m.clone()),
                _ => Err(Error::InvalidSpec(
                    "the monomial engine needs monomial generators".into(),
                )),
            }
        })
        .collect()
}

/// Exact engine over `k[[x_1..x_n]]` for monomial ideals.
#[derive(Clone, Debug)]
pub struct MonomialEngine {
    names: Vec<String>,
}

impl MonomialEngine {
    pub fn new(names: Vec<String>) -> Self {
        MonomialEngine { names }
    }
}

impl IdealEngine for MonomialEngine {
    type Ideal = MonomialIdeal;

    fn name(&self) -> &'static str {
        "monomial"
    }

    fn names(&self) -> &[String] {
        &self.names
    }

    fn ideal(&self, gens: &[Polynomial]) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.nvars(), as_monomials(self.nvars(), gens)?)
    }

    fn maximal(&self) -> Result<MonomialIdeal> {
        Ok(MonomialIdeal::maximal(self.nvars()))
    }

    fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.product(b)
    }

    fn sum(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.sum(b)
    }

    fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.intersect(b)
    }

    fn colon(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.colon(b)
    }

    fn contains(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
        a.contains(b)
    }

    fn equal(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
        Ok(a == b)
    }

    fn colength(&self, a: &MonomialIdeal) -> Result<u64> {
        Ok(staircase::colength(a)?.value)
    }

    fn power(&self, a: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::InvalidSpec("power exponent must be positive".into()));
        }
        a.power(n)
    }

    fn generators(&self, a: &MonomialIdeal) -> Vec<Polynomial> {
        a.gens().iter().cloned().map(Polynomial::monomial).collect()
    }

    fn generators_outside(&self, big: &MonomialIdeal, small: &MonomialIdeal) -> Result<Vec<Polynomial>> {
        Ok(big
            .generators_outside(small)
            .into_iter()
            .map(Polynomial::monomial)
            .collect())
    }
}

/// Engine over `U/a` truncated at a fixed order.
#[derive(Clone, Debug)]
pub struct LocalEngine {
    ring: Arc<QuotientRing>,
}

impl LocalEngine {
    pub fn new(spec: LocalRingSpec, order: usize) -> Result<Self> {
        Ok(LocalEngine {
            ring: QuotientRing::new(spec, order)?,
        })
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }
}

impl IdealEngine for LocalEngine {
    type Ideal = LocalIdeal;

    fn name(&self) -> &'static str {
        "local"
    }

    fn names(&self) -> &[String] {
        self.ring.spec().names()
    }

    fn ideal(&self, gens: &[Polynomial]) -> Result<LocalIdeal> {
        LocalIdeal::new(&self.ring, gens.to_vec())
    }

    fn product(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<LocalIdeal> {
        a.product(b)
    }

    fn sum(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<LocalIdeal> {
        a.sum(b)
    }

    fn intersect(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<LocalIdeal> {
        a.intersect(b)
    }

    fn colon(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<LocalIdeal> {
        a.colon(b)
    }

    fn contains(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<bool> {
        a.contains(b)
    }

    fn equal(&self, a: &LocalIdeal, b: &LocalIdeal) -> Result<bool> {
        a.equals(b)
    }

    fn colength(&self, a: &LocalIdeal) -> Result<u64> {
        a.colength()
    }

    fn generators(&self, a: &LocalIdeal) -> Vec<Polynomial> {
        a.gens().to_vec()
    }

    fn generators_outside(&self, big: &LocalIdeal, small: &LocalIdeal) -> Result<Vec<Polynomial>> {
        small.span().require_certified()?;
        let ech = small.span().echelon();
        let mut out = vec![];
        for g in big.span().minimal_generators() {
            let mut v = self.ring.vector_of(&g);
            ech.reduce(&mut v);
            if v.iter().any(|&c| c != 0) {
                out.push(self.ring.polynomial_of(&v));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn polys(src: &[&str], names: &[String]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, names).unwrap()).collect()
    }

    #[test]
    fn engines_agree_without_relations() {
        let names: Vec<String> = ["X", "Y"].iter().map(|s| s.to_string()).collect();
        let mono = MonomialEngine::new(names.clone());
        let spec = LocalRingSpec::new(names.clone(), 32003, vec![]).unwrap();
        let local = LocalEngine::new(spec, 16).unwrap();
        let i = polys(&["X^4", "Y^4", "X^3*Y", "X*Y^3"], &names);
        let q = polys(&["X^4", "Y^4"], &names);

        let (mi, mq) = (mono.ideal(&i).unwrap(), mono.ideal(&q).unwrap());
        let (li, lq) = (local.ideal(&i).unwrap(), local.ideal(&q).unwrap());
        assert_eq!(mono.colength(&mi).unwrap(), 11);
        assert_eq!(local.colength(&li).unwrap(), 11);

        let mi2 = mono.power(&mi, 2).unwrap();
        let li2 = local.power(&li, 2).unwrap();
        let mqi = mono.product(&mq, &mi).unwrap();
        let lqi = local.product(&lq, &li).unwrap();
        assert_eq!(mono.quotient_length(&mi2, &mqi).unwrap(), 2);
        assert_eq!(local.quotient_length(&li2, &lqi).unwrap(), 2);

        let m = local.maximal().unwrap();
        let c = local.colon(&li, &m).unwrap();
        assert_eq!(local.colength(&c).unwrap(), mono.colength(&mono.colon(&mi, &mono.maximal().unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn monomial_engine_rejects_binomials() {
        let names: Vec<String> = ["X", "Y"].iter().map(|s| s.to_string()).collect();
        let mono = MonomialEngine::new(names.clone());
        assert!(matches!(
            mono.ideal(&polys(&["X - Y"], &names)),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn outside_generators_are_reduced() {
        let names: Vec<String> = ["X", "V", "Y"].iter().map(|s| s.to_string()).collect();
        let rels = polys(&["X^2", "X*V", "V^2 - X*Y"], &names);
        let local = LocalEngine::new(LocalRingSpec::new(names.clone(), 32003, rels).unwrap(), 8).unwrap();
        let i = local.ideal(&polys(&["Y", "V"], &names)).unwrap();
        let big = local.ideal(&polys(&["Y", "V", "X + V"], &names)).unwrap();
        let extra = local.generators_outside(&big, &i).unwrap();
        assert_eq!(extra, polys(&["X"], &names));
    }
}
