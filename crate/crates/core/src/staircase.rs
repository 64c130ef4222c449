//! Colengths of m-primary monomial ideals by counting standard monomials.
//!
//! The count splits the staircase into slabs along one variable: for a fixed
//! exponent `k` of `x_i`, the standard monomials form the staircase of an
//! ideal in the remaining variables, which only changes at exponents where
//! some generator's `x_i`-degree is reached. Subproblems are memoized on
//! their minimal generating sets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `ℓ(A/J)` together with the exponent box containing every standard monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthResult {
    pub value: u64,
    /// Pure-power exponent per variable; standard monomials live in `∏ [0, b_i)`.
    pub bounds: Vec<u32>,
}

pub fn is_m_primary(j: &MonomialIdeal) -> bool {
    j.is_m_primary()
}

pub fn colength(j: &MonomialIdeal) -> Result<ColengthResult> {
    if !j.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let bounds = (0..j.nvars())
        .map(|i| j.pure_power_exponent(i).expect("m-primary"))
        .collect();
    if j.is_unit() {
        return Ok(ColengthResult { value: 0, bounds });
    }
    let mut memo = HashMap::new();
    let value = count(j.gens().to_vec(), &mut memo)?;
    Ok(ColengthResult { value, bounds })
}

/// `ℓ(outer / inner) = ℓ(A/inner) − ℓ(A/outer)` for `inner ⊆ outer`.
pub fn quotient_length(outer: &MonomialIdeal, inner: &MonomialIdeal) -> Result<u64> {
    if !outer.contains(inner)? {
        return Err(Error::NotContained(
            "quotient length needs inner ⊆ outer".into(),
        ));
    }
    let lo = colength(outer)?.value;
    let hi = colength(inner)?.value;
    Ok(hi - lo)
}

fn minimal(gens: Vec<Monomial>) -> Vec<Monomial> {
    let nvars = gens[0].nvars();
    MonomialIdeal::new(nvars, gens)
        .expect("nonempty, uniform")
        .gens()
        .to_vec()
}

/// Counts standard monomials of the m-primary ideal with minimal generators `gens`.
fn count(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, u64>) -> Result<u64> {
    let nvars = gens[0].nvars();
    if gens.iter().any(Monomial::is_one) {
        return Ok(0);
    }
    if nvars == 1 {
        return Ok(u64::from(gens.iter().map(|g| g.exps()[0]).min().unwrap()));
    }
    if let Some(&v) = memo.get(&gens) {
        return Ok(v);
    }

    // split on the variable whose exponents take the most distinct values
    let split = (0..nvars)
        .max_by_key(|&i| {
            let distinct: BTreeSet<u32> = gens.iter().map(|g| g.exps()[i]).collect();
            (distinct.len(), std::cmp::Reverse(i))
        })
        .unwrap();
    let height = gens
        .iter()
        .filter_map(|g| match g.as_pure_power() {
            Some((j, e)) if j == split => Some(e),
            _ => None,
        })
        .min()
        .ok_or(Error::NotMPrimary)?;

    let mut cuts: BTreeSet<u32> = gens
        .iter()
        .map(|g| g.exps()[split])
        .filter(|&e| e < height)
        .collect();
    cuts.insert(0);
    cuts.insert(height);
    let cuts: Vec<u32> = cuts.into_iter().collect();

    let mut total: u64 = 0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let slab: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exps()[split] <= lo)
            .map(|g| g.drop_var(split))
            .collect();
        let inner = count(minimal(slab), memo)?;
        let part = inner
            .checked_mul(u64::from(hi - lo))
            .ok_or(Error::Overflow("colength"))?;
        total = total.checked_add(part).ok_or(Error::Overflow("colength"))?;
    }
    memo.insert(gens, total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(exps[0].len(), exps).unwrap()
    }

    #[test]
    fn worked_example_colengths() {
        let q = ideal(&[&[4, 0], &[0, 4]]);
        let i = ideal(&[&[4, 0], &[0, 4], &[3, 1], &[1, 3]]);
        assert_eq!(colength(&q).unwrap().value, 16);
        assert_eq!(colength(&i).unwrap().value, 11);
        assert_eq!(colength(&MonomialIdeal::maximal(2)).unwrap().value, 1);
        assert_eq!(colength(&i).unwrap().bounds, vec![4, 4]);
    }

    #[test]
    fn unit_ideal_has_colength_zero() {
        assert_eq!(colength(&MonomialIdeal::unit(3)).unwrap().value, 0);
    }

    #[test]
    fn not_m_primary_is_rejected() {
        let j = ideal(&[&[1, 0], &[1, 1]]);
        assert!(!is_m_primary(&j));
        assert_eq!(colength(&j), Err(Error::NotMPrimary));
    }

    #[test]
    fn quotient_lengths() {
        let q = ideal(&[&[4, 0], &[0, 4]]);
        let i = ideal(&[&[4, 0], &[0, 4], &[3, 1], &[1, 3]]);
        let i2 = i.product(&i).unwrap();
        let i3 = i2.product(&i).unwrap();
        let qi = q.product(&i).unwrap();
        let q2i = q.product(&qi).unwrap();
        assert_eq!(quotient_length(&i2, &qi).unwrap(), 2);
        assert_eq!(quotient_length(&i3, &q2i).unwrap(), 3);
        assert_eq!(quotient_length(&i, &i).unwrap(), 0);
        assert!(matches!(
            quotient_length(&qi, &i2),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn parameter_ideal_closed_form() {
        let j = ideal(&[&[3, 0, 0], &[0, 5, 0], &[0, 0, 2]]);
        assert_eq!(colength(&j).unwrap().value, 30);
    }
}
