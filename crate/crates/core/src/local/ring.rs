//! Degree-truncated quotients `U/(a + m^N)` of a power-series ring.
//!
//! Monomials of degree `< N` are indexed in graded-lex ascending order. The
//! defining ideal `a` is echelonized once with the lowest column as leading
//! term, which makes the pivots compatible with truncation: the quotient at
//! any smaller order is the restriction to lower degrees. Non-pivot columns
//! are the standard monomials, and every other monomial gets a normal form
//! as a combination of standard monomials of the same or higher degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::local::field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Hard cap on the number of monomials below the truncation degree.
pub const MAX_MONOMIALS: usize = 2_000_000;

/// A power-series ring `F_p[[vars]]` modulo polynomial relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRingSpec {
    names: Vec<String>,
    prime: u32,
    relations: Vec<Polynomial>,
}

impl LocalRingSpec {
    /// Relations may be empty, which gives the power-series ring itself.
    pub fn new(names: Vec<String>, prime: u64, relations: Vec<Polynomial>) -> Result<Self> {
        let prime = field::check_prime(prime)?;
        let mut reduced = Vec::with_capacity(relations.len());
        for r in &relations {
            if r.nvars() != names.len() {
                return Err(Error::DimensionMismatch {
                    expected: names.len(),
                    found: r.nvars(),
                });
            }
            let r = field::reduce_polynomial(r, prime)?;
            if r.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            reduced.push(r);
        }
        Ok(LocalRingSpec {
            names,
            prime,
            relations: reduced,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }
}

#[derive(Clone, Debug)]
enum NormalForm {
    Basis(u32),
    Combination(Vec<(u32, u32)>),
}

/// `U/(a + m^N)` with its standard-monomial basis.
pub struct QuotientRing {
    spec: LocalRingSpec,
    order: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    /// `succ[k * nvars + i]` = index of `x_i * monomials[k]`, or `NONE`.
    succ: Vec<u32>,
    normal: Vec<NormalForm>,
    basis: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl std::fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientRing")
            .field("vars", &self.spec.names)
            .field("prime", &self.spec.prime)
            .field("order", &self.order)
            .field("basis_len", &self.basis.len())
            .finish()
    }
}

fn binomial_usize(a: usize, b: usize) -> Option<usize> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut r: usize = 1;
    for k in 0..b {
        r = r.checked_mul(a - k)? / (k + 1);
    }
    Some(r)
}

/// Exponent vectors of total degree `deg` in `n` variables, lex ascending.
fn monomials_of_degree(n: usize, deg: u32, out: &mut Vec<Monomial>) {
    fn rec(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(n, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if n == 0 {
        if deg == 0 {
            out.push(Monomial::new(vec![]));
        }
        return;
    }
    let mut cur = vec![0; n];
    rec(n, 0, deg, &mut cur, out);
}

type SparseRow = Vec<(u32, u32)>;

/// Reduces `row` against pivot rows (lead coefficient 1 at the smallest column).
fn reduce_sparse(row: &[(u32, u32)], pivot_of: &[u32], rows: &[SparseRow], p: u32) -> SparseRow {
    let mut acc: BTreeMap<u32, u32> = row.iter().copied().collect();
    let mut cursor = 0u32;
    loop {
        let hit = acc
            .range(cursor..)
            .find(|(c, _)| pivot_of[**c as usize] != NONE)
            .map(|(c, v)| (*c, *v));
        let Some((col, v)) = hit else { break };
        let factor = field::neg(v, p);
        for &(c, w) in &rows[pivot_of[col as usize] as usize] {
            let e = acc.entry(c).or_insert(0);
            *e = field::add(*e, field::mul(factor, w, p), p);
            if *e == 0 {
                acc.remove(&c);
            }
        }
        cursor = col + 1;
    }
    acc.into_iter().collect()
}

impl QuotientRing {
    /// Builds the quotient truncated at `order` (monomials of degree `< order`).
    pub fn new(spec: LocalRingSpec, order: usize) -> Result<Arc<QuotientRing>> {
        let n = spec.nvars();
        let count = binomial_usize(order.saturating_sub(1) + n, n).unwrap_or(usize::MAX);
        if count > MAX_MONOMIALS || order > u32::MAX as usize {
            return Err(Error::TruncationTooLarge {
                order,
                monomials: count,
                limit: MAX_MONOMIALS,
            });
        }
        let mut monomials = Vec::with_capacity(count);
        for deg in 0..order {
            monomials_of_degree(n, deg as u32, &mut monomials);
        }
        let index: HashMap<Monomial, u32> = monomials
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k as u32))
            .collect();
        let mut succ = vec![NONE; monomials.len() * n];
        for (k, m) in monomials.iter().enumerate() {
            if (m.degree() as usize) + 1 >= order {
                continue;
            }
            for i in 0..n {
                let next = m.mul(&Monomial::var(i, n))?;
                succ[k * n + i] = index[&next];
            }
        }

        let mut ring = QuotientRing {
            spec,
            order,
            monomials,
            index,
            succ,
            normal: vec![],
            basis: vec![],
        };
        ring.echelonize_relations();
        Ok(Arc::new(ring))
    }

    fn echelonize_relations(&mut self) {
        let p = self.spec.prime;
        let ncols = self.monomials.len();
        let mut pivot_of = vec![NONE; ncols];
        let mut rows: Vec<SparseRow> = vec![];

        let relations: Vec<Vec<(u32, u32)>> = self
            .spec
            .relations
            .iter()
            .map(|r| {
                r.terms()
                    .iter()
                    .filter_map(|(m, c)| {
                        self.index
                            .get(m)
                            .map(|&k| (k, field::reduce(*c, p)))
                    })
                    .collect()
            })
            .collect();

        for (rel, poly) in relations.iter().zip(&self.spec.relations) {
            let ord = poly.order() as usize;
            if ord >= self.order {
                continue;
            }
            for k in 0..self.monomials.len() {
                if self.monomials[k].degree() as usize + ord >= self.order {
                    break;
                }
                let mut row: SparseRow = rel
                    .iter()
                    .filter_map(|&(t, c)| {
                        let idx = self.mul_index(t, k as u32);
                        (idx != NONE).then_some((idx, c))
                    })
                    .collect();
                row.sort_unstable();
                let row = reduce_sparse(&row, &pivot_of, &rows, p);
                if let Some(&(lead, c)) = row.first() {
                    let inv = field::inv(c, p);
                    let row: SparseRow = row.iter().map(|&(col, v)| (col, field::mul(v, inv, p))).collect();
                    pivot_of[lead as usize] = rows.len() as u32;
                    rows.push(row);
                }
            }
        }

        // inter-reduce from the highest pivot down so that every pivot row
        // only involves standard columns besides its lead
        let mut pivots: Vec<u32> = (0..ncols as u32).filter(|&c| pivot_of[c as usize] != NONE).collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        for &col in &pivots {
            let r = pivot_of[col as usize] as usize;
            let tail: SparseRow = rows[r][1..].to_vec();
            if tail.iter().any(|&(c, _)| pivot_of[c as usize] != NONE) {
                let reduced = reduce_sparse(&tail, &pivot_of, &rows, p);
                let mut row = vec![rows[r][0]];
                row.extend(reduced);
                rows[r] = row;
            }
        }

        let mut basis_pos = vec![NONE; ncols];
        let mut basis = vec![];
        for c in 0..ncols {
            if pivot_of[c] == NONE {
                basis_pos[c] = basis.len() as u32;
                basis.push(c as u32);
            }
        }
        let normal = (0..ncols)
            .map(|c| {
                if pivot_of[c] == NONE {
                    NormalForm::Basis(basis_pos[c])
                } else {
                    let row = &rows[pivot_of[c] as usize];
                    NormalForm::Combination(
                        row[1..]
                            .iter()
                            .map(|&(col, v)| (basis_pos[col as usize], field::neg(v, p)))
                            .collect(),
                    )
                }
            })
            .collect();
        self.normal = normal;
        self.basis = basis;
    }

    /// Index of `monomials[t] * monomials[k]`, or `NONE` past the truncation.
    fn mul_index(&self, t: u32, k: u32) -> u32 {
        let n = self.spec.nvars();
        let mut idx = k;
        for (i, &e) in self.monomials[t as usize].exps().iter().enumerate() {
            for _ in 0..e {
                idx = self.succ[idx as usize * n + i];
                if idx == NONE {
                    return NONE;
                }
            }
        }
        idx
    }

    pub fn spec(&self) -> &LocalRingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn prime(&self) -> u32 {
        self.spec.prime
    }

    /// Number of standard monomials of degree `< order`.
    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_monomial(&self, pos: usize) -> &Monomial {
        &self.monomials[self.basis[pos] as usize]
    }

    pub fn basis_degree(&self, pos: usize) -> usize {
        self.basis_monomial(pos).degree() as usize
    }

    /// Total number of monomials of degree `< order` in the ambient ring.
    pub fn ambient_len(&self) -> usize {
        self.monomials.len()
    }

    /// Adds `scale * NF(monomials[idx])` into `out`.
    fn add_normal_form(&self, idx: u32, scale: u32, out: &mut [u32]) {
        let p = self.spec.prime;
        match &self.normal[idx as usize] {
            NormalForm::Basis(b) => {
                out[*b as usize] = field::add(out[*b as usize], scale, p);
            }
            NormalForm::Combination(terms) => {
                for &(b, c) in terms {
                    out[b as usize] = field::add(out[b as usize], field::mul(scale, c, p), p);
                }
            }
        }
    }

    fn poly_indices(&self, g: &Polynomial) -> Vec<(u32, u32)> {
        let p = self.spec.prime;
        g.terms()
            .iter()
            .filter_map(|(m, c)| {
                let c = field::reduce(*c, p);
                if c == 0 {
                    return None;
                }
                self.index.get(m).map(|&k| (k, c))
            })
            .collect()
    }

    /// Normal form of `g` as a dense vector over the standard basis.
    pub fn vector_of(&self, g: &Polynomial) -> Vec<u32> {
        let mut out = vec![0; self.basis_len()];
        for (k, c) in self.poly_indices(g) {
            self.add_normal_form(k, c, &mut out);
        }
        out
    }

    /// `g * v` in `A/m^N`, where `v` is a dense vector over the standard basis.
    pub fn mul_poly_vector(&self, g: &Polynomial, v: &[u32]) -> Vec<u32> {
        let terms = self.poly_indices(g);
        self.mul_indexed(&terms, v)
    }

    pub(crate) fn mul_indexed(&self, terms: &[(u32, u32)], v: &[u32]) -> Vec<u32> {
        let p = self.spec.prime;
        let mut out = vec![0; self.basis_len()];
        for (b, &vb) in v.iter().enumerate() {
            if vb == 0 {
                continue;
            }
            let col = self.basis[b];
            for &(t, c) in terms {
                let idx = self.mul_index(t, col);
                if idx != NONE {
                    self.add_normal_form(idx, field::mul(c, vb, p), &mut out);
                }
            }
        }
        out
    }

    pub(crate) fn indexed(&self, g: &Polynomial) -> Vec<(u32, u32)> {
        self.poly_indices(g)
    }

    /// The element `Σ v_b · b` as a polynomial with symmetric coefficients.
    pub fn polynomial_of(&self, v: &[u32]) -> Polynomial {
        let p = self.spec.prime;
        Polynomial::from_terms(
            self.spec.nvars(),
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(b, &c)| (self.basis_monomial(b).clone(), field::lift(c, p))),
        )
        .expect("basis monomials share the ring's variable count")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// `k[[X, V, Y]] / (X^2, XV, V^2 - XY)`.
    fn smallest_family_ring() -> LocalRingSpec {
        let n = names(&["X", "V", "Y"]);
        let rels = ["X^2", "X*V", "V^2 - X*Y"]
            .iter()
            .map(|s| parse_polynomial(s, &n).unwrap())
            .collect();
        LocalRingSpec::new(n, 32003, rels).unwrap()
    }

    #[test]
    fn monomial_enumeration_counts() {
        let mut out = vec![];
        monomials_of_degree(3, 2, &mut out);
        assert_eq!(out.len(), 6);
        assert!(out.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(binomial_usize(6, 3), Some(20));
    }

    #[test]
    fn standard_monomials_per_degree() {
        let ring = QuotientRing::new(smallest_family_ring(), 5).unwrap();
        let mut per_degree = [0usize; 5];
        for b in 0..ring.basis_len() {
            per_degree[ring.basis_degree(b)] += 1;
        }
        // 1, then Y^k, XY^{k-1}, VY^{k-1} in every positive degree
        assert_eq!(per_degree, [1, 3, 3, 3, 3]);
    }

    #[test]
    fn relation_normal_forms() {
        let ring = QuotientRing::new(smallest_family_ring(), 4).unwrap();
        let n = ring.spec().names().to_vec();
        let v2 = ring.vector_of(&parse_polynomial("V^2", &n).unwrap());
        let xy = ring.vector_of(&parse_polynomial("X*Y", &n).unwrap());
        assert_eq!(v2, xy);
        assert!(ring.vector_of(&parse_polynomial("X^2", &n).unwrap()).iter().all(|&c| c == 0));
        // V^3 = XYV = 0
        assert!(ring.vector_of(&parse_polynomial("V^3", &n).unwrap()).iter().all(|&c| c == 0));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(
            LocalRingSpec::new(names(&["X"]), 15, vec![]),
            Err(Error::BadCharacteristic(15))
        );
    }

    #[test]
    fn oversized_truncation_is_refused() {
        let spec = LocalRingSpec::new(names(&["a", "b", "c", "d", "e", "f", "g", "h"]), 7, vec![]).unwrap();
        assert!(matches!(
            QuotientRing::new(spec, 60),
            Err(Error::TruncationTooLarge { .. })
        ));
    }
}
