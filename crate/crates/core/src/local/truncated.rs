//! Ideals of `A = U/a` represented by their span in `A/m^N`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::local::field;
use crate::local::ring::QuotientRing;
use crate::poly::Polynomial;

/// Row-echelon basis over `F_p` with leading entries normalized to 1.
///
/// Every row's entries sit at or after its pivot column, so one ascending
/// pass reduces a vector completely.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    width: usize,
    p: u32,
    rows: Vec<Vec<u32>>,
    row_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub(crate) fn new(width: usize, p: u32) -> Self {
        Echelon {
            width,
            p,
            rows: vec![],
            row_of_col: vec![None; width],
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for c in 0..self.width {
            let x = v[c];
            if x == 0 {
                continue;
            }
            if let Some(r) = self.row_of_col[c] {
                let f = field::neg(x, p);
                let row = &self.rows[r];
                for j in c..self.width {
                    if row[j] != 0 {
                        v[j] = field::add(v[j], field::mul(f, row[j], p), p);
                    }
                }
            }
        }
    }

    /// Inserts `v`; returns its pivot column if it was independent.
    pub(crate) fn insert(&mut self, mut v: Vec<u32>) -> Option<usize> {
        self.reduce(&mut v);
        let lead = v.iter().position(|&x| x != 0)?;
        let inv = field::inv(v[lead], self.p);
        for x in &mut v[lead..] {
            *x = field::mul(*x, inv, self.p);
        }
        self.row_of_col[lead] = Some(self.rows.len());
        self.rows.push(v);
        Some(lead)
    }

    pub(crate) fn is_zero_mod(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Reduced row-echelon rows sorted by pivot column.
    pub(crate) fn into_reduced(mut self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let p = self.p;
        let mut pivots: Vec<usize> = (0..self.width).filter(|&c| self.row_of_col[c].is_some()).collect();
        // clear entries above each pivot, highest pivot first
        for &c in pivots.iter().rev() {
            let r = self.row_of_col[c].unwrap();
            let pivot_row = self.rows[r].clone();
            for other in 0..self.rows.len() {
                if other == r {
                    continue;
                }
                let x = self.rows[other][c];
                if x != 0 {
                    let f = field::neg(x, p);
                    let row = &mut self.rows[other];
                    for j in c..self.width {
                        if pivot_row[j] != 0 {
                            row[j] = field::add(row[j], field::mul(f, pivot_row[j], p), p);
                        }
                    }
                }
            }
        }
        pivots.sort_unstable();
        let rows = pivots
            .iter()
            .map(|&c| std::mem::take(&mut self.rows[self.row_of_col[c].unwrap()]))
            .collect();
        (rows, pivots)
    }
}

/// The span of `(J + a + m^N)/(a + m^N)` in the standard-monomial basis of `A/m^N`.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    ring: Arc<QuotientRing>,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    certified: bool,
}

impl PartialEq for TruncatedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.rows == other.rows
    }
}

impl TruncatedIdeal {
    pub(crate) fn from_vectors(ring: &Arc<QuotientRing>, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut ech = Echelon::new(ring.basis_len(), ring.prime());
        for v in vectors {
            if ech.rank() == ring.basis_len() {
                break;
            }
            ech.insert(v);
        }
        Self::from_echelon(ring, ech)
    }

    fn from_echelon(ring: &Arc<QuotientRing>, ech: Echelon) -> Self {
        let (rows, pivots) = ech.into_reduced();
        let mut ideal = TruncatedIdeal {
            ring: Arc::clone(ring),
            rows,
            pivots,
            certified: false,
        };
        ideal.certified = ideal.nakayama_certificate();
        ideal
    }

    /// The ideal generated by `gens`: span of `g * b` over standard monomials `b`.
    pub fn generated_by(ring: &Arc<QuotientRing>, gens: &[Polynomial]) -> Self {
        let width = ring.basis_len();
        let mut vectors = vec![];
        for g in gens {
            let terms = ring.indexed(g);
            if terms.is_empty() {
                continue;
            }
            for b in 0..width {
                let mut e = vec![0; width];
                e[b] = 1;
                vectors.push(ring.mul_indexed(&terms, &e));
            }
        }
        Self::from_vectors(ring, vectors)
    }

    /// `m^{N-1} ⊆ J + a + m^N`, which by Nakayama gives `m^{N-1} ⊆ J + a`.
    fn nakayama_certificate(&self) -> bool {
        let top = self.ring.order() - 1;
        let ech = self.echelon();
        (0..self.ring.basis_len())
            .filter(|&b| self.ring.basis_degree(b) == top)
            .all(|b| {
                let mut e = vec![0; self.ring.basis_len()];
                e[b] = 1;
                ech.is_zero_mod(&e)
            })
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let width = self.ring.basis_len();
        let mut ech = Echelon::new(width, self.ring.prime());
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            ech.row_of_col[c] = Some(ech.rows.len());
            ech.rows.push(row.clone());
        }
        ech
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row-echelon rows over the standard basis, in pivot order.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn same_ring(&self, other: &TruncatedIdeal) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
            || (self.ring.order() == other.ring.order() && self.ring.spec() == other.ring.spec())
    }

    fn check_compatible(&self, other: &TruncatedIdeal) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn require_certified(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            Err(Error::Uncertified(self.order()))
        }
    }

    /// Standard monomials of `A/J`, i.e. non-pivot basis positions.
    pub fn standard_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ring.basis_len()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ring.basis_len()).filter(|&b| !is_pivot[b]).collect()
    }

    /// `ℓ(A/J)`; exact only once certified.
    pub fn colength(&self) -> Result<u64> {
        self.require_certified()?;
        Ok((self.ring.basis_len() - self.rank()) as u64)
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.echelon().is_zero_mod(v)
    }

    /// `other ⊆ self`. Exact when `self` is certified.
    pub fn contains(&self, other: &TruncatedIdeal) -> Result<bool> {
        self.check_compatible(other)?;
        self.require_certified()?;
        let ech = self.echelon();
        Ok(other.rows.iter().all(|r| ech.is_zero_mod(r)))
    }

    /// `gens * self`, spanned by `g * row` for each generator and row.
    pub fn multiply_by(&self, gens: &[Polynomial]) -> TruncatedIdeal {
        let mut vectors = vec![];
        for g in gens {
            let terms = self.ring.indexed(g);
            if terms.is_empty() {
                continue;
            }
            for row in &self.rows {
                vectors.push(self.ring.mul_indexed(&terms, row));
            }
        }
        Self::from_vectors(&self.ring, vectors)
    }

    pub fn sum(&self, other: &TruncatedIdeal) -> Result<TruncatedIdeal> {
        self.check_compatible(other)?;
        let mut ech = self.echelon();
        for r in &other.rows {
            ech.insert(r.clone());
        }
        Ok(Self::from_echelon(&self.ring, ech))
    }

    /// Subspace intersection at the common order; exact for certified inputs.
    pub fn intersect(&self, other: &TruncatedIdeal) -> Result<TruncatedIdeal> {
        self.require_certified()?;
        other.require_certified()?;
        self.intersect_spans(other)
    }

    /// `(self + m^N) ∩ (other + m^N)` with no certification requirement.
    ///
    /// For homogeneous ideals this agrees with the true intersection in every
    /// degree below `N`.
    pub fn intersect_spans(&self, other: &TruncatedIdeal) -> Result<TruncatedIdeal> {
        self.check_compatible(other)?;
        let width = self.ring.basis_len();
        let other_ech = other.echelon();
        // rows (u mod other | u): rows pivoting in the right half lie in the intersection
        let mut ech = Echelon::new(2 * width, self.ring.prime());
        for u in &self.rows {
            let mut residue = u.clone();
            other_ech.reduce(&mut residue);
            residue.extend_from_slice(u);
            ech.insert(residue);
        }
        let (rows, pivots) = ech.into_reduced();
        let vectors = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, c)| *c >= width)
            .map(|(r, _)| r[width..].to_vec());
        Ok(Self::from_vectors(&self.ring, vectors))
    }

    /// `(self : (divisors))`, solved on the quotient space `A/self`.
    ///
    /// When `self` is certified it contains `m^{N-1}`, so membership of `f g`
    /// in `self` is decided exactly at order `N` and the colon is exact.
    pub fn colon(&self, divisors: &[Polynomial]) -> Result<TruncatedIdeal> {
        self.require_certified()?;
        let free = self.standard_positions();
        let w = free.len();
        if w == 0 || divisors.is_empty() {
            return Ok(self.clone());
        }
        let width = self.ring.basis_len();
        let own = self.echelon();
        let indexed: Vec<_> = divisors.iter().map(|f| self.ring.indexed(f)).collect();
        let image_width = indexed.len() * w;
        let mut ech = Echelon::new(image_width + w, self.ring.prime());
        for (k, &c) in free.iter().enumerate() {
            let mut e = vec![0; width];
            e[c] = 1;
            let mut row = vec![0; image_width + w];
            for (j, terms) in indexed.iter().enumerate() {
                let mut img = self.ring.mul_indexed(terms, &e);
                own.reduce(&mut img);
                for (t, &pos) in free.iter().enumerate() {
                    row[j * w + t] = img[pos];
                }
            }
            row[image_width + k] = 1;
            ech.insert(row);
        }
        let (rows, pivots) = ech.into_reduced();
        let mut extra = vec![];
        for (r, c) in rows.into_iter().zip(pivots) {
            if c < image_width {
                continue;
            }
            let mut lifted = vec![0; width];
            for (t, &pos) in free.iter().enumerate() {
                lifted[pos] = r[image_width + t];
            }
            extra.push(lifted);
        }
        let mut ech = self.echelon();
        for v in extra {
            ech.insert(v);
        }
        Ok(Self::from_echelon(&self.ring, ech))
    }

    /// Minimal generators: a basis of `J / mJ` lifted to polynomials.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let n = self.ring.spec().nvars();
        let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
        let mj = self.multiply_by(&vars);
        let mut ech = mj.echelon();
        let mut out = vec![];
        for row in &self.rows {
            if ech.insert(row.clone()).is_some() {
                out.push(self.ring.polynomial_of(row));
            }
        }
        out
    }
}
