//! Linear-algebra engine for quotients `A = U/a` of power-series rings over `F_p`.
//!
//! An ideal `J` of `A` is handled through its image in `A/m^N`. Once
//! `m^{N-1} ⊆ J + a + m^N` holds (checked directly on the echelon form),
//! Nakayama's lemma gives `m^{N-1} ⊆ J + a`, and every length computed at
//! order `N` is exact.

mod field;
mod ring;
mod truncated;

use std::sync::Arc;

pub use field::{is_prime, reduce_polynomial, DEFAULT_PRIME};
pub use ring::{LocalRingSpec, QuotientRing, MAX_MONOMIALS};
pub use truncated::TruncatedIdeal;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Default ceiling for the truncation order.
pub const DEFAULT_MAX_ORDER: usize = 24;

/// Orders tried for generators of degree `max_degree`: start at
/// `max_degree + 2` and double, capped at `max_order`.
pub fn order_schedule(max_degree: usize, max_order: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut n = (max_degree + 2).max(2);
    while n < max_order {
        out.push(n);
        n *= 2;
    }
    out.push(max_order.max(out.last().copied().unwrap_or(0)));
    out.dedup();
    out
}

fn max_degree(gens: &[Polynomial]) -> usize {
    gens.iter().map(|g| g.degree() as usize).max().unwrap_or(0)
}

/// Spans `{g m : g ∈ gens ∪ relations}` at order `order`.
pub fn build_truncated(ring: &LocalRingSpec, gens: &[Polynomial], order: usize) -> Result<TruncatedIdeal> {
    if order == 0 {
        return Err(Error::InvalidSpec("truncation order must be positive".into()));
    }
    check_gens(ring, gens)?;
    let q = QuotientRing::new(ring.clone(), order)?;
    Ok(TruncatedIdeal::generated_by(&q, gens))
}

fn check_gens(ring: &LocalRingSpec, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if g.nvars() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: g.nvars(),
            });
        }
    }
    Ok(())
}

/// Raises the order along the schedule until every ideal is certified.
fn certify_all(
    ring: &LocalRingSpec,
    ideals: &[&[Polynomial]],
    max_order: usize,
) -> Result<(Arc<QuotientRing>, Vec<TruncatedIdeal>)> {
    for g in ideals {
        check_gens(ring, g)?;
    }
    let deg = ideals.iter().map(|g| max_degree(g)).max().unwrap_or(0);
    for order in order_schedule(deg, max_order) {
        let q = QuotientRing::new(ring.clone(), order)?;
        let spans: Vec<TruncatedIdeal> = ideals.iter().map(|g| TruncatedIdeal::generated_by(&q, g)).collect();
        if spans.iter().all(TruncatedIdeal::is_certified) {
            return Ok((q, spans));
        }
    }
    Err(Error::CertificationFailed { n_max: max_order })
}

/// `ℓ_A(A/J)` with a Nakayama certificate.
pub fn colength_certified(ring: &LocalRingSpec, gens: &[Polynomial], max_order: usize) -> Result<u64> {
    let (_, spans) = certify_all(ring, &[gens], max_order)?;
    spans[0].colength()
}

/// Pairwise products of generator lists, coefficients reduced mod `p`.
pub fn ideal_product_local(ring: &LocalRingSpec, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    check_gens(ring, a)?;
    check_gens(ring, b)?;
    let mut out = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            let h = reduce_polynomial(&f.mul(g)?, ring.prime())?;
            if !h.is_zero() {
                out.push(h);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `ℓ(outer/inner)`, both certified at a common order.
pub fn quotient_length_local(
    ring: &LocalRingSpec,
    outer: &[Polynomial],
    inner: &[Polynomial],
    max_order: usize,
) -> Result<u64> {
    let (_, spans) = certify_all(ring, &[outer, inner], max_order)?;
    if !spans[0].contains(&spans[1])? {
        return Err(Error::NotContained("quotient length needs inner ⊆ outer".into()));
    }
    Ok(spans[1].colength()? - spans[0].colength()?)
}

/// `(a : f)` at order `order`; requires `a` certified there.
pub fn ideal_colon_local(ring: &LocalRingSpec, a: &[Polynomial], f: &Polynomial, order: usize) -> Result<TruncatedIdeal> {
    let span = build_truncated(ring, a, order)?;
    span.colon(std::slice::from_ref(f))
}

/// An ideal of `A` carried with generators and its certified span.
#[derive(Clone, Debug)]
pub struct LocalIdeal {
    gens: Vec<Polynomial>,
    span: TruncatedIdeal,
}

impl LocalIdeal {
    pub fn new(ring: &Arc<QuotientRing>, gens: Vec<Polynomial>) -> Result<Self> {
        check_gens(ring.spec(), &gens)?;
        let p = ring.prime();
        let mut gens = gens
            .iter()
            .map(|g| reduce_polynomial(g, p))
            .collect::<Result<Vec<_>>>()?;
        gens.retain(|g| !g.is_zero());
        gens.sort();
        gens.dedup();
        let span = TruncatedIdeal::generated_by(ring, &gens);
        Ok(LocalIdeal { gens, span })
    }

    pub(crate) fn from_span(span: TruncatedIdeal) -> Self {
        LocalIdeal {
            gens: span.minimal_generators(),
            span,
        }
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn span(&self) -> &TruncatedIdeal {
        &self.span
    }

    pub fn product(&self, other: &LocalIdeal) -> Result<LocalIdeal> {
        let ring = self.span.ring();
        let (small, large) = if self.gens.len() <= other.gens.len() {
            (self, other)
        } else {
            (other, self)
        };
        let span = large.span.multiply_by(&small.gens);
        if span.is_certified() {
            // J/mJ is exact once m^N ⊆ mJ, which keeps generator lists short
            return Ok(Self::from_span(span));
        }
        let gens = ideal_product_local(ring.spec(), &self.gens, &other.gens)?;
        Ok(LocalIdeal { gens, span })
    }

    pub fn sum(&self, other: &LocalIdeal) -> Result<LocalIdeal> {
        let span = self.span.sum(&other.span)?;
        let mut gens: Vec<Polynomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        gens.sort();
        gens.dedup();
        Ok(LocalIdeal { gens, span })
    }

    pub fn intersect(&self, other: &LocalIdeal) -> Result<LocalIdeal> {
        Ok(Self::from_span(self.span.intersect(&other.span)?))
    }

    pub fn colon(&self, other: &LocalIdeal) -> Result<LocalIdeal> {
        Ok(Self::from_span(self.span.colon(&other.gens)?))
    }

    pub fn contains(&self, other: &LocalIdeal) -> Result<bool> {
        self.span.contains(&other.span)
    }

    pub fn colength(&self) -> Result<u64> {
        self.span.colength()
    }

    /// Equality of ideals of `A`; needs both spans certified.
    pub fn equals(&self, other: &LocalIdeal) -> Result<bool> {
        self.span.require_certified()?;
        other.span.require_certified()?;
        Ok(self.span == other.span)
    }
}
