//! Cached powers `I^k`, `Q^k` and products `Q^n I` for one pair `Q ⊆ I`.

use crate::engine::IdealEngine;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub struct Tower<'e, E: IdealEngine> {
    engine: &'e E,
    i_gens: Vec<Polynomial>,
    q_gens: Vec<Polynomial>,
    /// `i_pows[k] = I^(k+1)`
    i_pows: Vec<E::Ideal>,
    /// `q_pows[k] = Q^(k+1)`
    q_pows: Vec<E::Ideal>,
    /// `qn_i[n] = Q^n I`
    qn_i: Vec<E::Ideal>,
    i_colengths: Vec<Option<u64>>,
}

impl<'e, E: IdealEngine> Tower<'e, E> {
    pub fn new(engine: &'e E, i_gens: &[Polynomial], q_gens: &[Polynomial]) -> Result<Self> {
        if i_gens.is_empty() || q_gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let i = engine.ideal(i_gens)?;
        let q = engine.ideal(q_gens)?;
        Ok(Tower {
            engine,
            i_gens: i_gens.to_vec(),
            q_gens: q_gens.to_vec(),
            i_pows: vec![i.clone()],
            q_pows: vec![q],
            qn_i: vec![i],
            i_colengths: vec![],
        })
    }

    pub fn engine(&self) -> &'e E {
        self.engine
    }

    pub fn i_gens(&self) -> &[Polynomial] {
        &self.i_gens
    }

    pub fn q_gens(&self) -> &[Polynomial] {
        &self.q_gens
    }

    pub fn i(&self) -> &E::Ideal {
        &self.i_pows[0]
    }

    pub fn q(&self) -> &E::Ideal {
        &self.q_pows[0]
    }

    /// `I^k` for `k ≥ 1`.
    pub fn i_power(&mut self, k: usize) -> Result<&E::Ideal> {
        assert!(k >= 1, "powers start at 1");
        while self.i_pows.len() < k {
            let n = self.i_pows.len() + 1;
            let next = self
                .engine
                .product(self.i_pows.last().unwrap(), &self.i_pows[0])
                .map_err(|e| e.at(n))?;
            self.i_pows.push(next);
        }
        Ok(&self.i_pows[k - 1])
    }

    /// `Q^k` for `k ≥ 1`.
    pub fn q_power(&mut self, k: usize) -> Result<&E::Ideal> {
        assert!(k >= 1, "powers start at 1");
        while self.q_pows.len() < k {
            let n = self.q_pows.len() + 1;
            let next = self
                .engine
                .product(self.q_pows.last().unwrap(), &self.q_pows[0])
                .map_err(|e| e.at(n))?;
            self.q_pows.push(next);
        }
        Ok(&self.q_pows[k - 1])
    }

    /// `Q^n I` for `n ≥ 0`.
    pub fn qn_i(&mut self, n: usize) -> Result<&E::Ideal> {
        while self.qn_i.len() <= n {
            let k = self.qn_i.len();
            let next = self
                .engine
                .product(self.qn_i.last().unwrap(), &self.q_pows[0])
                .map_err(|e| e.at(k))?;
            self.qn_i.push(next);
        }
        Ok(&self.qn_i[n])
    }

    /// `Q I^n` for `n ≥ 0`, with `I^0 = A`.
    pub fn q_times_i_power(&mut self, n: usize) -> Result<E::Ideal> {
        if n == 0 {
            return Ok(self.q().clone());
        }
        if n == 1 {
            return Ok(self.qn_i(1)?.clone());
        }
        let p = self.i_power(n)?.clone();
        self.engine.product(&self.q_pows[0], &p).map_err(|e| e.at(n))
    }

    /// `ℓ(A/I^k)` for `k ≥ 1`, cached.
    pub fn i_power_colength(&mut self, k: usize) -> Result<u64> {
        if self.i_colengths.len() < k {
            self.i_colengths.resize(k, None);
        }
        if let Some(v) = self.i_colengths[k - 1] {
            return Ok(v);
        }
        let engine = self.engine;
        let v = engine.colength(self.i_power(k)?).map_err(|e| e.at(k))?;
        self.i_colengths[k - 1] = Some(v);
        Ok(v)
    }

    /// The ideal `(a_1^n, …, a_d^n)`.
    pub fn parameter_powers(&self, n: u32) -> Result<E::Ideal> {
        let mut gens = Vec::with_capacity(self.q_gens.len());
        for a in &self.q_gens {
            let mut p = a.clone();
            for _ in 1..n {
                p = p.mul(a)?;
            }
            gens.push(p);
        }
        self.engine.ideal(&gens)
    }
}
