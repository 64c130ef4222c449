//! Sally-module lengths `ℓ(S_n) = ℓ(I^{n+1}/Q^n I)`, reduction numbers and
//! Ratliff–Rush closures, with the numeric identities they must satisfy.

use crate::engine::IdealEngine;
use crate::error::{Error, Result};
use crate::hilbert::{binomial, HilbertProfile};
use crate::poly::Polynomial;
use crate::tower::Tower;

pub const DEFAULT_R_MAX: usize = 10;
pub const DEFAULT_STAB_WINDOW: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KeyLengths {
    pub a_mod_i: u64,
    pub a_mod_q: u64,
    pub i2_mod_qi: u64,
    pub i3_mod_q2i: u64,
}

impl KeyLengths {
    /// `ℓ(I/Q)`.
    pub fn i_mod_q(&self) -> u64 {
        self.a_mod_q - self.a_mod_i
    }
}

pub fn key_lengths<E: IdealEngine>(tower: &mut Tower<'_, E>) -> Result<KeyLengths> {
    let engine = tower.engine();
    let a_mod_i = tower.i_power_colength(1)?;
    let a_mod_q = engine.colength(tower.q())?;
    let i2 = tower.i_power(2)?.clone();
    let qi = tower.qn_i(1)?.clone();
    let i3 = tower.i_power(3)?.clone();
    let q2i = tower.qn_i(2)?.clone();
    Ok(KeyLengths {
        a_mod_i,
        a_mod_q,
        i2_mod_qi: engine.quotient_length(&i2, &qi)?,
        i3_mod_q2i: engine.quotient_length(&i3, &q2i)?,
    })
}

/// Least `r ≥ 0` with `I^{r+1} = Q I^r`, confirmed once more at `r + 1`.
pub fn verify_reduction<E: IdealEngine>(tower: &mut Tower<'_, E>, r_max: usize) -> Result<usize> {
    let engine = tower.engine();
    if !engine.contains(tower.i(), tower.q())? {
        return Err(Error::NotContained("the reduction Q must lie in I".into()));
    }
    for r in 0..=r_max {
        let lhs = tower.i_power(r + 1)?.clone();
        let rhs = tower.q_times_i_power(r)?;
        if engine.equal(&lhs, &rhs).map_err(|e| e.at(r))? {
            let next = tower.i_power(r + 2)?.clone();
            let next_rhs = tower.q_times_i_power(r + 1)?;
            if !engine.equal(&next, &next_rhs).map_err(|e| e.at(r + 1))? {
                return Err(Error::TheoremViolation(format!(
                    "I^{} = QI^{} but I^{} ≠ QI^{}",
                    r + 1,
                    r,
                    r + 2,
                    r + 1
                )));
            }
            return Ok(r);
        }
    }
    Err(Error::NotAReduction(r_max))
}

/// `(ℓ(S_n), ℓ(A/Q^n I))` for `1 ≤ n ≤ n_max`.
pub fn sally_lengths<E: IdealEngine>(tower: &mut Tower<'_, E>, n_max: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    let engine = tower.engine();
    let mut lengths = Vec::with_capacity(n_max);
    let mut qn_i_colengths = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let outer = tower.i_power(n + 1)?.clone();
        let inner = tower.qn_i(n)?.clone();
        let c = engine.colength(&inner).map_err(|e| e.at(n))?;
        let len = engine.quotient_length(&outer, &inner).map_err(|e| e.at(n))?;
        lengths.push(len);
        qn_i_colengths.push(c);
    }
    Ok((lengths, qn_i_colengths))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RrChain {
    /// `I^{n+1} : I^n`
    Powers,
    /// `I^{n+1} : (a_1^n, …, a_d^n)`
    Parameters,
}

#[derive(Clone, Debug)]
pub struct RatliffRush<I> {
    pub closure: I,
    pub delta_length: u64,
    /// Generators of the closure outside `I`.
    pub added: Vec<Polynomial>,
    pub stabilized: bool,
    /// Stabilized only by the window test and not confirmed by `Ĩ² = QĨ`.
    pub heuristic: bool,
    pub first_stable: Option<RrChain>,
    pub chains_agree: bool,
    pub steps: usize,
    pub tilde_square_eq_q_tilde: bool,
}

struct Chain<I> {
    last: Option<I>,
    repeats: usize,
    stable_at: Option<usize>,
}

impl<I: Clone> Chain<I> {
    fn new() -> Self {
        Chain {
            last: None,
            repeats: 0,
            stable_at: None,
        }
    }

    fn push<E: IdealEngine<Ideal = I>>(&mut self, engine: &E, next: I, n: usize, window: usize) -> Result<()> {
        if let Some(prev) = &self.last {
            if engine.equal(prev, &next)? {
                self.repeats += 1;
            } else {
                self.repeats = 0;
            }
        }
        if self.repeats >= window && self.stable_at.is_none() {
            self.stable_at = Some(n);
        }
        self.last = Some(next);
        Ok(())
    }
}

/// Runs both colon chains until each has repeated for `window` consecutive
/// steps or `n_max` is reached.
///
/// The chains are ascending and bounded by `Ĩ`. When the union `J` satisfies
/// `J² = QJ`, its associated graded ring is Cohen–Macaulay, so `J` is
/// Ratliff–Rush closed and `J = Ĩ` exactly.
pub fn ratliff_rush<E: IdealEngine>(
    tower: &mut Tower<'_, E>,
    n_max: usize,
    window: usize,
) -> Result<RatliffRush<E::Ideal>> {
    let engine = tower.engine();
    let window = window.max(1);
    let mut powers = Chain::new();
    let mut params = Chain::new();
    let mut steps = 0;
    for n in 1..=n_max.max(1) {
        steps = n;
        let next = tower.i_power(n + 1)?.clone();
        if powers.stable_at.is_none() {
            let base = tower.i_power(n)?.clone();
            let c = engine.colon(&next, &base).map_err(|e| e.at(n))?;
            powers.push(engine, c, n, window)?;
        }
        if params.stable_at.is_none() {
            let base = tower.parameter_powers(n as u32)?;
            let c = engine.colon(&next, &base).map_err(|e| e.at(n))?;
            params.push(engine, c, n, window)?;
        }
        if powers.stable_at.is_some() && params.stable_at.is_some() {
            break;
        }
    }
    let a = powers.last.expect("chain has at least one term");
    let b = params.last.expect("chain has at least one term");
    let chains_agree = engine.equal(&a, &b)?;
    let closure = if chains_agree { a } else { engine.sum(&a, &b)? };
    let first_stable = match (powers.stable_at, params.stable_at) {
        (Some(x), Some(y)) if y < x => Some(RrChain::Parameters),
        (Some(_), _) => Some(RrChain::Powers),
        (None, Some(_)) => Some(RrChain::Parameters),
        (None, None) => None,
    };
    let stabilized = powers.stable_at.is_some() && params.stable_at.is_some();
    let i = tower.i().clone();
    if !engine.contains(&closure, &i)? {
        return Err(Error::TheoremViolation("I ⊄ Ĩ".into()));
    }
    let delta_length = engine.quotient_length(&closure, &i)?;
    let added = engine.generators_outside(&closure, &i)?;
    let square = engine.product(&closure, &closure)?;
    let q_tilde = engine.product(tower.q(), &closure)?;
    let tilde_square_eq_q_tilde = engine.equal(&square, &q_tilde)?;
    Ok(RatliffRush {
        closure,
        delta_length,
        added,
        stabilized,
        heuristic: !tilde_square_eq_q_tilde,
        first_stable,
        chains_agree,
        steps,
        tilde_square_eq_q_tilde,
    })
}

/// One evaluated identity or inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

fn require_all(checks: Vec<Check>) -> Result<Vec<Check>> {
    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        return Err(Error::TheoremViolation(format!("{}: {}", bad.name, bad.detail)));
    }
    Ok(checks)
}

/// Northcott's inequality and equality case, and `e_2 ≥ 0`.
pub fn northcott_narita_check(profile: &HilbertProfile, key: &KeyLengths, s1: u64, r: usize) -> Result<Vec<Check>> {
    let e = &profile.e;
    let d = profile.d;
    let gap = e[0] - i128::from(key.a_mod_i);
    let mut checks = vec![Check::new(
        "northcott-inequality",
        e[1] >= gap,
        format!("e_1 = {} ≥ e_0 - ℓ(A/I) = {gap}", e[1]),
    )];
    let equality = e[1] == gap;
    let minimal = s1 == 0 && r <= 1;
    checks.push(Check::new(
        "northcott-equality-iff-I2=QI",
        equality == minimal,
        format!("equality {equality}, ℓ(I²/QI) = {s1}, r = {r}"),
    ));
    if d >= 2 {
        checks.push(Check::new("narita-e2-nonnegative", e[2] >= 0, format!("e_2 = {}", e[2])));
        if equality {
            let tail_zero = e[2..].iter().all(|&x| x == 0);
            checks.push(Check::new(
                "northcott-equality-tail",
                tail_zero,
                format!("e_2..e_d = {:?}", &e[2..]),
            ));
        }
    }
    require_all(checks)
}

/// Length identity `H(n) = e_0 C(n+d,d) - (e_0 - ℓ(A/I)) C(n+d-1,d-1) - ℓ(S_n)`,
/// the closed form of `ℓ(A/Q^n I)`, `e_0 = ℓ(A/Q)` and the rank proxy.
pub fn sally_consistency(
    profile: &HilbertProfile,
    lengths: &[u64],
    qn_i_colengths: &[u64],
    key: &KeyLengths,
    r: usize,
) -> Result<Vec<Check>> {
    let d = profile.d as i64;
    let e0 = profile.e[0];
    let li = i128::from(key.a_mod_i);
    let lq = i128::from(key.a_mod_q);
    let mut checks = vec![Check::new(
        "e0-equals-colength-Q",
        e0 == lq,
        format!("e_0 = {e0}, ℓ(A/Q) = {lq}"),
    )];
    let top = profile.table.len().min(lengths.len() + 1);
    let mut bad = vec![];
    for n in 0..top {
        let s = if n == 0 { 0 } else { i128::from(lengths[n - 1]) };
        let ni = n as i64;
        let rhs = e0 * binomial(ni + d, d) - (e0 - li) * binomial(ni + d - 1, d - 1) - s;
        if rhs != i128::from(profile.table[n]) {
            bad.push(n);
        }
    }
    checks.push(Check::new(
        "length-identity",
        bad.is_empty(),
        if bad.is_empty() {
            format!("holds for 0 ≤ n < {top}")
        } else {
            format!("fails at n = {bad:?}")
        },
    ));
    let mut bad = vec![];
    for (k, &c) in qn_i_colengths.iter().enumerate() {
        let n = k as i64 + 1;
        let closed = lq * binomial(n + d - 1, d) + li * binomial(n + d - 1, d - 1);
        if closed != i128::from(c) {
            bad.push(n);
        }
    }
    checks.push(Check::new(
        "colength-QnI-closed-form",
        bad.is_empty(),
        if bad.is_empty() {
            "ℓ(A/Q^nI) = ℓ(A/Q)C(n+d-1,d) + ℓ(A/I)C(n+d-1,d-1)".to_string()
        } else {
            format!("fails at n = {bad:?}")
        },
    ));
    // S is generated in degrees 1..r-1, all of them nonzero, and S = 0 iff r ≤ 1
    let support = if r <= 1 {
        lengths.iter().all(|&s| s == 0)
    } else {
        lengths.iter().take(r - 1).all(|&s| s > 0)
    };
    checks.push(Check::new(
        "sally-support",
        support,
        format!("r = {r}, ℓ(S_n) = {lengths:?}"),
    ));
    let rank = profile.e[1] - e0 + li;
    checks.push(Check::new("rank-proxy-nonnegative", rank >= 0, format!("e_1 - e_0 + ℓ(A/I) = {rank}")));
    require_all(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::MonomialEngine;
    use crate::hilbert::hilbert_profile;
    use crate::parse::parse_polynomial;

    fn setup(i: &[&str], q: &[&str]) -> (MonomialEngine, Vec<Polynomial>, Vec<Polynomial>) {
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let p = |v: &[&str]| v.iter().map(|s| parse_polynomial(s, &names).unwrap()).collect();
        (MonomialEngine::new(names.clone()), p(i), p(q))
    }

    #[test]
    fn two_variable_example() {
        let (eng, i, q) = setup(&["X^4", "Y^4", "X^3*Y", "X*Y^3"], &["X^4", "Y^4"]);
        let mut t = Tower::new(&eng, &i, &q).unwrap();
        let key = key_lengths(&mut t).unwrap();
        assert_eq!(
            key,
            KeyLengths {
                a_mod_i: 11,
                a_mod_q: 16,
                i2_mod_qi: 2,
                i3_mod_q2i: 3
            }
        );
        assert_eq!(verify_reduction(&mut t, 10).unwrap(), 2);
        let (lengths, qni) = sally_lengths(&mut t, 6).unwrap();
        assert_eq!(lengths, vec![2, 3, 4, 5, 6, 7]);
        let profile = hilbert_profile(&mut t, 2, 10).unwrap();
        assert_eq!(profile.e, vec![16, 6, 0]);
        northcott_narita_check(&profile, &key, lengths[0], 2).unwrap();
        let checks = sally_consistency(&profile, &lengths, &qni, &key, 2).unwrap();
        assert!(checks.iter().all(|c| c.holds));
        let mut broken = lengths.clone();
        broken[2] += 1;
        assert!(matches!(
            sally_consistency(&profile, &broken, &qni, &key, 2),
            Err(Error::TheoremViolation(_))
        ));

        let rr = ratliff_rush(&mut t, 10, 2).unwrap();
        assert_eq!(rr.delta_length, 1);
        let names = eng.names().to_vec();
        assert_eq!(rr.added, vec![parse_polynomial("X^2*Y^2", &names).unwrap()]);
        assert!(rr.tilde_square_eq_q_tilde && rr.stabilized && !rr.heuristic && rr.chains_agree);
    }

    #[test]
    fn reduction_numbers() {
        let (eng, i, q) = setup(&["X^2", "X*Y", "Y^2"], &["X^2", "Y^2"]);
        let mut t = Tower::new(&eng, &i, &q).unwrap();
        assert_eq!(verify_reduction(&mut t, 10).unwrap(), 1);
        let (eng2, i2, q2) = setup(&["X^2", "Y^2"], &["X^2", "Y^2"]);
        let _ = eng;
        let mut t2 = Tower::new(&eng2, &i2, &q2).unwrap();
        assert_eq!(verify_reduction(&mut t2, 10).unwrap(), 0);
        let rr = ratliff_rush(&mut t2, 8, 2).unwrap();
        assert_eq!(rr.delta_length, 0);
        assert!(rr.added.is_empty());
    }

    #[test]
    fn non_reductions_are_reported() {
        let (eng, i, q) = setup(&["X", "Y^2"], &["X^2", "Y^2"]);
        let mut t = Tower::new(&eng, &i, &q).unwrap();
        assert_eq!(verify_reduction(&mut t, 3), Err(Error::NotAReduction(3)));
        let (eng, i, q) = setup(&["X^2", "Y^2"], &["X", "Y^2"]);
        let mut t = Tower::new(&eng, &i, &q).unwrap();
        assert!(matches!(verify_reduction(&mut t, 3), Err(Error::NotContained(_))));
    }
}
