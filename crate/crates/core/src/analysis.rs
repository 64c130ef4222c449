//! Runs every computation for one pair `Q ⊆ I` and collects the results.

use crate::engine::IdealEngine;
use crate::error::{Error, Result};
use crate::hilbert::{default_n_max, hilbert_profile, HilbertProfile};
use crate::poly::Polynomial;
use crate::sally::{
    key_lengths, northcott_narita_check, ratliff_rush, sally_consistency, sally_lengths, verify_reduction, Check,
    KeyLengths, RrChain, DEFAULT_R_MAX, DEFAULT_STAB_WINDOW,
};
use crate::tower::Tower;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Hilbert table length; `None` means `d + 8`.
    pub n_max: Option<usize>,
    pub r_max: usize,
    pub stab_window: usize,
    /// Also fit the Hilbert polynomial of `Ĩ` when it differs from `I`.
    pub closure_coefficients: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n_max: None,
            r_max: DEFAULT_R_MAX,
            stab_window: DEFAULT_STAB_WINDOW,
            closure_coefficients: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrSummary {
    pub delta_length: u64,
    pub added: Vec<Polynomial>,
    pub stabilized: bool,
    pub heuristic: bool,
    pub first_stable: Option<RrChain>,
    pub chains_agree: bool,
    pub steps: usize,
    pub tilde_square_eq_q_tilde: bool,
    /// Hilbert coefficients of `Ĩ`, when computed.
    pub e: Option<Vec<i128>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SallyProfile {
    /// `lengths[k] = ℓ(S_{k+1})`.
    pub lengths: Vec<u64>,
    pub qn_i_colengths: Vec<u64>,
    pub r: usize,
    pub key: KeyLengths,
    pub rank_proxy: i128,
    /// `ℓ(I²/QI)` when `I³ = QI²`, else undetermined.
    pub mu_proxy: Option<u64>,
    pub rr: RrSummary,
}

/// All computed data for one problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub engine: &'static str,
    /// Truncation order used by the local engine.
    pub order: Option<usize>,
    pub names: Vec<String>,
    pub d: usize,
    pub hilbert: HilbertProfile,
    pub sally: SallyProfile,
    /// `𝔪I² ⊆ QI`.
    pub m_i2_in_qi: bool,
    /// `I² ⊆ Q`.
    pub q_contains_i2: bool,
    pub checks: Vec<Check>,
}

impl Analysis {
    pub fn e(&self) -> &[i128] {
        &self.hilbert.e
    }

    /// `e_i`, zero past `d`.
    pub fn e_at(&self, i: usize) -> i128 {
        self.hilbert.e.get(i).copied().unwrap_or(0)
    }

    pub fn key(&self) -> &KeyLengths {
        &self.sally.key
    }

    /// `e_1 - (e_0 - ℓ(A/I))`.
    pub fn northcott_gap(&self) -> i128 {
        self.sally.rank_proxy
    }

    pub fn i3_eq_q_i2(&self) -> bool {
        self.sally.r <= 2
    }
}

/// Computes key lengths, the reduction number, the Hilbert profile, Sally
/// lengths and the Ratliff–Rush closure, then checks the general identities.
pub fn analyze<E: IdealEngine>(
    engine: &E,
    i_gens: &[Polynomial],
    q_gens: &[Polynomial],
    d: usize,
    opts: &Options,
) -> Result<Analysis> {
    if q_gens.len() != d {
        return Err(Error::InvalidSpec(format!(
            "Q has {} generators but d = {d}",
            q_gens.len()
        )));
    }
    let mut tower = Tower::new(engine, i_gens, q_gens)?;
    let key = key_lengths(&mut tower)?;
    let r = verify_reduction(&mut tower, opts.r_max)?;
    let n_max = opts.n_max.unwrap_or_else(|| default_n_max(d));
    let hilbert = hilbert_profile(&mut tower, d, n_max)?;
    let n_top = hilbert.table.len() - 1;
    let (lengths, qn_i_colengths) = sally_lengths(&mut tower, n_top)?;
    let rr = ratliff_rush(&mut tower, n_top, opts.stab_window)?;

    let m = engine.maximal()?;
    let i2 = tower.i_power(2)?.clone();
    let m_i2 = engine.product(&m, &i2)?;
    let qi = tower.qn_i(1)?.clone();
    let m_i2_in_qi = engine.contains(&qi, &m_i2)?;
    let q_contains_i2 = engine.contains(tower.q(), &i2)?;

    let mut checks = vec![];
    checks.push(Check {
        name: "hilbert-fit-exact".into(),
        holds: hilbert.is_exact()?,
        detail: format!("postulation {}, {} extra points", hilbert.postulation, hilbert.verified_points),
    });
    checks.extend(northcott_narita_check(&hilbert, &key, lengths[0], r)?);
    checks.extend(sally_consistency(&hilbert, &lengths, &qn_i_colengths, &key, r)?);

    let rr_e = if opts.closure_coefficients && rr.delta_length > 0 {
        let closure_gens = engine.generators(&rr.closure);
        let mut ctower = Tower::new(engine, &closure_gens, q_gens)?;
        let profile = hilbert_profile(&mut ctower, d, n_max)?;
        let same = profile.e == hilbert.e;
        if !same {
            return Err(Error::TheoremViolation(format!(
                "e(Ĩ) = {:?} differs from e(I) = {:?}",
                profile.e, hilbert.e
            )));
        }
        checks.push(Check {
            name: "closure-coefficients".into(),
            holds: true,
            detail: format!("e(Ĩ) = e(I) = {:?}", profile.e),
        });
        Some(profile.e)
    } else {
        None
    };

    let rank_proxy = hilbert.e[1] - hilbert.e[0] + i128::from(key.a_mod_i);
    let mu_proxy = (r <= 2).then_some(key.i2_mod_qi);
    Ok(Analysis {
        engine: engine.name(),
        order: None,
        names: engine.names().to_vec(),
        d,
        sally: SallyProfile {
            lengths,
            qn_i_colengths,
            r,
            key,
            rank_proxy,
            mu_proxy,
            rr: RrSummary {
                delta_length: rr.delta_length,
                added: rr.added,
                stabilized: rr.stabilized,
                heuristic: rr.heuristic,
                first_stable: rr.first_stable,
                chains_agree: rr.chains_agree,
                steps: rr.steps,
                tilde_square_eq_q_tilde: rr.tilde_square_eq_q_tilde,
                e: rr_e,
            },
        },
        hilbert,
        m_i2_in_qi,
        q_contains_i2,
        checks,
    })
}
