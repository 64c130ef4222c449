//! JSON problem specifications, the built-in families, and engine dispatch.

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, Analysis, Options};
use crate::engine::{IdealEngine, LocalEngine, MonomialEngine};
use crate::hilbert::{hilbert_profile, HilbertProfile};
use crate::tower::Tower;
use crate::error::{Error, Result};
use crate::local::{self, LocalRingSpec, DEFAULT_MAX_ORDER, DEFAULT_PRIME};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    /// 0 or a prime.
    #[serde(rename = "char", default)]
    pub characteristic: u64,
    #[serde(default)]
    pub relations: Vec<String>,
    /// Krull dimension; required when there are relations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default = "default_r_max")]
    pub r_max: usize,
    #[serde(rename = "N_max", default = "default_max_order")]
    pub max_order: usize,
    #[serde(default = "default_window")]
    pub stab_window: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
}

fn default_r_max() -> usize {
    crate::sally::DEFAULT_R_MAX
}

fn default_max_order() -> usize {
    DEFAULT_MAX_ORDER
}

fn default_window() -> usize {
    crate::sally::DEFAULT_STAB_WINDOW
}

impl Default for OptionSpec {
    fn default() -> Self {
        OptionSpec {
            n_max: None,
            r_max: default_r_max(),
            max_order: default_max_order(),
            stab_window: default_window(),
            prime: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub ring: RingSpec,
    #[serde(rename = "ideal_I")]
    pub ideal_i: Vec<String>,
    #[serde(rename = "ideal_Q")]
    pub ideal_q: Vec<String>,
    #[serde(default)]
    pub options: OptionSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    Monomial,
    Local,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Monomial => "monomial",
            EngineKind::Local => "local",
        }
    }
}

/// A validated problem with parsed polynomials.
#[derive(Clone, Debug)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub engine: EngineKind,
    pub d: usize,
    pub relations: Vec<Polynomial>,
    pub i_gens: Vec<Polynomial>,
    pub q_gens: Vec<Polynomial>,
    /// Prime used by the local engine.
    pub prime: u64,
}

fn parse_all(src: &[String], names: &[String]) -> Result<Vec<Polynomial>> {
    src.iter().map(|s| parse_polynomial(s, names)).collect()
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem specs always serialize")
    }

    /// Parses and validates; chooses the monomial engine when there are no
    /// relations and every generator is a monomial.
    pub fn validate(&self) -> Result<Problem> {
        let names = &self.ring.vars;
        if names.is_empty() {
            return Err(Error::InvalidSpec("the ring has no variables".into()));
        }
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::InvalidSpec(format!("variable '{n}' is declared twice")));
            }
        }
        let relations = parse_all(&self.ring.relations, names)?;
        let i_gens = parse_all(&self.ideal_i, names)?;
        let q_gens = parse_all(&self.ideal_q, names)?;
        if i_gens.is_empty() || q_gens.is_empty() {
            return Err(Error::InvalidSpec("ideal_I and ideal_Q must be nonempty".into()));
        }
        let all_monomial = i_gens.iter().chain(&q_gens).all(|g| g.terms().len() == 1);
        let engine = if relations.is_empty() && all_monomial {
            EngineKind::Monomial
        } else {
            EngineKind::Local
        };
        let d = match engine {
            EngineKind::Monomial => {
                if let Some(dim) = self.ring.dim {
                    if dim != names.len() {
                        return Err(Error::InvalidSpec(format!(
                            "a relation-free ring in {} variables has dimension {}, not {dim}",
                            names.len(),
                            names.len()
                        )));
                    }
                }
                names.len()
            }
            EngineKind::Local if relations.is_empty() => self.ring.dim.unwrap_or(names.len()),
            EngineKind::Local => self
                .ring
                .dim
                .ok_or_else(|| Error::InvalidSpec("ring.dim is required when relations are given".into()))?,
        };
        if q_gens.len() != d {
            return Err(Error::InvalidSpec(format!(
                "ideal_Q has {} generators but the ring has dimension {d}",
                q_gens.len()
            )));
        }
        let c = self.ring.characteristic;
        if c != 0 && !local::is_prime(c) {
            return Err(Error::BadCharacteristic(c));
        }
        let prime = match (self.options.prime, c) {
            (Some(p), _) => p,
            (None, 0) if engine == EngineKind::Monomial => DEFAULT_PRIME,
            (None, c) => c,
        };
        if engine == EngineKind::Local {
            LocalRingSpec::new(names.clone(), prime, vec![])?;
        }
        Ok(Problem {
            spec: self.clone(),
            engine,
            d,
            relations,
            i_gens,
            q_gens,
            prime,
        })
    }
}

impl Problem {
    pub fn names(&self) -> &[String] {
        &self.spec.ring.vars
    }

    pub fn options(&self) -> Options {
        Options {
            n_max: self.spec.options.n_max,
            r_max: self.spec.options.r_max,
            stab_window: self.spec.options.stab_window,
            ..Options::default()
        }
    }

    fn n_max(&self) -> usize {
        self.spec
            .options
            .n_max
            .unwrap_or_else(|| crate::hilbert::default_n_max(self.d))
    }

    /// First truncation order tried by the local engine.
    pub fn initial_order(&self) -> usize {
        let deg = self.i_gens.iter().map(|g| g.degree() as usize).max().unwrap_or(1);
        (self.n_max() + 2) * deg.max(1) + 2
    }

    pub fn local_ring(&self) -> Result<LocalRingSpec> {
        LocalRingSpec::new(self.names().to_vec(), self.prime, self.relations.clone())
    }

    /// Runs `f` on local engines of growing truncation order until no
    /// certification failure occurs; returns the result and the order used.
    pub fn escalate<T>(&self, mut f: impl FnMut(&LocalEngine) -> Result<T>) -> Result<(T, usize)> {
        let ring = self.local_ring()?;
        let max_order = self.spec.options.max_order;
        let mut order = self.initial_order().min(max_order);
        loop {
            let engine = LocalEngine::new(ring.clone(), order)?;
            match f(&engine) {
                Ok(t) => return Ok((t, order)),
                Err(e) if e.is_truncation_failure() && order < max_order => {
                    order = (order * 2).min(max_order);
                }
                Err(e) if e.is_truncation_failure() => {
                    return Err(Error::CertificationFailed { n_max: max_order });
                }
                Err(e) => return Err(e),
            }
        }
    }

    /// Runs the analysis, escalating the truncation order for the local engine.
    pub fn analyze(&self) -> Result<Analysis> {
        let opts = self.options();
        match self.engine {
            EngineKind::Monomial => {
                let engine = MonomialEngine::new(self.names().to_vec());
                analyze(&engine, &self.i_gens, &self.q_gens, self.d, &opts)
            }
            EngineKind::Local => {
                let (mut a, order) = self.escalate(|e| analyze(e, &self.i_gens, &self.q_gens, self.d, &opts))?;
                a.order = Some(order);
                Ok(a)
            }
        }
    }

    /// Hilbert function of `I` up to `n_max` with the fitted polynomial; the
    /// second value is the truncation order when the local engine was used.
    pub fn hilbert(&self, n_max: usize) -> Result<(HilbertProfile, Option<usize>)> {
        fn run<E: IdealEngine>(e: &E, p: &Problem, n_max: usize) -> Result<HilbertProfile> {
            let mut tower = Tower::new(e, &p.i_gens, &p.q_gens)?;
            hilbert_profile(&mut tower, p.d, n_max)
        }
        match self.engine {
            EngineKind::Monomial => {
                let engine = MonomialEngine::new(self.names().to_vec());
                Ok((run(&engine, self, n_max)?, None))
            }
            EngineKind::Local => {
                let mut p = self.clone();
                p.spec.options.n_max = Some(n_max);
                let (h, order) = p.escalate(|e| run(e, &p, n_max))?;
                Ok((h, Some(order)))
            }
        }
    }
}

/// Parameters of the built-in families.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuiltinParams {
    pub m: Option<usize>,
    pub d: Option<usize>,
    pub lambda: Vec<usize>,
}

pub const BUILTIN_NAMES: [&str; 2] = ["ex32", "sec5"];

/// `ex32`: `k[[X, Y, Z_1..Z_m]]`, `Q = (X^4, Y^4, Z_i)`, `I = Q + (X^3Y, XY^3)`.
///
/// `sec5`: `k[[X_1..X_m, V, Y_1..Y_d]]` modulo `X_iX_j`, `X_iV` and
/// `V^2 - Σ_{i≤d} X_iY_i`, with `Q = (Y_i)` and `I = Q + (X_α : α ∈ Λ) + (V)`.
pub fn builtin_example(name: &str, params: &BuiltinParams) -> Result<ProblemSpec> {
    match name {
        "ex32" => {
            if params.d.is_some() || !params.lambda.is_empty() {
                return Err(Error::InvalidSpec("ex32 takes only --m".into()));
            }
            let m = params.m.unwrap_or(0);
            let mut vars = vec!["X".to_string(), "Y".to_string()];
            vars.extend((1..=m).map(|i| format!("Z{i}")));
            let mut q = vec!["X^4".to_string(), "Y^4".to_string()];
            q.extend((1..=m).map(|i| format!("Z{i}")));
            let mut i = q.clone();
            i.extend(["X^3*Y".to_string(), "X*Y^3".to_string()]);
            Ok(ProblemSpec {
                ring: RingSpec {
                    vars,
                    characteristic: 0,
                    relations: vec![],
                    dim: None,
                },
                ideal_i: i,
                ideal_q: q,
                options: OptionSpec::default(),
            })
        }
        "sec5" => {
            let m = params.m.unwrap_or(1);
            let d = params.d.unwrap_or(1);
            if d == 0 || m < d {
                return Err(Error::InvalidSpec(format!("sec5 needs m ≥ d > 0, got m = {m}, d = {d}")));
            }
            let mut lambda = params.lambda.clone();
            lambda.sort_unstable();
            lambda.dedup();
            if let Some(&a) = lambda.iter().find(|&&a| a == 0 || a > m) {
                return Err(Error::InvalidSpec(format!("Λ must lie in 1..={m}, got {a}")));
            }
            if let Some(&a) = lambda.iter().find(|&&a| a <= d) {
                return Err(Error::InvalidSpec(format!("Λ must avoid 1..={d}, got {a}")));
            }
            let mut vars: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
            vars.push("V".into());
            vars.extend((1..=d).map(|i| format!("Y{i}")));
            let mut relations = vec![];
            for i in 1..=m {
                for j in i..=m {
                    relations.push(if i == j { format!("X{i}^2") } else { format!("X{i}*X{j}") });
                }
            }
            relations.extend((1..=m).map(|i| format!("X{i}*V")));
            let mut v2 = "V^2".to_string();
            for i in 1..=d {
                v2.push_str(&format!(" - X{i}*Y{i}"));
            }
            relations.push(v2);
            let q: Vec<String> = (1..=d).map(|i| format!("Y{i}")).collect();
            let mut i = q.clone();
            i.extend(lambda.iter().map(|a| format!("X{a}")));
            i.push("V".into());
            Ok(ProblemSpec {
                ring: RingSpec {
                    vars,
                    characteristic: DEFAULT_PRIME,
                    relations,
                    dim: Some(d),
                },
                ideal_i: i,
                ideal_q: q,
                options: OptionSpec::default(),
            })
        }
        other => Err(Error::InvalidSpec(format!(
            "unknown example '{other}' (known: {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let p = builtin_example("ex32", &BuiltinParams::default()).unwrap().validate().unwrap();
        assert_eq!((p.engine, p.d, p.names().len()), (EngineKind::Monomial, 2, 2));
        let params = BuiltinParams {
            m: Some(1),
            d: Some(1),
            lambda: vec![],
        };
        let p = builtin_example("sec5", &params).unwrap().validate().unwrap();
        assert_eq!((p.engine, p.d, p.names().len()), (EngineKind::Local, 1, 3));
        assert_eq!(p.relations.len(), 3);
    }

    #[test]
    fn lambda_must_avoid_parameters() {
        let params = BuiltinParams {
            m: Some(2),
            d: Some(2),
            lambda: vec![1],
        };
        assert!(matches!(builtin_example("sec5", &params), Err(Error::InvalidSpec(_))));
        assert!(builtin_example("sec6", &params).is_err());
    }

    #[test]
    fn json_round_trip() {
        for (name, params) in [
            ("ex32", BuiltinParams { m: Some(2), ..Default::default() }),
            (
                "sec5",
                BuiltinParams {
                    m: Some(3),
                    d: Some(2),
                    lambda: vec![3],
                },
            ),
        ] {
            let spec = builtin_example(name, &params).unwrap();
            let back = ProblemSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back, spec);
            let names = &spec.ring.vars;
            for src in spec.ring.relations.iter().chain(&spec.ideal_i).chain(&spec.ideal_q) {
                let p = parse_polynomial(src, names).unwrap();
                let printed = p.display_with(names).to_string();
                assert_eq!(parse_polynomial(&printed, names).unwrap(), p, "{src}");
            }
        }
    }

    #[test]
    fn validation_errors() {
        let mut spec = builtin_example("ex32", &BuiltinParams::default()).unwrap();
        spec.ideal_q.pop();
        assert!(matches!(spec.validate(), Err(Error::InvalidSpec(_))));
        let mut spec = builtin_example("sec5", &BuiltinParams::default()).unwrap();
        spec.ring.characteristic = 0;
        assert_eq!(spec.validate().unwrap_err(), Error::BadCharacteristic(0));
        spec.ring.characteristic = 12;
        assert_eq!(spec.validate().unwrap_err(), Error::BadCharacteristic(12));
        assert!(ProblemSpec::from_json("{\"ring\": 3}").is_err());
    }
}
