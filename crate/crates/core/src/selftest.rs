//! The built-in acceptance catalog: fixed examples with known invariants plus
//! seeded random suites checked against independent oracles.

use std::fmt::{self, Display};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{analyze, Analysis, Options};
use crate::classify::{classify, ClassificationReport, Status};
use crate::engine::{IdealEngine, LocalEngine, MonomialEngine};
use crate::error::{Error, Result};
use crate::family::{span_identities, IDENTITY_ORDER};
use crate::hilbert::binomial;
use crate::ideal::MonomialIdeal;
use crate::local::{LocalRingSpec, DEFAULT_PRIME};
use crate::monomial::{default_names, Monomial};
use crate::oracle::box_count;
use crate::poly::Polynomial;
use crate::problem::{builtin_example, BuiltinParams};
use crate::sally::Check;
use crate::staircase;

pub const DEFAULT_SEED: u64 = 0x5a11_7e57;

pub const STAIRCASE_CASES: usize = 200;
pub const CROSS_ENGINE_CASES: usize = 50;
pub const PAIR_CASES: usize = 100;

/// One predicted-vs-observed disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub context: String,
    pub name: String,
    pub predicted: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: usize,
    pub diffs: Vec<Diff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    pub passed: bool,
}

impl Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.criteria {
            writeln!(
                f,
                "criterion {}: {} ({} checks) {}",
                c.id,
                if c.passed { "PASS" } else { "FAIL" },
                c.checked,
                c.title
            )?;
            for d in &c.diffs {
                writeln!(
                    f,
                    "    {}: {}: predicted {}, observed {}",
                    d.context, d.name, d.predicted, d.observed
                )?;
            }
        }
        writeln!(f, "seed {}", self.seed)?;
        write!(f, "selftest {}", if self.passed { "PASS" } else { "FAILED" })
    }
}

/// Accumulates comparisons for one criterion.
#[derive(Default)]
struct Ledger {
    checked: usize,
    diffs: Vec<Diff>,
}

impl Ledger {
    fn expect<T: PartialEq + Display>(&mut self, context: &str, name: &str, predicted: T, observed: T) {
        self.checked += 1;
        if predicted != observed {
            self.diffs.push(Diff {
                context: context.into(),
                name: name.into(),
                predicted: predicted.to_string(),
                observed: observed.to_string(),
            });
        }
    }

    fn error(&mut self, context: &str, err: &Error) {
        self.checked += 1;
        self.diffs.push(Diff {
            context: context.into(),
            name: "computation".into(),
            predicted: "success".into(),
            observed: format!("error: {err}"),
        });
    }

    /// Every computable classifier prediction must match.
    fn classification(&mut self, context: &str, c: &ClassificationReport) {
        for (id, p) in c.mismatches() {
            self.diffs.push(Diff {
                context: format!("{context} [{id}]"),
                name: p.name.clone(),
                predicted: p.predicted.to_string(),
                observed: p.observed.to_string(),
            });
        }
        let n: usize = c.entries.iter().map(|e| e.predictions.len()).sum();
        self.checked += n.max(1);
        if c.status != Status::Pass && c.mismatches().is_empty() {
            self.expect(context, "classification status", "PASS", "FAILED");
        }
    }

    fn finish(self, id: usize, title: &'static str) -> CriterionResult {
        CriterionResult {
            id,
            title,
            passed: self.diffs.is_empty() && self.checked > 0,
            checked: self.checked,
            diffs: self.diffs,
        }
    }
}

/// A built-in instance together with its analysis.
struct Instance {
    context: String,
    params: BuiltinParams,
    result: Result<(Analysis, ClassificationReport)>,
}

fn run_builtin(name: &str, params: BuiltinParams) -> Instance {
    let context = match name {
        "ex32" => format!("ex32 m={}", params.m.unwrap_or(0)),
        _ => format!(
            "sec5 m={} d={} Λ={:?}",
            params.m.unwrap_or(1),
            params.d.unwrap_or(1),
            params.lambda
        ),
    };
    let result = builtin_example(name, &params)
        .and_then(|s| s.validate())
        .and_then(|p| p.analyze())
        .map(|a| {
            let c = classify(&a);
            (a, c)
        });
    Instance {
        context,
        params,
        result,
    }
}

fn ex32(m: usize) -> BuiltinParams {
    BuiltinParams {
        m: Some(m),
        ..BuiltinParams::default()
    }
}

fn sec5(m: usize, d: usize, lambda: &[usize]) -> BuiltinParams {
    BuiltinParams {
        m: Some(m),
        d: Some(d),
        lambda: lambda.to_vec(),
    }
}

fn tuple(xs: &[i128]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn criterion_1(inst: &Instance) -> CriterionResult {
    let mut l = Ledger::default();
    let ctx = inst.context.as_str();
    match &inst.result {
        Err(e) => l.error(ctx, e),
        Ok((a, c)) => {
            let k = a.key();
            l.expect(ctx, "ℓ(A/Q)", 16, k.a_mod_q);
            l.expect(ctx, "ℓ(A/I)", 11, k.a_mod_i);
            l.expect(ctx, "ℓ(I^2/QI)", 2, k.i2_mod_qi);
            l.expect(ctx, "ℓ(I^3/Q^2I)", 3, k.i3_mod_q2i);
            l.expect(ctx, "r_Q(I)", 2, a.sally.r);
            l.expect(ctx, "mI^2 ⊆ QI", true, a.m_i2_in_qi);
            l.expect(ctx, "e", "(16, 6, 0)".to_string(), tuple(a.e()));
            l.expect(ctx, "postulation", 1, a.hilbert.postulation);
            for n in 1..=10usize {
                let ni = n as i64;
                let want = 16 * binomial(ni + 2, 2) - 6 * (ni as i128 + 1);
                let got = a.hilbert.table.get(n).map_or(-1, |&h| i128::from(h));
                l.expect(ctx, &format!("H({n})"), want, got);
            }
            let rr = &a.sally.rr;
            let added: Vec<String> = rr.added.iter().map(|p| p.display_with(&a.names).to_string()).collect();
            l.expect(ctx, "Ĩ/I generators", "X^2*Y^2".to_string(), added.join(", "));
            l.expect(ctx, "ℓ(Ĩ/I)", 1, rr.delta_length);
            l.expect(ctx, "Ĩ^2 = QĨ", true, rr.tilde_square_eq_q_tilde);
            l.classification(ctx, c);
        }
    }
    l.finish(1, "ex32 m=0: lengths, reduction number, Hilbert data, Ratliff–Rush closure")
}

fn criterion_2(insts: &[&Instance]) -> CriterionResult {
    let mut l = Ledger::default();
    for inst in insts {
        let ctx = inst.context.as_str();
        let (a, c) = match &inst.result {
            Err(e) => {
                l.error(ctx, e);
                continue;
            }
            Ok(x) => x,
        };
        let d = a.d;
        let mut want = vec![16, 6, 0, -1];
        want.resize(d + 1, 0);
        l.expect(ctx, "e", tuple(&want), tuple(a.e()));
        l.expect(ctx, "postulation", 0, a.hilbert.postulation);
        l.expect(ctx, "ℓ(I^3/Q^2I)", 2 * d as u64 - 1, a.key().i3_mod_q2i);
        let holds = c.entry("sally-rank-one-two-generated").is_some_and(|e| e.holds);
        l.expect(ctx, "rank-one two-generated Sally module conditions", true, holds);
        l.classification(ctx, c);
    }
    l.finish(2, "ex32 m=1, m=2: Hilbert coefficients and classifier predictions")
}

fn criterion_3(insts: &[&Instance]) -> CriterionResult {
    let mut l = Ledger::default();
    for inst in insts {
        let ctx = inst.context.as_str();
        let (a, c) = match &inst.result {
            Err(e) => {
                l.error(ctx, e);
                continue;
            }
            Ok(x) => x,
        };
        let m = inst.params.m.unwrap_or(1) as i128;
        let d = inst.params.d.unwrap_or(1);
        let lam = inst.params.lambda.len() as i128;
        let k = a.key();
        l.expect(ctx, "ℓ(A/Q)", m + 2, i128::from(k.a_mod_q));
        l.expect(ctx, "ℓ(A/I)", m - lam + 1, i128::from(k.a_mod_i));
        l.expect(ctx, "ℓ(I^2/QI)", 1, k.i2_mod_qi);
        l.expect(ctx, "r_Q(I)", 2, a.sally.r);
        l.expect(ctx, "e_0", m + 2, a.e_at(0));
        l.expect(ctx, "e_1", lam + 2, a.e_at(1));
        if d == 2 {
            l.expect(ctx, "e_2", 1, a.e_at(2));
        }
        if lam == 0 {
            let entry = c.entry("e1-equals-2");
            let active = entry.is_some_and(|e| e.holds && !e.predictions.is_empty());
            l.expect(ctx, "e_1 = 2, I^2 ≠ QI branch active", true, active);
        }
        if m == 1 && d == 1 {
            l.expect(ctx, "ℓ(Ĩ/I)", 1, a.sally.rr.delta_length);
        }
        l.classification(ctx, c);
    }
    l.finish(3, "sec5 family over F_32003: lengths, reduction number, coefficients")
}

type FamilyRun = ((usize, usize), Result<Vec<Check>>);

fn criterion_4(results: &[FamilyRun]) -> CriterionResult {
    let mut l = Ledger::default();
    for ((m, d), res) in results {
        let ctx = format!("sec5 m={m} d={d} order {IDENTITY_ORDER}");
        match res {
            Err(e) => l.error(&ctx, e),
            Ok(checks) => {
                for c in checks {
                    l.expect(&ctx, &c.name, true, c.holds);
                }
            }
        }
    }
    l.finish(4, "sec5 span identities")
}

/// Random m-primary monomial ideal: pure powers plus a few box monomials.
fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> (Vec<u32>, Vec<Monomial>) {
    let bounds: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_exp)).collect();
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(i, bounds[i], n)).collect();
    let extra = rng.gen_range(0..=4);
    for _ in 0..extra {
        let e: Vec<u32> = bounds.iter().map(|&b| rng.gen_range(0..b)).collect();
        gens.push(Monomial::new(e));
    }
    (bounds, gens)
}

fn suite_staircase(rng: &mut ChaCha8Rng, l: &mut Ledger) {
    for case in 0..STAIRCASE_CASES {
        let n = rng.gen_range(1..=4);
        let (bounds, gens) = random_ideal(rng, n, 6);
        let ctx = format!("staircase case {case}");
        let oracle = box_count(&gens, &bounds);
        match MonomialIdeal::new(n, gens).and_then(|j| staircase::colength(&j)) {
            Ok(c) => l.expect(&ctx, "colength", oracle, c.value),
            Err(e) => l.error(&ctx, &e),
        }
    }
}

fn monomial_polys(gens: &[Monomial]) -> Vec<Polynomial> {
    gens.iter().cloned().map(Polynomial::monomial).collect()
}

/// Lengths compared across engines: `ℓ(A/I)`, `ℓ(A/I²)`, `ℓ(A/(I : 𝔪))`,
/// `ℓ(A/(I ∩ 𝔪²))` and `ℓ(I/𝔪I)`.
fn engine_profile<E: IdealEngine>(engine: &E, gens: &[Polynomial]) -> Result<Vec<u64>> {
    let i = engine.ideal(gens)?;
    let m = engine.maximal()?;
    let i2 = engine.product(&i, &i)?;
    let m2 = engine.product(&m, &m)?;
    let colon = engine.colon(&i, &m)?;
    let meet = engine.intersect(&i, &m2)?;
    let mi = engine.product(&m, &i)?;
    Ok(vec![
        engine.colength(&i)?,
        engine.colength(&i2)?,
        engine.colength(&colon)?,
        engine.colength(&meet)?,
        engine.quotient_length(&i, &mi)?,
    ])
}

fn local_profile(names: &[String], gens: &[Polynomial], bounds: &[u32]) -> Result<Vec<u64>> {
    let spec = LocalRingSpec::new(names.to_vec(), DEFAULT_PRIME, vec![])?;
    let mut order = bounds.iter().map(|&b| b as usize).sum::<usize>() + 2;
    loop {
        let engine = LocalEngine::new(spec.clone(), order)?;
        match engine_profile(&engine, gens) {
            Err(e) if e.is_truncation_failure() && order < 64 => order *= 2,
            other => return other,
        }
    }
}

fn suite_cross_engine(rng: &mut ChaCha8Rng, l: &mut Ledger) {
    for case in 0..CROSS_ENGINE_CASES {
        let n = rng.gen_range(1..=3);
        let max_exp = if n == 3 { 3 } else { 5 };
        let (bounds, gens) = random_ideal(rng, n, max_exp);
        let names = default_names(n);
        let polys = monomial_polys(&gens);
        let ctx = format!("cross-engine case {case}");
        let mono = engine_profile(&MonomialEngine::new(names.clone()), &polys);
        let local = local_profile(&names, &polys, &bounds);
        match (mono, local) {
            (Ok(a), Ok(b)) => l.expect(&ctx, "lengths", format!("{a:?}"), format!("{b:?}")),
            (Err(e), _) | (_, Err(e)) => l.error(&ctx, &e),
        }
    }
}

/// A monomial parameter ideal `Q = (x_i^{a_i})` and `I ⊋ Q` inside the
/// integral closure of `Q`, so that `Q` is a reduction of `I`.
fn random_pair(rng: &mut ChaCha8Rng) -> (Vec<u32>, Vec<Monomial>, Vec<Monomial>) {
    let d = rng.gen_range(2..=3);
    let max_exp = if d == 3 { 4 } else { 6 };
    let a: Vec<u32> = (0..d).map(|_| rng.gen_range(2..=max_exp)).collect();
    let q: Vec<Monomial> = (0..d).map(|i| Monomial::pure_power(i, a[i], d)).collect();
    let lcm: u32 = a.iter().product();
    let mut candidates = vec![];
    let mut v = vec![0u32; d];
    loop {
        let weight: u32 = v.iter().zip(&a).map(|(e, ai)| e * (lcm / ai)).sum();
        if weight >= lcm {
            candidates.push(Monomial::new(v.clone()));
        }
        let mut k = 0;
        loop {
            if k == d {
                break;
            }
            v[k] += 1;
            if v[k] < a[k] {
                break;
            }
            v[k] = 0;
            k += 1;
        }
        if k == d {
            break;
        }
    }
    let extra = rng.gen_range(1..=3).min(candidates.len());
    let mut i = q.clone();
    i.extend(candidates.choose_multiple(rng, extra).cloned());
    (a, q, i)
}

fn suite_pairs(rng: &mut ChaCha8Rng, l: &mut Ledger, linear: &mut Vec<(String, Analysis, ClassificationReport)>) {
    let mut verified = 0;
    let mut attempts = 0;
    while verified < PAIR_CASES && attempts < 4 * PAIR_CASES {
        attempts += 1;
        let (a_exp, q, i) = random_pair(rng);
        let d = q.len();
        let names = default_names(d);
        let ctx = format!(
            "pair {attempts}: Q = ({}), I = ({})",
            q.iter().map(|g| g.display_with(&names).to_string()).collect::<Vec<_>>().join(", "),
            i.iter().map(|g| g.display_with(&names).to_string()).collect::<Vec<_>>().join(", ")
        );
        let engine = MonomialEngine::new(names);
        let opts = Options::default();
        match analyze(&engine, &monomial_polys(&i), &monomial_polys(&q), d, &opts) {
            Err(e) if matches!(e.root(), Error::NotAReduction(_)) => continue,
            Err(e) => {
                verified += 1;
                l.error(&ctx, &e);
            }
            Ok(a) => {
                verified += 1;
                for c in &a.checks {
                    l.expect(&ctx, &c.name, true, c.holds);
                }
                l.expect(&ctx, "ℓ(A/I) by box count", box_count(&i, &a_exp), a.key().a_mod_i);
                l.expect(&ctx, "ℓ(A/Q) by box count", box_count(&q, &a_exp), a.key().a_mod_q);
                let c = classify(&a);
                l.classification(&ctx, &c);
                if a.northcott_gap() == 1 && a.sally.r <= 2 {
                    linear.push((ctx, a, c));
                }
            }
        }
    }
    l.expect("pairs", "verified reductions", PAIR_CASES, verified);
}

fn criterion_6<'a>(instances: impl Iterator<Item = (&'a str, &'a Analysis, &'a ClassificationReport)>) -> CriterionResult {
    let mut l = Ledger::default();
    let mut seen = 0;
    for (ctx, a, c) in instances {
        if a.northcott_gap() != 1 || a.sally.r > 2 {
            continue;
        }
        seen += 1;
        match c.entry("sally-linear-closed-form") {
            None => l.expect(ctx, "closed-form entry present", true, false),
            Some(e) => {
                l.expect(ctx, "closed-form conditions hold", true, e.holds);
                l.expect(ctx, "closed-form predictions made", true, !e.predictions.is_empty());
                for p in &e.predictions {
                    l.checked += 1;
                    if !p.matches {
                        l.diffs.push(Diff {
                            context: ctx.to_string(),
                            name: p.name.clone(),
                            predicted: p.predicted.to_string(),
                            observed: p.observed.to_string(),
                        });
                    }
                }
            }
        }
    }
    l.expect("closed forms", "instances covered > 0", true, seen > 0);
    l.finish(6, "closed forms in the linear case")
}

/// Runs the whole catalog. Independent parts run on separate threads; the
/// result depends only on `seed`.
pub fn run(seed: u64) -> SelftestReport {
    let (builtins, family, staircase_l, cross_l, (pairs_l, linear)) = std::thread::scope(|s| {
        let builtins = s.spawn(|| {
            vec![
                run_builtin("ex32", ex32(0)),
                run_builtin("ex32", ex32(1)),
                run_builtin("ex32", ex32(2)),
                run_builtin("sec5", sec5(1, 1, &[])),
                run_builtin("sec5", sec5(2, 2, &[])),
                run_builtin("sec5", sec5(3, 2, &[3])),
            ]
        });
        let family = s.spawn(|| {
            [(2, 2), (3, 2)]
                .into_iter()
                .map(|(m, d)| ((m, d), span_identities(m, d, DEFAULT_PRIME, IDENTITY_ORDER)))
                .collect::<Vec<_>>()
        });
        let staircase_l = s.spawn(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut l = Ledger::default();
            suite_staircase(&mut rng, &mut l);
            l
        });
        let cross_l = s.spawn(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
            let mut l = Ledger::default();
            suite_cross_engine(&mut rng, &mut l);
            l
        });
        let pairs = s.spawn(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
            let mut l = Ledger::default();
            let mut linear = vec![];
            suite_pairs(&mut rng, &mut l, &mut linear);
            (l, linear)
        });
        (
            builtins.join().expect("builtin thread"),
            family.join().expect("family thread"),
            staircase_l.join().expect("staircase thread"),
            cross_l.join().expect("cross-engine thread"),
            pairs.join().expect("pairs thread"),
        )
    });

    let mut suites = Ledger::default();
    for part in [staircase_l, cross_l, pairs_l] {
        suites.checked += part.checked;
        suites.diffs.extend(part.diffs);
    }

    let ok = builtins.iter().filter_map(|b| b.result.as_ref().ok().map(|(a, c)| (b.context.as_str(), a, c)));
    let rand = linear.iter().map(|(ctx, a, c)| (ctx.as_str(), a, c));

    let criteria = vec![
        criterion_1(&builtins[0]),
        criterion_2(&[&builtins[1], &builtins[2]]),
        criterion_3(&[&builtins[3], &builtins[4], &builtins[5]]),
        criterion_4(&family),
        suites.finish(5, "property suites: staircase oracle, cross-engine, random reductions"),
        criterion_6(ok.chain(rand)),
    ];
    let passed = criteria.iter().all(|c| c.passed);
    SelftestReport { seed, criteria, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_pairs_are_reductions_by_construction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (a, q, i) = random_pair(&mut rng);
            assert!(i.len() > q.len());
            for g in &i[q.len()..] {
                let w: f64 = g.exps().iter().zip(&a).map(|(&e, &ai)| e as f64 / ai as f64).sum();
                assert!(w >= 1.0);
            }
        }
    }

    #[test]
    fn ledger_records_mismatch() {
        let mut l = Ledger::default();
        l.expect("ctx", "x", 1, 2);
        let r = l.finish(9, "t");
        assert!(!r.passed);
        assert_eq!(r.diffs[0].observed, "2");
    }
}
