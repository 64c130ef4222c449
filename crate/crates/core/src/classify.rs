//! Evaluates checkable hypotheses of the structure theorems for Sally modules
//! on an [`Analysis`] and compares their computable conclusions with what was
//! observed.
//!
//! Conclusions about depth, Buchsbaum invariants or module structure cannot be
//! computed here; they are carried as labels and never marked verified.

use std::fmt;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::hilbert::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i128),
    Bool(bool),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
        }
    }
}

impl From<i128> for Value {
    fn from(v: i128) -> Self {
        Value::Int(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(i128::from(v))
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i128)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub observed: Value,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub name: String,
    pub predicted: Value,
    pub observed: Value,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub applicable: bool,
    pub holds: bool,
    pub conditions: Vec<Condition>,
    pub predictions: Vec<Prediction>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Entry {
    fn new(id: &'static str) -> Self {
        Entry {
            id,
            applicable: true,
            holds: false,
            conditions: vec![],
            predictions: vec![],
            labels: vec![],
            notes: vec![],
        }
    }

    fn not_applicable(id: &'static str, why: &str) -> Self {
        let mut e = Entry::new(id);
        e.applicable = false;
        e.notes.push(why.to_string());
        e
    }

    fn condition(&mut self, name: &str, observed: impl Into<Value>, holds: bool) -> bool {
        self.conditions.push(Condition {
            name: name.into(),
            observed: observed.into(),
            holds,
        });
        holds
    }

    /// Sets `holds` to the conjunction of the recorded conditions.
    fn settle(&mut self) -> bool {
        self.holds = self.conditions.iter().all(|c| c.holds);
        self.holds
    }

    fn predict(&mut self, name: impl Into<String>, predicted: impl Into<Value>, observed: impl Into<Value>) {
        let predicted = predicted.into();
        let observed = observed.into();
        self.predictions.push(Prediction {
            name: name.into(),
            matches: predicted == observed,
            predicted,
            observed,
        });
    }

    fn label(&mut self, text: impl Into<String>) {
        self.labels.push(text.into());
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Prediction> {
        self.predictions.iter().filter(|p| !p.matches)
    }
}

fn linear_case(a: &Analysis) -> bool {
    a.northcott_gap() == 1
}

fn predict_e(entry: &mut Entry, a: &Analysis, i: usize, value: i128) {
    entry.predict(format!("e_{i}"), value, a.e_at(i));
}

fn predict_linear(entry: &mut Entry, a: &Analysis) {
    let key = a.key();
    let rhs = a.e_at(0) - i128::from(key.a_mod_i) + 1;
    entry.predict("e_1 = e_0 - ℓ(A/I) + 1", rhs, a.e_at(1));
}

/// `I³ = QI²` and `ℓ(I²/QI) = 1`.
pub fn classify_sally_cyclic(a: &Analysis) -> Entry {
    let mut e = Entry::new("sally-cyclic");
    let d = a.d;
    e.condition("I^3 = QI^2", a.i3_eq_q_i2(), a.i3_eq_q_i2());
    e.condition("ℓ(I^2/QI) = 1", a.key().i2_mod_qi, a.key().i2_mod_qi == 1);
    if e.settle() {
        predict_linear(&mut e, a);
        if d >= 2 {
            predict_e(&mut e, a, 2, 1);
        }
        for i in 3..=d {
            predict_e(&mut e, a, i, 0);
        }
        e.label("S ≅ B(-1)");
        e.label(format!("depth G ≥ {}", d as i64 - 1));
    }
    e
}

/// `I³ = QI²`, `ℓ(I²/QI) = 2`, `𝔪I² ⊆ QI`, `ℓ(I³/Q²I) < 2d`; for `d = 2`
/// also `ℓ(Ĩ/I) = 1` and `Ĩ² = QĨ`, which must agree with the former.
pub fn classify_sally_rank_one(a: &Analysis) -> Entry {
    let id = "sally-rank-one-two-generated";
    let d = a.d;
    if d < 2 {
        return Entry::not_applicable(id, "needs d ≥ 2");
    }
    let mut e = Entry::new(id);
    let key = *a.key();
    e.condition("I^3 = QI^2", a.i3_eq_q_i2(), a.i3_eq_q_i2());
    e.condition("ℓ(I^2/QI) = 2", key.i2_mod_qi, key.i2_mod_qi == 2);
    e.condition("mI^2 ⊆ QI", a.m_i2_in_qi, a.m_i2_in_qi);
    e.condition(
        "ℓ(I^3/Q^2I) < 2d",
        key.i3_mod_q2i,
        key.i3_mod_q2i < 2 * d as u64,
    );
    let holds = e.settle();
    let rr = &a.sally.rr;
    if d == 2 {
        let closure_form = rr.delta_length == 1 && rr.tilde_square_eq_q_tilde;
        e.predict("ℓ(Ĩ/I) = 1 and Ĩ^2 = QĨ", holds, closure_form);
    }
    if holds {
        predict_linear(&mut e, a);
        predict_e(&mut e, a, 2, 0);
        if d >= 3 {
            predict_e(&mut e, a, 3, -1);
        }
        for i in 4..=d {
            predict_e(&mut e, a, i, 0);
        }
        e.predict("ℓ(I^3/Q^2I)", 2 * d as u64 - 1, key.i3_mod_q2i);
        e.predict("rank proxy", 1i128, a.sally.rank_proxy);
        e.label("mS = 0, rank_B S = 1, μ_B(S) = 2");
        e.label("0 → B(-2) → B(-1)^2 → S → 0");
        e.label(format!("depth G = {}", d - 2));
        if d == 2 {
            e.label("G, R, R' Buchsbaum with 𝕀(G) = 𝕀(R) = 𝕀(R') = 2");
        }
    }
    e
}

/// Dimension two, `e_1 = e_0 - ℓ(A/I) + 1`: exactly one of
/// (a) `I³ = QI²`, `ℓ(I²/QI) = 1`, or (b) `ℓ(Ĩ/I) = 1`, `Ĩ² = QĨ`.
pub fn classify_dim2_dichotomy(a: &Analysis) -> Entry {
    let id = "dim2-dichotomy";
    if a.d != 2 {
        return Entry::not_applicable(id, "needs d = 2");
    }
    let mut e = Entry::new(id);
    if !e.condition("e_1 = e_0 - ℓ(A/I) + 1", a.e_at(1), linear_case(a)) {
        e.settle();
        return e;
    }
    e.settle();
    let case_a = a.i3_eq_q_i2() && a.key().i2_mod_qi == 1;
    let rr = &a.sally.rr;
    let case_b = rr.delta_length == 1 && rr.tilde_square_eq_q_tilde;
    e.predict("exactly one of cases (a), (b)", true, case_a != case_b);
    e.predict("r_Q(I)", 2usize, a.sally.r);
    if case_a && !case_b {
        e.notes.push("case (a)".into());
        predict_e(&mut e, a, 2, 1);
        e.label("S ≅ B(-1)");
        e.label("depth_B S = 2");
        if a.q_contains_i2 {
            e.label("depth G = 1");
        } else {
            e.label("depth G = 2");
        }
    } else if case_b && !case_a {
        e.notes.push("case (b)".into());
        predict_e(&mut e, a, 2, 0);
        e.label("S ≅ B_+");
        e.label("depth_B S = 1");
        e.label("depth G = 0");
        e.label("G Buchsbaum with 𝕀(G) = 2");
    }
    e
}

/// `e_1 = 2`.
pub fn classify_e1_equals_2(a: &Analysis) -> Entry {
    let mut e = Entry::new("e1-equals-2");
    let d = a.d;
    if !e.condition("e_1 = 2", a.e_at(1), a.e_at(1) == 2) {
        e.settle();
        return e;
    }
    let s1 = a.key().i2_mod_qi;
    e.settle();
    e.label(format!("depth G ≥ {}", d as i64 - 1));
    if s1 == 0 {
        e.notes.push("I^2 = QI".into());
        e.label("G Cohen-Macaulay");
        return e;
    }
    e.notes.push("I^2 ≠ QI".into());
    e.predict("ℓ(I/Q)", 1u64, a.key().i_mod_q());
    e.predict("ℓ(I^2/QI)", 1u64, s1);
    e.predict("I^3 = QI^2", true, a.i3_eq_q_i2());
    e.predict("r_Q(I)", 2usize, a.sally.r);
    predict_linear(&mut e, a);
    if d >= 2 {
        predict_e(&mut e, a, 2, 1);
    }
    for i in 3..=d {
        predict_e(&mut e, a, i, 0);
    }
    e.label("S ≅ B(-1)");
    e.label(format!("depth G = {}", d - 1));
    e.label("G not Cohen-Macaulay");
    e
}

/// `e_1 = e_0 - ℓ(A/I)` exactly when `I² = QI`.
pub fn classify_northcott_equality(a: &Analysis) -> Entry {
    let mut e = Entry::new("northcott-equality");
    let gap = a.northcott_gap();
    let equality = e.condition("e_1 = e_0 - ℓ(A/I)", gap, gap == 0);
    e.settle();
    e.predict("e_1 ≥ e_0 - ℓ(A/I)", true, gap >= 0);
    e.predict("I^2 = QI", equality, a.key().i2_mod_qi == 0);
    if equality {
        for i in 2..=a.d {
            predict_e(&mut e, a, i, 0);
        }
        e.label("G Cohen-Macaulay");
    }
    e
}

/// `e_1 = e_0 - ℓ(A/I) + 1` and `I³ = QI²`, with `c = ℓ(I²/QI)`.
pub fn classify_sally_linear_closed_form(a: &Analysis) -> Entry {
    let mut e = Entry::new("sally-linear-closed-form");
    let d = a.d;
    e.condition("e_1 = e_0 - ℓ(A/I) + 1", a.e_at(1), linear_case(a));
    e.condition("I^3 = QI^2", a.i3_eq_q_i2(), a.i3_eq_q_i2());
    if d >= 3 && linear_case(a) {
        // the converse direction in higher dimension is only surmised
        e.notes.push(format!(
            "linear case with d = {d}: I^3 = QI^2 {}",
            if a.i3_eq_q_i2() { "observed" } else { "FAILS (counterexample candidate)" }
        ));
    }
    if !e.settle() {
        return e;
    }
    let c = a.key().i2_mod_qi as usize;
    e.notes.push(format!("c = {c}"));
    e.predict("0 < c ≤ d", true, c > 0 && c <= d);
    if let Some(mu) = a.sally.mu_proxy {
        e.predict("μ_B(S) = c", c as u64, mu);
    }
    // closed form, from n = 0 when c < d and from n = 1 when c = d
    let start = usize::from(c >= d);
    let e0 = a.e_at(0);
    let e1 = a.e_at(1);
    let (d_i, c_i) = (d as i64, c as i64);
    let mut bad = vec![];
    for (n, &h) in a.hilbert.table.iter().enumerate().skip(start) {
        let ni = n as i64;
        let mut v = e0 * binomial(ni + d_i, d_i) - e1 * binomial(ni + d_i - 1, d_i - 1);
        if c < d {
            v += binomial(ni + d_i - c_i - 1, d_i - c_i - 1);
        }
        if v != i128::from(h) {
            bad.push(n);
        }
    }
    e.predict(
        format!("closed form for n ≥ {start}"),
        Value::Text("holds".into()),
        Value::Text(if bad.is_empty() {
            "holds".into()
        } else {
            format!("fails at n = {bad:?}")
        }),
    );
    for i in 2..=d {
        let want = if i == c + 1 {
            if (c + 1).is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            0
        };
        predict_e(&mut e, a, i, want);
    }
    e.label(format!("depth G ≥ {}", d - c.min(d)));
    e.label(format!("depth_B S = {}", d + 1 - c.min(d)));
    if c >= 2 {
        e.label(format!("depth G = {}", d - c.min(d)));
    }
    e
}

/// For `d ≥ 2`: `e_1 = e_0 - ℓ(A/I) + 1`, `I³ = QI²`, `e_i = 0` (`2 ≤ i ≤ d`)
/// holds exactly when `I³ = QI²`, `ℓ(Ĩ/I) = 1`, `Ĩ² = QĨ`.
pub fn classify_sally_b_plus(a: &Analysis) -> Entry {
    let id = "sally-b-plus";
    let d = a.d;
    if d < 2 {
        return Entry::not_applicable(id, "needs d ≥ 2");
    }
    let mut e = Entry::new(id);
    let tail_zero = (2..=d).all(|i| a.e_at(i) == 0);
    e.condition("e_1 = e_0 - ℓ(A/I) + 1", a.e_at(1), linear_case(a));
    e.condition("I^3 = QI^2", a.i3_eq_q_i2(), a.i3_eq_q_i2());
    e.condition("e_i = 0 for 2 ≤ i ≤ d", tail_zero, tail_zero);
    let holds = e.settle();
    let rr = &a.sally.rr;
    let closure_form = a.i3_eq_q_i2() && rr.delta_length == 1 && rr.tilde_square_eq_q_tilde;
    e.predict("I^3 = QI^2, ℓ(Ĩ/I) = 1, Ĩ^2 = QĨ", holds, closure_form);
    if holds {
        e.predict("ℓ(I^2/QI) = d", d as u64, a.key().i2_mod_qi);
        e.label("S ≅ B_+");
        e.label("depth G = 0");
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAILED")]
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Failed => "FAILED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub entries: Vec<Entry>,
    /// Predicted, not machine-checked.
    pub labels: Vec<String>,
    pub status: Status,
}

impl ClassificationReport {
    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// `(entry id, prediction)` for every mismatch.
    pub fn mismatches(&self) -> Vec<(&'static str, &Prediction)> {
        self.entries
            .iter()
            .flat_map(|e| e.mismatches().map(move |p| (e.id, p)))
            .collect()
    }
}

/// Merges entries; any computable mismatch marks the report FAILED.
pub fn cross_check_report(entries: Vec<Entry>) -> ClassificationReport {
    let mut labels: Vec<String> = vec![];
    for e in entries.iter().filter(|e| e.applicable && e.holds) {
        for l in &e.labels {
            if !labels.contains(l) {
                labels.push(l.clone());
            }
        }
    }
    let failed = entries.iter().any(|e| e.mismatches().next().is_some());
    ClassificationReport {
        entries,
        labels,
        status: if failed { Status::Failed } else { Status::Pass },
    }
}

pub fn classify(a: &Analysis) -> ClassificationReport {
    cross_check_report(vec![
        classify_northcott_equality(a),
        classify_sally_cyclic(a),
        classify_sally_rank_one(a),
        classify_dim2_dichotomy(a),
        classify_e1_equals_2(a),
        classify_sally_linear_closed_form(a),
        classify_sally_b_plus(a),
    ])
}
