//! Text and JSON reports for one analyzed problem.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::classify::ClassificationReport;
use crate::hilbert::HilbertProfile;
use crate::problem::ProblemSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Lengths {
    #[serde(rename = "A_mod_I")]
    a_mod_i: u64,
    #[serde(rename = "A_mod_Q")]
    a_mod_q: u64,
    #[serde(rename = "I2_mod_QI")]
    i2_mod_qi: u64,
    #[serde(rename = "I3_mod_Q2I")]
    i3_mod_q2i: u64,
}

#[derive(Serialize)]
struct Hilbert<'a> {
    table: &'a [u64],
    e: &'a [i128],
    postulation: usize,
}

#[derive(Serialize)]
struct Rr {
    delta_length: u64,
    stabilized: bool,
    #[serde(rename = "tilde_square_eq_Q_tilde")]
    tilde_square_eq_q_tilde: bool,
}

#[derive(Serialize)]
struct Sally<'a> {
    lengths: &'a [u64],
    r: usize,
    rank_proxy: i128,
    mu_proxy: Option<u64>,
    rr: Rr,
}

#[derive(Serialize)]
struct Full<'a> {
    spec_echo: &'a ProblemSpec,
    engine: &'static str,
    lengths: Lengths,
    hilbert: Hilbert<'a>,
    sally: Sally<'a>,
    classification: &'a ClassificationReport,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Full report: lengths, Hilbert data, Sally data and classification.
pub fn emit_report(spec: &ProblemSpec, a: &Analysis, c: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let key = a.key();
            let rr = &a.sally.rr;
            to_json(&Full {
                spec_echo: spec,
                engine: a.engine,
                lengths: Lengths {
                    a_mod_i: key.a_mod_i,
                    a_mod_q: key.a_mod_q,
                    i2_mod_qi: key.i2_mod_qi,
                    i3_mod_q2i: key.i3_mod_q2i,
                },
                hilbert: Hilbert {
                    table: &a.hilbert.table,
                    e: &a.hilbert.e,
                    postulation: a.hilbert.postulation,
                },
                sally: Sally {
                    lengths: &a.sally.lengths,
                    r: a.sally.r,
                    rank_proxy: a.sally.rank_proxy,
                    mu_proxy: a.sally.mu_proxy,
                    rr: Rr {
                        delta_length: rr.delta_length,
                        stabilized: rr.stabilized,
                        tilde_square_eq_q_tilde: rr.tilde_square_eq_q_tilde,
                    },
                },
                classification: c,
            })
        }
        Format::Text => {
            let mut out = invariants_text(a);
            out.push('\n');
            out.push_str(&classification_text(c));
            out
        }
    }
}

fn invariants_text(a: &Analysis) -> String {
    let key = a.key();
    let s = &a.sally;
    let rr = &s.rr;
    let mut out = String::new();
    let engine = match a.order {
        Some(n) => format!("{} (order {n})", a.engine),
        None => a.engine.to_string(),
    };
    let _ = writeln!(out, "engine          {engine}");
    let _ = writeln!(out, "d               {}", a.d);
    let _ = writeln!(out, "ℓ(A/I)          {}", key.a_mod_i);
    let _ = writeln!(out, "ℓ(A/Q)          {}", key.a_mod_q);
    let _ = writeln!(out, "ℓ(I²/QI)        {}", key.i2_mod_qi);
    let _ = writeln!(out, "ℓ(I³/Q²I)       {}", key.i3_mod_q2i);
    out.push_str(&hilbert_text(&a.hilbert));
    let _ = writeln!(out, "ℓ(S_n), n ≥ 1   {}", tuple(&s.lengths));
    let _ = writeln!(out, "r_Q(I)          {}", s.r);
    let _ = writeln!(out, "rank proxy      {}", s.rank_proxy);
    match s.mu_proxy {
        Some(mu) => {
            let _ = writeln!(out, "μ proxy         {mu}");
        }
        None => {
            let _ = writeln!(out, "μ proxy         undetermined");
        }
    }
    let added: Vec<String> = rr.added.iter().map(|p| p.display_with(&a.names).to_string()).collect();
    let _ = writeln!(
        out,
        "Ratliff–Rush    ℓ(Ĩ/I) = {}{}",
        rr.delta_length,
        if added.is_empty() {
            String::new()
        } else {
            format!(", Ĩ = I + ({})", added.join(", "))
        }
    );
    let _ = writeln!(
        out,
        "                stabilized {}, Ĩ² = QĨ {}{}",
        rr.stabilized,
        rr.tilde_square_eq_q_tilde,
        if rr.heuristic { ", heuristic" } else { "" }
    );
    if let Some(e) = &rr.e {
        let _ = writeln!(out, "                e(Ĩ) = {}", tuple(e));
    }
    let _ = writeln!(out, "𝔪I² ⊆ QI        {}", a.m_i2_in_qi);
    let _ = writeln!(out, "I² ⊆ Q          {}", a.q_contains_i2);
    for c in &a.checks {
        let _ = writeln!(
            out,
            "check {:<24} {} {}",
            c.name,
            if c.holds { "ok" } else { "FAILED" },
            c.detail
        );
    }
    out
}

fn hilbert_text(h: &HilbertProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ℓ(A/I^(n+1))    {}", tuple(&h.table));
    let _ = writeln!(out, "e_0..e_d        {}", tuple(&h.e));
    let _ = writeln!(out, "postulation     {}", h.postulation);
    out
}

/// Hilbert table and coefficients only.
pub fn emit_hilbert(h: &HilbertProfile, order: Option<usize>, format: Format) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        table: &'a [u64],
        e: &'a [i128],
        postulation: usize,
        verified_points: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        order: Option<usize>,
    }
    match format {
        Format::Json => to_json(&Out {
            table: &h.table,
            e: &h.e,
            postulation: h.postulation,
            verified_points: h.verified_points,
            order,
        }),
        Format::Text => hilbert_text(h),
    }
}

fn classification_text(c: &ClassificationReport) -> String {
    let mut out = String::new();
    for e in &c.entries {
        let state = match (e.applicable, e.holds) {
            (false, _) => "n/a",
            (true, true) => "holds",
            (true, false) => "does not hold",
        };
        let _ = writeln!(out, "[{}] {state}", e.id);
        for cond in &e.conditions {
            let _ = writeln!(
                out,
                "    {} {} = {}",
                if cond.holds { "+" } else { "-" },
                cond.name,
                cond.observed
            );
        }
        for p in &e.predictions {
            let _ = writeln!(
                out,
                "    {} {}: predicted {}, observed {}",
                if p.matches { "=" } else { "!" },
                p.name,
                p.predicted,
                p.observed
            );
        }
        for note in &e.notes {
            let _ = writeln!(out, "    note: {note}");
        }
    }
    if !c.labels.is_empty() {
        let _ = writeln!(out, "labels: {}", c.labels.join("; "));
    }
    let _ = writeln!(out, "status: {}", c.status);
    out
}

/// Classification only.
pub fn emit_classification(c: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(c),
        Format::Text => classification_text(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::problem::{builtin_example, BuiltinParams};

    #[test]
    fn json_keys_are_ordered_and_stable() {
        let spec = builtin_example("ex32", &BuiltinParams::default()).unwrap();
        let a = spec.validate().unwrap().analyze().unwrap();
        let c = classify(&a);
        let first = emit_report(&spec, &a, &c, Format::Json);
        let second = emit_report(&spec, &a, &c, Format::Json);
        assert_eq!(first, second);
        let keys = ["\"spec_echo\"", "\"engine\"", "\"lengths\"", "\"hilbert\"", "\"sally\"", "\"classification\""];
        let pos: Vec<usize> = keys.iter().map(|k| first.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["lengths"]["I2_mod_QI"], 2);
        assert_eq!(v["hilbert"]["e"], serde_json::json!([16, 6, 0]));
        assert_eq!(v["sally"]["r"], 2);
        assert_eq!(v["sally"]["rr"]["tilde_square_eq_Q_tilde"], true);
        assert_eq!(v["classification"]["status"], "PASS");
    }

    #[test]
    fn text_report_mentions_status() {
        let spec = builtin_example("ex32", &BuiltinParams::default()).unwrap();
        let a = spec.validate().unwrap().analyze().unwrap();
        let c = classify(&a);
        let text = emit_report(&spec, &a, &c, Format::Text);
        assert!(text.contains("e_0..e_d        (16, 6, 0)"));
        assert!(text.ends_with("status: PASS\n"));
    }
}
