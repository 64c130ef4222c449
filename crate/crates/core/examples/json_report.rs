// A problem spec as JSON, and the JSON report for it.

use sally_hilbert::classify::classify;
use sally_hilbert::problem::ProblemSpec;
use sally_hilbert::report::{emit_report, Format};
use sally_hilbert::Result;

const SPEC: &str = r#"{
  "ring": {
    "vars": ["X1", "V", "Y1"],
    "char": 32003,
    "relations": ["X1^2", "X1*V", "V^2 - X1*Y1"],
    "dim": 1
  },
  "ideal_I": ["Y1", "V"],
  "ideal_Q": ["Y1"],
  "options": {"r_max": 10, "N_max": 24, "stab_window": 2}
}"#;

pub fn run_example() -> Result<()> {
    let spec = ProblemSpec::from_json(SPEC)?;
    let analysis = spec.validate()?.analyze()?;
    let report = classify(&analysis);
    let json = emit_report(&spec, &analysis, &report, Format::Json);
    println!("{json}");
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["hilbert"]["e"], serde_json::json!([3, 2]));
    assert_eq!(v["sally"]["rr"]["delta_length"], 1);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
