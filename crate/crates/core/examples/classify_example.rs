// Full analysis of a built-in example and the structural classification.

use sally_hilbert::classify::{classify, Status};
use sally_hilbert::problem::{builtin_example, BuiltinParams};
use sally_hilbert::Result;

pub fn run_example() -> Result<()> {
    let params = BuiltinParams {
        m: Some(1),
        ..BuiltinParams::default()
    };
    let analysis = builtin_example("ex32", &params)?.validate()?.analyze()?;
    println!("e = {:?}", analysis.e());
    let report = classify(&analysis);
    for entry in report.entries.iter().filter(|e| e.holds) {
        println!("{} holds", entry.id);
    }
    for label in &report.labels {
        println!("  {label}");
    }
    assert_eq!(report.status, Status::Pass);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
