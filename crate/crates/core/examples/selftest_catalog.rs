// The acceptance catalog with a chosen seed.

use sally_hilbert::selftest;

pub fn run_example() -> sally_hilbert::Result<()> {
    let report = selftest::run(42);
    println!("{report}");
    assert!(report.passed);
    Ok(())
}

fn main() -> sally_hilbert::Result<()> {
    run_example()
}
