use std::process::{Command, ExitCode};
use std::time::Instant;

use sally_hilbert::selftest::{self, DEFAULT_SEED};

fn main() -> ExitCode {
    let start = Instant::now();
    let report = selftest::run(DEFAULT_SEED);
    let mut ok = true;
    for c in &report.criteria {
        println!(
            "criterion {}: {} - {} ({} checks)",
            c.id,
            if c.passed { "PASS" } else { "FAIL" },
            c.title,
            c.checked
        );
        for d in &c.diffs {
            println!("    {}: {}: predicted {}, observed {}", d.context, d.name, d.predicted, d.observed);
        }
        ok &= c.passed;
    }

    let out = Command::new(env!("CARGO_BIN_EXE_sally-hilbert"))
        .arg("selftest")
        .output()
        .expect("run sally-hilbert selftest");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let covers = (1..=6).all(|i| stdout.contains(&format!("criterion {i}: PASS")));
    let c7 = out.status.code() == Some(0) && covers && stdout.trim_end().ends_with("selftest PASS");
    println!(
        "criterion 7: {} - selftest command exits {:?} covering criteria 1-6",
        if c7 { "PASS" } else { "FAIL" },
        out.status.code()
    );
    ok &= c7;

    let elapsed = start.elapsed();
    println!("total {:.1}s", elapsed.as_secs_f64());
    if elapsed.as_secs() >= 60 {
        println!("time budget of 60 s exceeded");
        ok = false;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
