// Ideals of a quotient `k[[x]]/(relations)` over F_p, computed in `A/𝔪^N`.

use sally_hilbert::local::LocalRingSpec;
use sally_hilbert::parse::parse_polynomial;
use sally_hilbert::{IdealEngine, LocalEngine, Result};

pub fn run_example() -> Result<()> {
    let names: Vec<String> = ["X1", "V", "Y1"].iter().map(|s| s.to_string()).collect();
    let rel = ["X1^2", "X1*V", "V^2 - X1*Y1"]
        .iter()
        .map(|s| parse_polynomial(s, &names))
        .collect::<Result<Vec<_>>>()?;
    let spec = LocalRingSpec::new(names.clone(), 32003, rel)?;
    let engine = LocalEngine::new(spec, 8)?;

    let p = |s: &str| parse_polynomial(s, &names);
    let q = engine.ideal(&[p("Y1")?])?;
    let i = engine.ideal(&[p("Y1")?, p("V")?])?;
    println!("ℓ(A/Q) = {}", engine.colength(&q)?);
    println!("ℓ(A/I) = {}", engine.colength(&i)?);

    let i2 = engine.product(&i, &i)?;
    let qi = engine.product(&q, &i)?;
    println!("ℓ(I^2/QI) = {}", engine.quotient_length(&i2, &qi)?);

    // I^2 : I is larger than I here
    let colon = engine.colon(&i2, &i)?;
    let extra = engine.generators_outside(&colon, &i)?;
    for g in &extra {
        println!("I^2 : I contains {}", g.display_with(&names));
    }
    assert_eq!(engine.quotient_length(&colon, &i)?, 1);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
