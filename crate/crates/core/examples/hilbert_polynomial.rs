// Hilbert–Samuel function `ℓ(A/I^{n+1})` and its polynomial.

use sally_hilbert::hilbert::{fit_hilbert_polynomial, hilbert_function, hilbert_polynomial};
use sally_hilbert::parse::parse_polynomial;
use sally_hilbert::{IdealEngine, MonomialEngine, Result};

pub fn run_example() -> Result<()> {
    let names: Vec<String> = ["X", "Y"].iter().map(|s| s.to_string()).collect();
    let engine = MonomialEngine::new(names.clone());
    let gens = ["X^4", "Y^4", "X^3*Y", "X*Y^3"]
        .iter()
        .map(|s| parse_polynomial(s, &names))
        .collect::<Result<Vec<_>>>()?;
    let i = engine.ideal(&gens)?;
    let table = hilbert_function(&engine, &i, 10)?;
    println!("H = {table:?}");

    let fit = fit_hilbert_polynomial(&table, 2)?;
    println!("e = {:?}, postulation {}", fit.e, fit.postulation);
    assert_eq!(fit.e, vec![16, 6, 0]);
    assert_eq!(fit.postulation, 1);
    assert_eq!(hilbert_polynomial(&fit.e, 0)?, 10);
    assert_eq!(table[0], 11);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
