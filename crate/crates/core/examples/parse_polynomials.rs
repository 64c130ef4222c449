// Parsing polynomials over named variables.

use sally_hilbert::parse::parse_polynomial;
use sally_hilbert::{Error, Result};

pub fn run_example() -> Result<()> {
    let names: Vec<String> = ["X1", "V", "Y1"].iter().map(|s| s.to_string()).collect();
    let p = parse_polynomial("V^2 - X1*Y1", &names)?;
    println!("{}", p.display_with(&names));
    assert_eq!(p.terms().len(), 2);

    let q = parse_polynomial(&p.display_with(&names).to_string(), &names)?;
    assert_eq!(p, q);

    match parse_polynomial("X1 + ", &names) {
        Err(Error::Parse { offset, message }) => println!("syntax error at {offset}: {message}"),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    match parse_polynomial("X1*Z", &names) {
        Err(Error::UnknownVariable(v)) => println!("unknown variable {v}"),
        other => panic!("expected an unknown variable, got {other:?}"),
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
