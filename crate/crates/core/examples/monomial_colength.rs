// Colength of an m-primary monomial ideal, checked against a box count.

use sally_hilbert::oracle::box_count;
use sally_hilbert::{staircase, MonomialIdeal, Result};

pub fn run_example() -> Result<()> {
    // (X^4, Y^4, X^3Y, XY^3) in k[[X, Y]]
    let i = MonomialIdeal::from_exponents(2, &[&[4, 0], &[0, 4], &[3, 1], &[1, 3]])?;
    let c = staircase::colength(&i)?;
    println!("ℓ(A/I) = {} inside the box {:?}", c.value, c.bounds);
    assert_eq!(c.value, 11);
    assert_eq!(box_count(i.gens(), &c.bounds), c.value);

    let i2 = i.power(2)?;
    let q = MonomialIdeal::from_exponents(2, &[&[4, 0], &[0, 4]])?;
    let qi = q.product(&i)?;
    let s1 = staircase::quotient_length(&i2, &qi)?;
    println!("ℓ(I^2/QI) = {s1}");
    assert_eq!(s1, 2);

    let colon = i2.colon(&i)?;
    println!("I^2 : I has {} minimal generators", colon.gens().len());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
