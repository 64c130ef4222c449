// Sally module lengths, reduction number and Ratliff–Rush closure.

use sally_hilbert::parse::parse_polynomial;
use sally_hilbert::sally::{key_lengths, ratliff_rush, sally_lengths, verify_reduction};
use sally_hilbert::tower::Tower;
use sally_hilbert::{MonomialEngine, Result};

pub fn run_example() -> Result<()> {
    let names: Vec<String> = ["X", "Y"].iter().map(|s| s.to_string()).collect();
    let engine = MonomialEngine::new(names.clone());
    let parse = |v: &[&str]| v.iter().map(|s| parse_polynomial(s, &names)).collect::<Result<Vec<_>>>();
    let q = parse(&["X^4", "Y^4"])?;
    let i = parse(&["X^4", "Y^4", "X^3*Y", "X*Y^3"])?;
    let mut tower = Tower::new(&engine, &i, &q)?;

    let key = key_lengths(&mut tower)?;
    println!("{key:?}");
    let r = verify_reduction(&mut tower, 10)?;
    println!("r_Q(I) = {r}");

    let (lengths, _) = sally_lengths(&mut tower, 6)?;
    println!("ℓ(S_n) = {lengths:?}");
    assert_eq!(lengths[..3], [2, 3, 4]);

    let rr = ratliff_rush(&mut tower, 6, 2)?;
    let added: Vec<String> = rr.added.iter().map(|p| p.display_with(&names).to_string()).collect();
    println!("Ĩ = I + ({}), ℓ(Ĩ/I) = {}", added.join(", "), rr.delta_length);
    assert!(rr.tilde_square_eq_q_tilde);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
