// Span identities in the quotient family `X_iX_j = X_iV = 0`, `V^2 = Σ X_iY_i`.

use sally_hilbert::family::span_identities;
use sally_hilbert::Result;

pub fn run_example() -> Result<()> {
    for check in span_identities(2, 2, 32003, 10)? {
        println!("{:<40} {} ({})", check.name, check.holds, check.detail);
        assert!(check.holds);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
