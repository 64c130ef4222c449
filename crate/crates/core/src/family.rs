//! Span identities of the `sec5` family
//! `A = k[[X_1..X_m, V, Y_1..Y_d]] / (X_iX_j, X_iV, V^2 - Σ_{i≤d} X_iY_i)`
//! with `Q = (Y_1..Y_d)` and `I = Q + (V)`.
//!
//! The relations are homogeneous, so every ideal involved is homogeneous and
//! comparing spans in `A/𝔪^N` compares the ideals in all degrees below `N`.
//! For `𝔪`-primary ideals certified at order `N` the comparison is exact.

use crate::engine::{IdealEngine, LocalEngine};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::problem::{builtin_example, BuiltinParams};
use crate::sally::Check;

/// Truncation order used for the identities.
pub const IDENTITY_ORDER: usize = 10;

fn check(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        holds,
        detail: detail.into(),
    }
}

fn power_name(k: usize) -> String {
    if k == 1 {
        "I".into()
    } else {
        format!("I^{k}")
    }
}

/// Evaluates every identity for `(m, d)` with `Λ = ∅`; each check reports
/// whether it holds rather than failing.
pub fn span_identities(m: usize, d: usize, prime: u64, order: usize) -> Result<Vec<Check>> {
    let params = BuiltinParams {
        m: Some(m),
        d: Some(d),
        lambda: vec![],
    };
    let mut spec = builtin_example("sec5", &params)?;
    spec.options.prime = Some(prime);
    let problem = spec.validate()?;
    let engine = LocalEngine::new(problem.local_ring()?, order)?;
    let n = engine.nvars();
    let names = engine.names().to_vec();
    let var = |name: &str| -> Polynomial {
        let k = names.iter().position(|x| x == name).expect("family variable");
        Polynomial::var(k, n)
    };
    let a: Vec<Polynomial> = (1..=d).map(|i| var(&format!("Y{i}"))).collect();
    let v = var("V");

    let mm = engine.maximal()?;
    let q = engine.ideal(&a)?;
    let i = engine.ideal(&problem.i_gens)?;
    let i2 = engine.product(&i, &i)?;
    let i3 = engine.product(&i2, &i)?;
    let qi = engine.product(&q, &i)?;
    let qi2 = engine.product(&q, &i2)?;
    let mut out = vec![];

    let m2 = engine.product(&mm, &mm)?;
    let qm = engine.product(&q, &mm)?;
    out.push(check(
        "m^2 = Qm",
        engine.equal(&m2, &qm)?,
        format!("ℓ(A/m^2) = {}, ℓ(A/Qm) = {}", engine.colength(&m2)?, engine.colength(&qm)?),
    ));

    let v2 = engine.ideal(&[v.mul(&v)?])?;
    let qi_v2 = engine.sum(&qi, &v2)?;
    out.push(check(
        "I^2 = QI + (v^2)",
        engine.equal(&i2, &qi_v2)?,
        format!("ℓ(A/I^2) = {}", engine.colength(&i2)?),
    ));
    out.push(check(
        "I^2 ≠ QI",
        !engine.equal(&i2, &qi)?,
        format!("ℓ(I^2/QI) = {}", engine.quotient_length(&i2, &qi)?),
    ));
    out.push(check(
        "I^3 = QI^2",
        engine.equal(&i3, &qi2)?,
        format!("ℓ(A/I^3) = {}", engine.colength(&i3)?),
    ));

    // proper subsets Γ of the parameters: (a_α)_Γ ∩ I^n = (a_α)_Γ I^{n-1}
    let mut powers = vec![i.clone(), i2.clone(), i3.clone()];
    while powers.len() < d + 1 {
        let next = engine.product(powers.last().expect("nonempty"), &i)?;
        powers.push(next);
    }
    for mask in 1u32..(1 << d) - 1 {
        let gamma: Vec<usize> = (0..d).filter(|k| mask & (1 << k) != 0).collect();
        let gens: Vec<Polynomial> = gamma.iter().map(|&k| a[k].clone()).collect();
        let sub = engine.ideal(&gens)?;
        let label: Vec<String> = gamma.iter().map(|k| format!("a_{}", k + 1)).collect();
        for n in 2..=3 {
            let lhs = sub.span().intersect_spans(powers[n - 1].span())?;
            let rhs = engine.product(&sub, &powers[n - 2])?;
            out.push(check(
                format!("({}) ∩ I^{n} = ({}){}", label.join(", "), label.join(", "), power_name(n - 1)),
                &lhs == rhs.span(),
                format!("span ranks {} and {} at order {order}", lhs.rank(), rhs.span().rank()),
            ));
        }
    }

    let squares: Vec<Polynomial> = a.iter().map(|g| g.mul(g)).collect::<Result<_>>()?;
    let sq = engine.ideal(&squares)?;
    for n in 3..=d + 1 {
        let lhs = sq.span().intersect_spans(powers[n - 1].span())?;
        let rhs = engine.product(&sq, &powers[n - 3])?;
        out.push(check(
            format!("(a_1^2..a_d^2) ∩ I^{n} = (a_1^2..a_d^2){}", power_name(n - 2)),
            &lhs == rhs.span(),
            format!("span ranks {} and {} at order {order}", lhs.rank(), rhs.span().rank()),
        ));
    }

    let certified = [&m2, &qm, &i2, &i3, &qi, &qi2]
        .iter()
        .all(|x| x.span().is_certified());
    out.push(check(
        "certified truncation",
        certified,
        format!("m^2, Qm, I^2, I^3, QI, QI^2 certified at order {order}"),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_for_small_members() {
        for (m, d) in [(1, 1), (2, 2)] {
            let checks = span_identities(m, d, 32003, 8).unwrap();
            for c in &checks {
                assert!(c.holds, "(m, d) = ({m}, {d}): {} ({})", c.name, c.detail);
            }
        }
    }

    #[test]
    fn squares_identity_fails_past_its_range() {
        // d = 1: x_1y_1^2 = y_1v^2 lies in (y_1^2) ∩ I^3 but not in (y_1^2)I
        let engine_checks = span_identities(1, 1, 32003, 8).unwrap();
        assert!(engine_checks.iter().all(|c| !c.name.contains("a_d^2")));
        let params = BuiltinParams { m: Some(1), d: Some(1), lambda: vec![] };
        let problem = builtin_example("sec5", &params).unwrap().validate().unwrap();
        let engine = LocalEngine::new(problem.local_ring().unwrap(), 8).unwrap();
        let n = engine.nvars();
        let y = Polynomial::var(2, n);
        let i = engine.ideal(&problem.i_gens).unwrap();
        let i3 = engine.product(&engine.product(&i, &i).unwrap(), &i).unwrap();
        let sq = engine.ideal(&[y.mul(&y).unwrap()]).unwrap();
        let lhs = sq.span().intersect_spans(i3.span()).unwrap();
        let rhs = engine.product(&sq, &i).unwrap();
        assert!(lhs != *rhs.span());
        assert!(lhs.contains(rhs.span()).unwrap());
    }
}
