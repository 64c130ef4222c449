//! Hilbert–Samuel tables `H(n) = ℓ(A/I^{n+1})` and their coefficients in the
//! binomial basis
//!
//! ```text
//! H(n) = Σ_{i=0..d} (-1)^i e_i C(n+d-i, d-i)      for n ≫ 0.
//! ```

use crate::engine::IdealEngine;
use crate::error::{Error, Result};
use crate::tower::Tower;

/// Extra rows appended per extension when the fit fails.
pub const EXTENSION_STEP: usize = 4;
pub const MAX_EXTENSIONS: usize = 3;

/// `C(a, b)`, zero when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: i128 = 1;
    for k in 0..b {
        // exact at every step: r * (a-k) / (k+1) = C(a, k+1)
        r = r * i128::from(a - k) / i128::from(k + 1);
    }
    r
}

fn checked(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow("Hilbert coefficient"))
}

/// Value at `n ≥ 0` of the polynomial with coefficients `e = (e_0..e_d)`.
pub fn hilbert_polynomial(e: &[i128], n: usize) -> Result<i128> {
    let d = e.len() as i64 - 1;
    let n = n as i64;
    let mut acc: i128 = 0;
    for (i, &ei) in e.iter().enumerate() {
        let i = i as i64;
        let term = checked(ei.checked_mul(binomial(n + d - i, d - i)))?;
        acc = if i % 2 == 0 {
            checked(acc.checked_add(term))?
        } else {
            checked(acc.checked_sub(term))?
        };
    }
    Ok(acc)
}

/// `table[n] = ℓ(A/I^{n+1})` for `0 ≤ n ≤ n_max`.
pub fn hilbert_function<E: IdealEngine>(engine: &E, i: &E::Ideal, n_max: usize) -> Result<Vec<u64>> {
    let mut table = Vec::with_capacity(n_max + 1);
    let mut power = i.clone();
    for n in 0..=n_max {
        if n > 0 {
            power = engine.product(&power, i).map_err(|e| e.at(n))?;
        }
        table.push(engine.colength(&power).map_err(|e| e.at(n))?);
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFit {
    pub e: Vec<i128>,
    pub postulation: usize,
    /// Matching samples beyond the `d + 1` used to solve for `e`.
    pub verified_points: usize,
}

/// Solves for `e` from the top `d + 1` samples, then walks down to the
/// postulation index. At least two further samples must agree.
pub fn fit_hilbert_polynomial(table: &[u64], d: usize) -> Result<HilbertFit> {
    if table.len() < d + 3 {
        return Err(Error::NoPolynomialTail(table.len()));
    }
    let top = table.len() - 1;
    let h: Vec<i128> = table.iter().map(|&v| i128::from(v)).collect();

    // ∇^j H(top), with ∇ f(n) = f(n) - f(n-1)
    let nabla = |j: usize| -> Result<i128> {
        let mut acc: i128 = 0;
        for k in 0..=j {
            let term = checked(binomial(j as i64, k as i64).checked_mul(h[top - k]))?;
            acc = if k % 2 == 0 {
                checked(acc.checked_add(term))?
            } else {
                checked(acc.checked_sub(term))?
            };
        }
        Ok(acc)
    };

    // ∇^{d-k} P(top) = Σ_{i≤k} (-1)^i e_i C(top+k-i, k-i); the i = k term is (-1)^k e_k
    let mut e: Vec<i128> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut rest = nabla(d - k)?;
        for (i, &ei) in e.iter().enumerate() {
            let term = checked(ei.checked_mul(binomial((top + k - i) as i64, (k - i) as i64)))?;
            rest = if i % 2 == 0 {
                checked(rest.checked_sub(term))?
            } else {
                checked(rest.checked_add(term))?
            };
        }
        e.push(if k % 2 == 0 { rest } else { -rest });
    }

    let mut postulation = top + 1;
    while postulation > 0 && hilbert_polynomial(&e, postulation - 1)? == h[postulation - 1] {
        postulation -= 1;
    }
    let matched = top + 1 - postulation;
    if matched < d + 3 {
        return Err(Error::NoPolynomialTail(table.len()));
    }
    Ok(HilbertFit {
        e,
        postulation,
        verified_points: matched - (d + 1),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    pub d: usize,
    pub table: Vec<u64>,
    pub e: Vec<i128>,
    pub postulation: usize,
    pub verified_points: usize,
    /// How many times the table was extended before the fit held.
    pub extensions: usize,
}

impl HilbertProfile {
    /// Re-evaluates the polynomial on every row from the postulation index on.
    pub fn is_exact(&self) -> Result<bool> {
        for n in self.postulation..self.table.len() {
            if hilbert_polynomial(&self.e, n)? != i128::from(self.table[n]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn postulation_number(profile: &HilbertProfile) -> usize {
    profile.postulation
}

/// Default table length `n_max = d + 8`.
pub fn default_n_max(d: usize) -> usize {
    d + 8
}

/// Builds and fits the table of `I` from `tower`, extending `n_max` by
/// [`EXTENSION_STEP`] up to [`MAX_EXTENSIONS`] times while no tail is found.
pub fn hilbert_profile<E: IdealEngine>(tower: &mut Tower<'_, E>, d: usize, n_max: usize) -> Result<HilbertProfile> {
    if d == 0 {
        return Err(Error::InvalidSpec("dimension must be positive".into()));
    }
    if n_max < d + 4 {
        return Err(Error::InvalidSpec(format!(
            "n_max = {n_max} is below d + 4 = {}",
            d + 4
        )));
    }
    let mut n_top = n_max;
    let mut extensions = 0;
    loop {
        let table = (0..=n_top)
            .map(|n| tower.i_power_colength(n + 1))
            .collect::<Result<Vec<u64>>>()?;
        match fit_hilbert_polynomial(&table, d) {
            Ok(fit) => {
                return Ok(HilbertProfile {
                    d,
                    table,
                    e: fit.e,
                    postulation: fit.postulation,
                    verified_points: fit.verified_points,
                    extensions,
                })
            }
            Err(Error::NoPolynomialTail(_)) if extensions < MAX_EXTENSIONS => {
                extensions += 1;
                n_top += EXTENSION_STEP;
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::MonomialEngine;
    use crate::oracle::binomial_by_factorials;
    use crate::parse::parse_polynomial;
    use crate::poly::Polynomial;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(4, 4), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
        for a in 0..30 {
            for b in -2..32 {
                assert_eq!(binomial(a, b), binomial_by_factorials(a, b), "C({a},{b})");
            }
        }
    }

    #[test]
    fn parameter_ideal_fit() {
        let table: Vec<u64> = (0..12).map(|n| binomial(n + 2, 2) as u64).collect();
        assert_eq!(&table[..4], &[1, 3, 6, 10]);
        let fit = fit_hilbert_polynomial(&table, 2).unwrap();
        assert_eq!(fit.e, vec![1, 0, 0]);
        assert_eq!(fit.postulation, 0);
        assert_eq!(fit.verified_points, 9);
    }

    #[test]
    fn fit_detects_late_start() {
        // 16 C(n+2,2) - 6(n+1) from n = 1 on, with H(0) = 11
        let mut table: Vec<u64> = (0..11)
            .map(|n| (16 * binomial(n + 2, 2) - 6 * (n as i128 + 1)) as u64)
            .collect();
        table[0] = 11;
        let fit = fit_hilbert_polynomial(&table, 2).unwrap();
        assert_eq!(fit.e, vec![16, 6, 0]);
        assert_eq!(fit.postulation, 1);
    }

    #[test]
    fn negative_coefficients() {
        let e = [16i128, 6, 0, -1];
        let table: Vec<u64> = (0..12).map(|n| hilbert_polynomial(&e, n).unwrap() as u64).collect();
        let fit = fit_hilbert_polynomial(&table, 3).unwrap();
        assert_eq!(fit.e, e.to_vec());
        assert_eq!(fit.postulation, 0);
    }

    #[test]
    fn short_or_erratic_tables_are_rejected() {
        assert_eq!(fit_hilbert_polynomial(&[1, 3, 6, 10], 2), Err(Error::NoPolynomialTail(4)));
        // quadratic fit through the top three rows, nothing else agrees
        let table = [1u64, 2, 4, 8, 16, 32, 64];
        assert_eq!(fit_hilbert_polynomial(&table, 2), Err(Error::NoPolynomialTail(7)));
    }

    #[test]
    fn table_of_maximal_ideal() {
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let eng = MonomialEngine::new(names.clone());
        let q: Vec<Polynomial> = ["X", "Y"].iter().map(|s| parse_polynomial(s, &names).unwrap()).collect();
        let i = eng.ideal(&q).unwrap();
        assert_eq!(hilbert_function(&eng, &i, 3).unwrap(), vec![1, 3, 6, 10]);

        let mut tower = Tower::new(&eng, &q, &q).unwrap();
        let p = hilbert_profile(&mut tower, 2, 10).unwrap();
        assert_eq!(p.e, vec![1, 0, 0]);
        assert_eq!(postulation_number(&p), 0);
        assert!(p.is_exact().unwrap());
        assert!(matches!(hilbert_profile(&mut tower, 2, 5), Err(Error::InvalidSpec(_))));
    }
}
