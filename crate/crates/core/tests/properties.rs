use proptest::prelude::*;

use sally_hilbert::hilbert::{fit_hilbert_polynomial, hilbert_polynomial};
use sally_hilbert::local::LocalRingSpec;
use sally_hilbert::monomial::default_names;
use sally_hilbert::oracle::box_count;
use sally_hilbert::parse::parse_polynomial;
use sally_hilbert::{staircase, IdealEngine, LocalEngine, Monomial, MonomialEngine, MonomialIdeal, Polynomial};

/// Pure powers with the given bounds plus extra generators inside the box.
fn primary(n: usize, max: u32) -> impl Strategy<Value = (Vec<u32>, Vec<Monomial>)> {
    prop::collection::vec(1..=max, n).prop_flat_map(move |bounds| {
        let extra = bounds
            .iter()
            .map(|&b| 0..b)
            .collect::<Vec<_>>();
        let b2 = bounds.clone();
        prop::collection::vec(extra, 0..5).prop_map(move |xs| {
            let n = b2.len();
            let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(i, b2[i], n)).collect();
            gens.extend(xs.into_iter().map(Monomial::new));
            (b2.clone(), gens)
        })
    })
}

fn in_ideal(gens: &[Monomial], v: &[u32]) -> bool {
    gens.iter().any(|g| g.exps().iter().zip(v).all(|(a, b)| a <= b))
}

fn each_point(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let mut v = vec![0u32; bounds.len()];
    loop {
        f(&v);
        let mut k = 0;
        loop {
            if k == v.len() {
                return;
            }
            v[k] += 1;
            if v[k] < bounds[k] {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn staircase_matches_box_count((bounds, gens) in (1usize..=4).prop_flat_map(|n| primary(n, 6))) {
        let n = bounds.len();
        let ideal = MonomialIdeal::new(n, gens.clone()).unwrap();
        prop_assert_eq!(staircase::colength(&ideal).unwrap().value, box_count(&gens, &bounds));
    }

    #[test]
    fn intersection_and_colon_match_membership(
        (b1, g1) in primary(2, 5),
        (b2, g2) in primary(2, 5),
    ) {
        let i = MonomialIdeal::new(2, g1.clone()).unwrap();
        let j = MonomialIdeal::new(2, g2.clone()).unwrap();
        let meet = i.intersect(&j).unwrap();
        let colon = i.colon(&j).unwrap();
        let bounds: Vec<u32> = b1.iter().zip(&b2).map(|(a, b)| a + b + 1).collect();
        each_point(&bounds, |v| {
            let m = Monomial::new(v.to_vec());
            assert_eq!(meet.contains_monomial(&m), in_ideal(&g1, v) && in_ideal(&g2, v));
            let in_colon = g2.iter().all(|g| {
                let w: Vec<u32> = v.iter().zip(g.exps()).map(|(a, b)| a + b).collect();
                in_ideal(&g1, &w)
            });
            assert_eq!(colon.contains_monomial(&m), in_colon);
        });
    }

    #[test]
    fn product_lies_in_intersection((_, g1) in primary(3, 3), (_, g2) in primary(3, 3)) {
        // I·J ⊆ I ∩ J, so ℓ(A/IJ) ≥ ℓ(A/(I ∩ J))
        let i = MonomialIdeal::new(3, g1).unwrap();
        let j = MonomialIdeal::new(3, g2).unwrap();
        let p = staircase::colength(&i.product(&j).unwrap()).unwrap().value;
        let m = staircase::colength(&i.intersect(&j).unwrap()).unwrap().value;
        prop_assert!(p >= m);
    }

    #[test]
    fn print_then_parse_is_identity(terms in prop::collection::vec((prop::collection::vec(0u32..4, 3), -9i64..10), 1..6)) {
        let names = default_names(3);
        let p = Polynomial::from_terms(3, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))).unwrap();
        prop_assume!(!p.is_zero());
        let printed = p.display_with(&names).to_string();
        prop_assert_eq!(parse_polynomial(&printed, &names).unwrap(), p);
    }

    #[test]
    fn fit_recovers_polynomial_coefficients(
        d in 1usize..=4,
        tail in prop::collection::vec(-20i128..20, 4),
        e0 in 30i128..200,
        early in prop::collection::vec(0u64..5, 0..3),
    ) {
        let mut e = vec![e0];
        e.extend(tail.into_iter().take(d));
        let n_max = d + 8;
        let mut table: Vec<u64> = (0..=n_max)
            .map(|n| hilbert_polynomial(&e, n).unwrap().max(0) as u64)
            .collect();
        // perturb a prefix so the polynomial starts later
        for (k, &x) in early.iter().enumerate() {
            table[k] += x + 1;
        }
        let values_ok = (early.len()..=n_max).all(|n| hilbert_polynomial(&e, n).unwrap() >= 0);
        prop_assume!(values_ok);
        let fit = fit_hilbert_polynomial(&table, d).unwrap();
        prop_assert_eq!(&fit.e, &e);
        prop_assert!(fit.postulation <= early.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn engines_agree_without_relations((bounds, gens) in primary(2, 4)) {
        let names = default_names(2);
        let polys: Vec<Polynomial> = gens.iter().cloned().map(Polynomial::monomial).collect();
        let mono = MonomialEngine::new(names.clone());
        let order = bounds.iter().map(|&b| 2 * b as usize).sum::<usize>() + 2;
        let local = LocalEngine::new(LocalRingSpec::new(names, 101, vec![]).unwrap(), order).unwrap();
        let (mi, li) = (mono.ideal(&polys).unwrap(), local.ideal(&polys).unwrap());
        prop_assert_eq!(mono.colength(&mi).unwrap(), local.colength(&li).unwrap());
        let (mi2, li2) = (mono.product(&mi, &mi).unwrap(), local.product(&li, &li).unwrap());
        prop_assert_eq!(mono.colength(&mi2).unwrap(), local.colength(&li2).unwrap());
        let (mc, lc) = (mono.colon(&mi2, &mi).unwrap(), local.colon(&li2, &li).unwrap());
        prop_assert_eq!(mono.colength(&mc).unwrap(), local.colength(&lc).unwrap());
    }
}
