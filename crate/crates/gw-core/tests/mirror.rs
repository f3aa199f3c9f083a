use std::collections::BTreeMap;

use gw_core::closed_forms::coefficient_ledger;
use gw_core::correlator::CorrelatorEngine;
use gw_core::mirror::{expanded_sector_coefficient, real_structure_constant, verify_kahler_scaling, window};
use gw_core::scalar::{int, rational};
use gw_core::{partitions, Partition, Rational, VirtualConstantTable};
use num_traits::{One, Zero};

/// Coefficients of `exp(Σ_j a_j z^j)` through `z^max`, keyed by the sorted
/// list of `a` indices in each monomial.
fn exponential_coefficients(max: u32) -> BTreeMap<Vec<u32>, Rational> {
    let mut x: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for j in 1..=max {
        x.insert(vec![j], Rational::one());
    }
    let weight = |m: &Vec<u32>| m.iter().sum::<u32>();
    let mut power: BTreeMap<Vec<u32>, Rational> = BTreeMap::from([(vec![], Rational::one())]);
    let mut out = power.clone();
    for r in 1..=max {
        let mut next = BTreeMap::new();
        for (m, c) in &power {
            for (xm, xc) in &x {
                let mut prod = m.clone();
                prod.extend(xm);
                prod.sort();
                if weight(&prod) > max {
                    continue;
                }
                *next.entry(prod).or_insert_with(Rational::zero) += c * xc;
            }
        }
        power = next;
        let fact: Rational = (1..=r).map(|i| int(i as i64)).product();
        for (m, c) in &power {
            *out.entry(m.clone()).or_insert_with(Rational::zero) += c / &fact;
        }
    }
    out
}

#[test]
fn partition_enumeration() {
    assert_eq!(partitions(0), vec![Partition::empty()]);
    assert_eq!(partitions(0)[0].len(), 0);
    let three: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
    assert_eq!(three, ["1+1+1", "1+2", "3"]);
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for n in 0..=8 {
        let ps = partitions(n);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
        for p in ps {
            assert_eq!(p.weight(), n);
            assert!(p.parts().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn symmetry_factor_from_exponential() {
    let coeffs = exponential_coefficients(7);
    for n in 0..=7 {
        for p in partitions(n) {
            assert_eq!(p.symmetry_factor(), coeffs[&p.parts().to_vec()], "{p}");
        }
    }
    assert_eq!(Partition::new(vec![4]).symmetry_factor(), int(1));
    assert_eq!(Partition::new(vec![1, 1]).symmetry_factor(), rational(1, 2));
    assert_eq!(Partition::new(vec![2, 1, 1]).symmetry_factor(), rational(1, 2));
}

#[test]
fn multiplicity_form_of_the_weight() {
    for n in 1..=7 {
        for p in partitions(n) {
            let mut w = p.symmetry_factor();
            for &d in p.parts() {
                w /= int(d as i64);
            }
            let mut want = Rational::one();
            for j in 1..=n {
                let m = p.parts().iter().filter(|&&x| x == j).count() as i64;
                for i in 1..=m {
                    want /= int(i * j as i64);
                }
            }
            assert_eq!(w, want, "{p}");
        }
    }
}

#[test]
fn first_degree_is_a_difference_of_constants() {
    let t = VirtualConstantTable::new(10, 12).unwrap();
    let e = CorrelatorEngine::flat_family_to(&t, 1).unwrap();
    assert_eq!(real_structure_constant(&e, 1, 5).unwrap(), t.get(1, 5) - t.get(1, 3));
}

#[test]
fn vanishes_outside_window() {
    for (n, k, dmax) in [(10u32, 12u32, 3u32), (11, 12, 4), (8, 9, 3)] {
        let t = VirtualConstantTable::new(n, k).unwrap();
        let e = CorrelatorEngine::flat_family_to(&t, dmax).unwrap();
        for d in 1..=dmax {
            let (lo, hi) = window(n, k, d);
            for m in -2..=(n as i64 + 2) {
                let l = real_structure_constant(&e, d, m).unwrap();
                if m < lo || m > hi {
                    assert!(l.is_zero(), "N={n} k={k} d={d} n={m}");
                }
            }
        }
    }
}

#[test]
fn kahler_scaling() {
    for (n, k, d, only) in [(10u32, 12u32, 1u32, None), (10, 12, 2, None), (10, 12, 3, None), (11, 12, 4, Some(7))] {
        let t = VirtualConstantTable::new(n, k).unwrap();
        let e = CorrelatorEngine::flat_family_to(&t, d).unwrap();
        let (lo, hi) = window(n, k, d);
        for m in lo..=hi {
            if only.is_some_and(|o| o != m) {
                continue;
            }
            assert!(verify_kahler_scaling(&e, d, m).unwrap().holds(), "N={n} k={k} d={d} n={m}");
        }
    }
}

#[test]
fn mirror_sum_requires_the_flat_family() {
    let t = VirtualConstantTable::new(10, 12).unwrap();
    let e = CorrelatorEngine::virtual_family(&t);
    assert!(real_structure_constant(&e, 1, 5).is_err());
}

#[test]
fn bookkeeping_identities() {
    assert_eq!(expanded_sector_coefficient(4, &Partition::new(vec![1, 1])), int(8));
    assert_eq!(expanded_sector_coefficient(5, &Partition::new(vec![1, 1, 1, 1])), rational(625, 24));
    for id in coefficient_ledger() {
        assert!(id.holds(), "{}: {:?} vs {:?}", id.label, id.lhs, id.rhs);
    }
}
