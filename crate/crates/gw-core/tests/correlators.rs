use gw_core::correlator::{CorrelatorEngine, SplitStrategy};
use gw_core::oracle::VgwOracle;
use gw_core::scalar::int;
use gw_core::{Partition, Rational, VirtualConstantTable};
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::OnceLock;

fn table(n: u32, k: u32) -> &'static VirtualConstantTable {
    static T10: OnceLock<VirtualConstantTable> = OnceLock::new();
    static T11: OnceLock<VirtualConstantTable> = OnceLock::new();
    static T13: OnceLock<VirtualConstantTable> = OnceLock::new();
    match (n, k) {
        (10, 12) => T10.get_or_init(|| VirtualConstantTable::new(10, 12).unwrap()),
        (11, 12) => T11.get_or_init(|| VirtualConstantTable::new(11, 12).unwrap()),
        (13, 14) => T13.get_or_init(|| VirtualConstantTable::new(13, 14).unwrap()),
        _ => unreachable!(),
    }
}

fn selection_ok(n: i64, k: i64, exps: &[i64], d: i64) -> bool {
    exps.iter().map(|a| a - 1).sum::<i64>() == n - 5 + (n - k) * d
}

/// Both sides of the associativity relation for `(a, b | c, e)` with the
/// extra insertions `x` distributed over the two factors in every way.
fn wdvv_sides(engine: &CorrelatorEngine, a: i64, b: i64, c: i64, e: i64, x: &[i64], d: i64) -> (Rational, Rational) {
    let n = engine.N() as i64;
    let k = int(engine.k() as i64);
    let side = |p: i64, q: i64, r: i64, s: i64| {
        let mut total = Rational::zero();
        for d1 in 0..=d {
            for mask in 0..1u32 << x.len() {
                let (mut left, mut right) = (vec![p, q], vec![r, s]);
                for (i, &v) in x.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(v);
                    } else {
                        right.push(v);
                    }
                }
                for i in 0..=n - 2 {
                    let mut l = left.clone();
                    l.push(i);
                    let mut r = right.clone();
                    r.push(n - 2 - i);
                    let lv = engine.correlator(&l, d1).unwrap();
                    if lv.is_zero() {
                        continue;
                    }
                    total += lv * engine.correlator(&r, d - d1).unwrap() / &k;
                }
            }
        }
        total
    };
    (side(a, b, c, e), side(a, c, b, e))
}

fn wdvv_case(n: i64, k: i64) -> impl Strategy<Value = (Vec<i64>, Vec<i64>, i64)> {
    (0..=3i64, prop::collection::vec(0..=n - 2, 3), prop::collection::vec(1..=n - 2, 0..=2)).prop_filter_map(
        "fourth insertion out of range",
        move |(d, abc, x)| {
            let target = n - 6 + (n - k) * d;
            let used: i64 = abc.iter().chain(&x).map(|v| v - 1).sum();
            let last = target - used + 1;
            if !(0..=n - 2).contains(&last) {
                return None;
            }
            let mut four = abc.clone();
            four.push(last);
            Some((four, x, d))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity_holds_for_v((four, x, d) in wdvv_case(10, 12)) {
        let e = CorrelatorEngine::virtual_family(table(10, 12));
        let (l, r) = wdvv_sides(&e, four[0], four[1], four[2], four[3], &x, d);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn associativity_holds_for_w((four, x, d) in wdvv_case(10, 12)) {
        let e = CorrelatorEngine::flat_family_to(table(10, 12), 3).unwrap();
        let (l, r) = wdvv_sides(&e, four[0], four[1], four[2], four[3], &x, d);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn order_of_insertions_is_irrelevant(
        exps in prop::collection::vec(1..=11i64, 3..=6),
        d in 0..=3i64,
        seed in any::<u64>(),
    ) {
        let e = CorrelatorEngine::virtual_family(table(13, 14));
        let base = e.correlator(&exps, d).unwrap();
        let mut shuffled = exps.clone();
        let len = shuffled.len();
        let mut s = seed;
        for i in (1..len).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(e.correlator(&shuffled, d).unwrap(), base);
    }

    #[test]
    fn nonzero_values_obey_selection(exps in prop::collection::vec(0..=9i64, 3..=5), d in 0..=4i64) {
        let e = CorrelatorEngine::virtual_family(table(11, 12));
        let v = e.correlator(&exps, d).unwrap();
        if !v.is_zero() {
            prop_assert!(selection_ok(11, 12, &exps, d));
        }
    }

    #[test]
    fn normalized_v_matches_recursion_in_any_part_order(
        d in 1..=5u32,
        parts in prop::collection::vec(1..=4u32, 0..=3),
        n in 0..=11i64,
    ) {
        let m: u32 = parts.iter().sum();
        prop_assume!(m < d);
        let t = table(11, 12);
        let e = CorrelatorEngine::virtual_family(t);
        let oracle = VgwOracle::new(t).unwrap();
        let got = e.normalized(d, &Partition::new(parts.clone()), n).unwrap();
        prop_assert_eq!(got, oracle.value(d as i64, &parts, n));
    }
}

fn multisets(n: i64, size: usize) -> Vec<Vec<i64>> {
    fn rec(lo: i64, hi: i64, size: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(v, hi, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n - 2, size, &mut Vec::new(), &mut out);
    out
}

#[test]
fn v_and_w_agree_in_degree_one() {
    for (n, k) in [(10u32, 12u32), (11, 12)] {
        let t = table(n, k);
        let v = CorrelatorEngine::virtual_family(t);
        let w = CorrelatorEngine::flat_family_to(t, 1).unwrap();
        for size in 3..=5 {
            for exps in multisets(n as i64, size) {
                if selection_ok(n as i64, k as i64, &exps, 1) {
                    assert_eq!(v.correlator(&exps, 1).unwrap(), w.correlator(&exps, 1).unwrap(), "{exps:?}");
                }
            }
        }
    }
}

#[test]
fn split_strategies_agree() {
    let t = table(11, 12);
    let pairs = [
        (
            CorrelatorEngine::virtual_family(t),
            CorrelatorEngine::virtual_family(t).with_strategy(SplitStrategy::SmallestWithNext),
        ),
        (
            CorrelatorEngine::flat_family_to(t, 4).unwrap(),
            CorrelatorEngine::flat_family_to(t, 4).unwrap().with_strategy(SplitStrategy::SmallestWithNext),
        ),
    ];
    for (a, b) in &pairs {
        for d in 1..=4i64 {
            for size in 4..=5 {
                for exps in multisets(11, size) {
                    if selection_ok(11, 12, &exps, d) {
                        assert_eq!(a.correlator(&exps, d).unwrap(), b.correlator(&exps, d).unwrap(), "{exps:?} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn degree_zero_and_unit_insertions() {
    let e = CorrelatorEngine::virtual_family(table(10, 12));
    assert_eq!(e.correlator(&[2, 3, 3], 0).unwrap(), int(12));
    assert_eq!(e.correlator(&[0, 3, 5], 0).unwrap(), int(12));
    assert!(e.correlator(&[2, 3, 4], 0).unwrap().is_zero());
    assert!(e.correlator(&[0, 4, 4, 2], 1).unwrap().is_zero());
}

#[test]
fn divisor_rule() {
    let e = CorrelatorEngine::virtual_family(table(13, 14));
    for d in 1..=3i64 {
        for exps in multisets(13, 3) {
            if !selection_ok(13, 14, &exps, d) {
                continue;
            }
            let mut with = exps.clone();
            with.push(1);
            assert_eq!(e.correlator(&with, d).unwrap(), e.correlator(&exps, d).unwrap() * int(d));
        }
    }
}

#[test]
fn four_point_degree_one_from_recursion() {
    let t = table(11, 12);
    let e = CorrelatorEngine::virtual_family(t);
    let oracle = VgwOracle::new(t).unwrap();
    let v = e.correlator(&[3, 2, 2, 2], 1).unwrap() / int(12);
    assert!(!v.is_zero());
    assert_eq!(v, oracle.value(3, &[1, 1], 6));
    assert!(e.correlator(&[4, 4, 2, 2], 1).unwrap().is_zero());
}

#[test]
fn normalized_three_point_is_shifted_constant() {
    let t = table(10, 12);
    let e = CorrelatorEngine::virtual_family(t);
    for n in 0..=8 {
        let want = if (4..=8).contains(&n) { t.get(1, n) - t.get(1, 3) } else { Rational::zero() };
        assert_eq!(e.normalized(1, &Partition::empty(), n).unwrap(), want, "n={n}");
    }
}

#[test]
fn explanation_names_its_rules() {
    let e = CorrelatorEngine::virtual_family(table(13, 14));
    let text = e.explain(&[2, 2, 3, 3], 2, 2).unwrap();
    assert!(text.starts_with("v<2,2,3,3>_2 = "));
    assert!(text.contains("[associativity]"));
}

#[test]
fn associativity_sweep_hits_nonzero_cases() {
    for (n, k, dmax) in [(10u32, 12u32, 2i64), (13, 14, 3)] {
        let t = table(n, k);
        let engines = [
            CorrelatorEngine::virtual_family(t),
            CorrelatorEngine::flat_family_to(t, dmax as u32).unwrap(),
        ];
        let (ni, ki) = (n as i64, k as i64);
        for e in &engines {
            let mut nonzero = 0;
            for d in 0..=dmax {
                for x in [vec![], vec![2], vec![3]] {
                    for four in multisets(ni, 4) {
                        let used: i64 = four.iter().chain(&x).map(|v| v - 1).sum();
                        if used != ni - 6 + (ni - ki) * d {
                            continue;
                        }
                        let (l, r) = wdvv_sides(e, four[0], four[1], four[2], four[3], &x, d);
                        assert_eq!(l, r, "N={n} {four:?} {x:?} d={d}");
                        if !l.is_zero() {
                            nonzero += 1;
                        }
                    }
                }
            }
            assert!(nonzero >= 10, "N={n}: only {nonzero} nontrivial relations");
        }
    }
}
