use std::collections::BTreeMap;

use gw_core::scalar::int;
use gw_core::virtual_constants::virtual_constant;
use gw_core::{degree_one_row, Error, Rational, VirtualConstantTable};
use num_traits::Zero;

type Poly = Vec<Rational>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `k ∏_{j=1}^{k-1} (j w + (k - j))`, expanded.
fn product_expansion(k: i64) -> Poly {
    let mut p = vec![int(k)];
    for j in 1..k {
        p = mul(&p, &vec![int(k - j), int(j)]);
    }
    p
}

/// Literal transcription of the nested-sum recursion, one degree at a time,
/// with no shared state beyond the finished lower rows.
struct Brute {
    n: i64,
    k: i64,
    rows: BTreeMap<i64, Poly>,
}

impl Brute {
    fn new(n: i64, k: i64) -> Self {
        let mut rows = BTreeMap::new();
        rows.insert(1, product_expansion(k));
        Brute { n, k, rows }
    }

    fn get(&self, d: i64, m: i64) -> Rational {
        if m < 0 {
            return Rational::zero();
        }
        self.rows[&d].get(m as usize).cloned().unwrap_or_else(Rational::zero)
    }

    fn chains(d: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for mask in 0..1u32 << (d - 1) {
            let mut c = vec![0];
            for i in 1..d {
                if mask >> (i - 1) & 1 == 1 {
                    c.push(i);
                }
            }
            c.push(d);
            if c.len() >= 3 {
                out.push(c);
            }
        }
        out
    }

    fn compute(&mut self, d: i64) {
        let top = self.n - 1 + (self.k - self.n) * d;
        let mut total: Poly = vec![Rational::zero()];
        for chain in Self::chains(d) {
            let l = chain.len() - 1;
            let sign = if l % 2 == 0 { int(1) } else { int(-1) };
            let mut js = vec![0i64; l + 1];
            self.walk(d, top, &chain, &mut js, 1, &sign, &mut total);
        }
        total.resize((top + 1) as usize, Rational::zero());
        self.rows.insert(d, total);
    }

    fn walk(&self, d: i64, top: i64, chain: &[i64], js: &mut Vec<i64>, pos: usize, sign: &Rational, total: &mut Poly) {
        let l = chain.len() - 1;
        if pos > l {
            if js[l] > top {
                return;
            }
            let mut term: Poly = vec![sign.clone()];
            for n in 1..=l {
                let i0 = chain[n - 1];
                let base = vec![Rational::new(i0.into(), d.into()), Rational::new((d - i0).into(), d.into())];
                for _ in 0..js[n] - js[n - 1] {
                    term = mul(&term, &base);
                }
                let c = self.get(chain[n] - i0, js[n] + (self.n - self.k) * i0);
                term = term.into_iter().map(|x| x * &c).collect();
            }
            if term.len() > total.len() {
                total.resize(term.len(), Rational::zero());
            }
            for (i, x) in term.into_iter().enumerate() {
                total[i] += x;
            }
            return;
        }
        for j in js[pos - 1]..=top {
            js[pos] = j;
            self.walk(d, top, chain, js, pos + 1, sign, total);
        }
    }
}

#[test]
fn degree_one_rows_match_product_expansion() {
    for k in 1..=20u32 {
        let row = degree_one_row(k);
        let want = product_expansion(k as i64);
        assert_eq!(row, want, "k={k}");
        let mut rev = row.clone();
        rev.reverse();
        assert_eq!(row, rev, "palindrome k={k}");
    }
    assert_eq!(degree_one_row(2), vec![int(2), int(2)]);
    assert_eq!(degree_one_row(3), vec![int(6), int(15), int(6)]);
}

#[test]
fn degree_one_table_row() {
    for (n, k) in [(8u32, 9u32), (5, 7), (4, 14)] {
        let t = VirtualConstantTable::new(n, k).unwrap();
        let want = product_expansion(k as i64);
        for m in 0..=(t.top(1) as i64 + 2) {
            let w = want.get(m as usize).cloned().unwrap_or_else(Rational::zero);
            assert_eq!(t.get(1, m), w, "N={n} k={k} m={m}");
        }
    }
}

#[test]
fn recursion_matches_brute_force() {
    for n in 4..=10i64 {
        for k in n + 1..=n + 3 {
            let table = VirtualConstantTable::new(n as u32, k as u32).unwrap();
            let mut brute = Brute::new(n, k);
            for d in 2..=3 {
                brute.compute(d);
                let row = table.row(d as u32);
                assert_eq!(row.as_slice(), brute.rows[&d].as_slice(), "N={n} k={k} d={d}");
            }
        }
    }
}

#[test]
fn full_row_at_8_9_degree_two() {
    let table = VirtualConstantTable::new(8, 9).unwrap();
    let mut brute = Brute::new(8, 9);
    brute.compute(2);
    for m in 0..=10 {
        assert_eq!(table.get(2, m), brute.get(2, m), "m={m}");
    }
    assert!(table.get(2, 10).is_zero());
}

#[test]
fn palindromy() {
    for n in 4..=12u32 {
        for k in n + 1..=14 {
            let t = VirtualConstantTable::new(n, k).unwrap();
            for d in 1..=4u32 {
                let top = t.top(d) as i64;
                for m in 0..=top {
                    assert_eq!(t.get(d as i64, m), t.get(d as i64, top - m), "N={n} k={k} d={d} m={m}");
                }
            }
        }
    }
}

#[test]
fn support_and_spot_values() {
    assert_eq!(virtual_constant(8, 9, 1, 0).unwrap(), int(362880));
    for (n, k, d) in [(8u32, 9u32, 1u32), (8, 9, 3), (10, 12, 2)] {
        let top = n as i64 - 1 + (k as i64 - n as i64) * d as i64;
        assert!(virtual_constant(n, k, d, top + 1).unwrap().is_zero());
        assert!(virtual_constant(n, k, d, -1).unwrap().is_zero());
        assert!(!virtual_constant(n, k, d, top).unwrap().is_zero());
    }
}

#[test]
fn evaluation_order_does_not_matter() {
    let a = VirtualConstantTable::new(9, 11).unwrap();
    let b = VirtualConstantTable::new(9, 11).unwrap();
    let forward: Vec<_> = (1..=4).map(|d| a.row(d)).collect();
    let backward: Vec<_> = (1..=4).rev().map(|d| b.row(d)).collect();
    for d in 0..4 {
        assert_eq!(forward[d], backward[3 - d]);
    }
}

#[test]
fn unsupported_regimes() {
    for (n, k) in [(8, 7), (8, 8), (3, 9)] {
        assert!(matches!(VirtualConstantTable::new(n, k), Err(Error::UnsupportedRegime { .. })));
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("vsc_N8_k9.json");
    let t = VirtualConstantTable::new(8, 9).unwrap();
    for d in 1..=5 {
        t.row(d);
    }
    t.store(&path).unwrap();
    let back = VirtualConstantTable::load(&path).unwrap();
    assert_eq!(back.degrees(), (1..=5).collect::<Vec<_>>());
    for d in 1..=5 {
        assert_eq!(back.row(d), t.row(d));
    }
    assert_eq!(back.to_json(), t.to_json());
}

#[test]
fn cache_rejects_bad_input() {
    let bad_value = r#"{"schema":1,"N":8,"k":9,"entries":[{"d":1,"m":0,"value":"1/0"}]}"#;
    match VirtualConstantTable::from_json_str(bad_value) {
        Err(Error::CacheParse { key, .. }) => assert_eq!(key, "entries[0].value"),
        other => panic!("{other:?}"),
    }
    let bad_schema = r#"{"schema":99,"N":8,"k":9,"entries":[]}"#;
    assert!(matches!(
        VirtualConstantTable::from_json_str(bad_schema),
        Err(Error::CacheVersion { .. })
    ));
    let missing = r#"{"schema":1,"k":9,"entries":[]}"#;
    assert!(matches!(VirtualConstantTable::from_json_str(missing), Err(Error::CacheParse { .. })));
    assert!(matches!(
        VirtualConstantTable::load(std::path::Path::new("/nonexistent/vsc.json")),
        Err(Error::Io { .. })
    ));
}

#[test]
fn empty_cache_is_valid() {
    let t = VirtualConstantTable::from_json_str(r#"{"schema":1,"N":8,"k":9,"entries":[]}"#).unwrap();
    assert!(t.degrees().is_empty());
    assert_eq!(t.get(1, 0), int(362880));
}
