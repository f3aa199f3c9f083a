//! The virtual structure constants `L̃^{N,k,d}_m`.
//!
//! Degree one comes straight from a product formula; every higher degree is
//! fixed by an alternating sum over chains of lower degrees. Rows are cached
//! per degree and never rewritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, rational};

pub const CACHE_SCHEMA: i64 = 1;

/// Coefficients of `k ∏_{j=1}^{k-1} (j w + (k - j))` in ascending powers of w.
pub fn degree_one_row(k: u32) -> Vec<BigRational> {
    let mut poly = vec![BigInt::from(k.max(1))];
    for j in 1..k {
        let (a, b) = (BigInt::from(j), BigInt::from(k - j));
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c * &b;
            next[i + 1] += c * &a;
        }
        poly = next;
    }
    poly.into_iter().map(BigRational::from_integer).collect()
}

pub fn check_regime(n: u32, k: u32) -> Result<()> {
    if n < 4 || k <= n {
        return Err(Error::UnsupportedRegime {
            n: n as i64,
            k: k as i64,
        });
    }
    Ok(())
}

/// Memoized table of `L̃^{N,k,d}_m` for one `(N, k)`.
///
/// Safe to share between threads. Missing rows are filled on first use;
/// concurrent fills of the same row compute the same value and the first
/// writer wins.
#[derive(Debug)]
pub struct VirtualConstantTable {
    n: u32,
    k: u32,
    rows: RwLock<BTreeMap<u32, Arc<Vec<BigRational>>>>,
}

impl Clone for VirtualConstantTable {
    fn clone(&self) -> Self {
        VirtualConstantTable {
            n: self.n,
            k: self.k,
            rows: RwLock::new(self.rows.read().unwrap().clone()),
        }
    }
}

impl VirtualConstantTable {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_regime(n, k)?;
        Ok(VirtualConstantTable {
            n,
            k,
            rows: RwLock::new(BTreeMap::new()),
        })
    }

    #[allow(non_snake_case)]
    pub fn N(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Largest `m` with a possibly nonzero entry at degree `d`.
    pub fn top(&self, d: u32) -> u32 {
        self.n - 1 + (self.k - self.n) * d
    }

    /// `L̃^{N,k,d}_m`; zero for `d < 1` or `m` outside `0..=top(d)`.
    pub fn get(&self, d: i64, m: i64) -> BigRational {
        if d < 1 || m < 0 || m > self.top(d as u32) as i64 {
            return BigRational::zero();
        }
        self.row(d as u32)[m as usize].clone()
    }

    /// Full row `m = 0..=top(d)` for `d >= 1`.
    pub fn row(&self, d: u32) -> Arc<Vec<BigRational>> {
        assert!(d >= 1, "rows start at degree 1");
        if let Some(r) = self.rows.read().unwrap().get(&d) {
            return r.clone();
        }
        for lower in 1..d {
            self.row(lower);
        }
        let computed = Arc::new(self.compute_row(d));
        let mut rows = self.rows.write().unwrap();
        let entry = rows.entry(d).or_insert_with(|| computed.clone());
        debug_assert_eq!(**entry, *computed, "recomputed row differs at d={d}");
        entry.clone()
    }

    /// Degrees currently held.
    pub fn degrees(&self) -> Vec<u32> {
        self.rows.read().unwrap().keys().copied().collect()
    }

    fn compute_row(&self, d: u32) -> Vec<BigRational> {
        if d == 1 {
            let mut row = degree_one_row(self.k);
            row.resize(self.top(1) as usize + 1, BigRational::zero());
            return row;
        }
        let (n, k) = (self.n as i64, self.k as i64);
        let top = self.top(d) as usize;
        let du = d as usize;
        let dd = d as i64;

        // Signed polynomials in z. `arrive[i][j]`: chains ending with a jump
        // to node i at exponent index j. `walk[i][j]`: those chains carried
        // forward to index j by powers of ((i + (d-i) z)/d).
        let zero_poly: Vec<BigRational> = Vec::new();
        let mut arrive = vec![vec![zero_poly.clone(); top + 1]; du + 1];
        let mut walk = vec![vec![zero_poly.clone(); top + 1]; du + 1];
        arrive[0][0] = vec![BigRational::one()];
        let mut total = vec![BigRational::zero(); top + 1];

        for i in 0..=du {
            let base = (rational(i as i64, dd), rational(dd - i as i64, dd));
            for j in 0..=top {
                if i > 0 {
                    let mut acc: Vec<BigRational> = Vec::new();
                    for i0 in 0..i {
                        if i0 == 0 && i == du {
                            continue;
                        }
                        let src = &walk[i0][j];
                        if src.is_empty() {
                            continue;
                        }
                        let l = self.get((i - i0) as i64, j as i64 + (n - k) * i0 as i64);
                        if l.is_zero() {
                            continue;
                        }
                        add_scaled(&mut acc, src, &-l);
                    }
                    arrive[i][j] = acc;
                }
                let mut w = arrive[i][j].clone();
                if j > 0 && !walk[i][j - 1].is_empty() {
                    let carried = mul_linear(&walk[i][j - 1], &base.0, &base.1);
                    add_scaled(&mut w, &carried, &BigRational::one());
                }
                walk[i][j] = w;
            }
        }
        for j in 0..=top {
            let p = &arrive[du][j];
            for (e, c) in p.iter().enumerate() {
                if e <= top {
                    total[e] += c;
                }
            }
        }
        total
    }

    /// Writes every held row to `path` in the cache schema.
    pub fn store(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("json serialisation");
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
            }
        }
        fs::write(path, text + "\n").map_err(|e| io_err(path, e))
    }

    pub fn to_json(&self) -> Value {
        let rows = self.rows.read().unwrap();
        let mut entries = Vec::new();
        for (&d, row) in rows.iter() {
            for (m, v) in row.iter().enumerate() {
                entries.push(json!({"d": d, "m": m, "value": format_rational(v)}));
            }
        }
        json!({"schema": CACHE_SCHEMA, "N": self.n, "k": self.k, "entries": entries})
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        Self::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(text).map_err(|e| Error::CacheParse {
            key: "<root>".into(),
            reason: e.to_string(),
        })?;
        let schema = int_field(&root, "schema", "schema")?;
        if schema != CACHE_SCHEMA {
            return Err(Error::CacheVersion {
                found: schema,
                expected: CACHE_SCHEMA,
            });
        }
        let n = int_field(&root, "N", "N")?;
        let k = int_field(&root, "k", "k")?;
        if n < 0 || k < 0 || n > u32::MAX as i64 || k > u32::MAX as i64 {
            return Err(Error::UnsupportedRegime { n, k });
        }
        let table = Self::new(n as u32, k as u32)?;
        let entries = root
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err("entries", "missing or not an array"))?;

        let mut rows: BTreeMap<u32, Vec<Option<BigRational>>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            let d = int_field(e, "d", &format!("entries[{i}].d"))?;
            let m = int_field(e, "m", &format!("entries[{i}].m"))?;
            if !(1..=10_000).contains(&d) {
                return Err(parse_err(&format!("entries[{i}].d"), "degree must be positive"));
            }
            let top = table.top(d as u32) as i64;
            if m < 0 || m > top {
                return Err(parse_err(&format!("entries[{i}].m"), "outside the support of the row"));
            }
            let key = format!("entries[{i}].value");
            let raw = e
                .get("value")
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err(&key, "missing or not a string"))?;
            let v = parse_rational(raw).map_err(|err| parse_err(&key, &err.to_string()))?;
            let row = rows
                .entry(d as u32)
                .or_insert_with(|| vec![None; top as usize + 1]);
            row[m as usize] = Some(v);
        }
        let mut held = table.rows.write().unwrap();
        for (d, row) in rows {
            let full: Option<Vec<BigRational>> = row.into_iter().collect();
            let full = full.ok_or_else(|| parse_err("entries", &format!("row d={d} is incomplete")))?;
            held.insert(d, Arc::new(full));
        }
        drop(held);
        Ok(table)
    }
}

fn add_scaled(acc: &mut Vec<BigRational>, src: &[BigRational], c: &BigRational) {
    if acc.len() < src.len() {
        acc.resize(src.len(), BigRational::zero());
    }
    for (a, s) in acc.iter_mut().zip(src) {
        if !s.is_zero() {
            *a += s * c;
        }
    }
}

/// `p · (a + b z)`.
fn mul_linear(p: &[BigRational], a: &BigRational, b: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (e, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[e] += c * a;
        out[e + 1] += c * b;
    }
    while out.last().is_some_and(|c| c.is_zero()) && out.len() > 1 {
        out.pop();
    }
    out
}

fn parse_err(key: &str, reason: &str) -> Error {
    Error::CacheParse {
        key: key.to_string(),
        reason: reason.to_string(),
    }
}

fn int_field(v: &Value, field: &str, key: &str) -> Result<i64> {
    v.get(field)
        .and_then(Value::as_i64)
        .ok_or_else(|| parse_err(key, "missing or not an integer"))
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

/// Convenience for one-off lookups; builds a fresh table each call.
pub fn virtual_constant(n: u32, k: u32, d: u32, m: i64) -> Result<BigRational> {
    let t = VirtualConstantTable::new(n, k)?;
    Ok(t.get(d as i64, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn small_degree_one_rows() {
        assert_eq!(degree_one_row(1), vec![int(1)]);
        assert_eq!(degree_one_row(2), vec![int(2), int(2)]);
        assert_eq!(degree_one_row(3), vec![int(6), int(15), int(6)]);
    }

    #[test]
    fn constant_term_of_quintic_like_row() {
        assert_eq!(virtual_constant(8, 9, 1, 0).unwrap(), int(362880));
    }

    #[test]
    fn support_is_bounded() {
        let t = VirtualConstantTable::new(8, 9).unwrap();
        for d in 1..=3 {
            assert!(t.get(d, 8 + d).is_zero());
            assert!(t.get(d, -1).is_zero());
        }
        assert!(t.get(0, 0).is_zero());
    }

    #[test]
    fn regime_gate() {
        assert!(matches!(
            VirtualConstantTable::new(8, 8),
            Err(Error::UnsupportedRegime { .. })
        ));
        assert!(VirtualConstantTable::new(8, 7).is_err());
        assert!(VirtualConstantTable::new(3, 9).is_err());
    }

    #[test]
    fn rejects_zero_denominator() {
        let text = r#"{"schema":1,"N":8,"k":9,"entries":[{"d":1,"m":0,"value":"1/0"}]}"#;
        match VirtualConstantTable::from_json_str(text) {
            Err(Error::CacheParse { key, .. }) => assert_eq!(key, "entries[0].value"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
