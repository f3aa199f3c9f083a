//! Closed recursion for `V^{k-1,k,d}_{d-m}(n; σ)` in terms of degree-`d`
//! virtual constants alone.
//!
//! This never touches the correlator engine, which makes it a useful
//! independent check on the associativity reduction. Only `N = k - 1` is
//! covered.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::scalar::rational;
use crate::virtual_constants::VirtualConstantTable;
use crate::Rational;

type Key = (i64, Vec<u32>, i64);

pub struct VgwOracle<'a> {
    table: &'a VirtualConstantTable,
    memo: RwLock<HashMap<Key, Rational>>,
}

impl<'a> VgwOracle<'a> {
    pub fn new(table: &'a VirtualConstantTable) -> Result<Self> {
        if table.k() != table.N() + 1 {
            return Err(Error::UnsupportedRegime {
                n: table.N() as i64,
                k: table.k() as i64,
            });
        }
        Ok(VgwOracle {
            table,
            memo: RwLock::new(HashMap::new()),
        })
    }

    /// `V^{k-1,k,d}_{d-m}(n; d_1 + … + d_l)`. Zero parts are dropped; the
    /// order of the remaining parts is kept as given. Returns 0 when
    /// `d - m < 1` or an insertion falls outside `0..=N-2`.
    pub fn value(&self, d: i64, parts: &[u32], n: i64) -> Rational {
        let sigma: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        let key = (d, sigma, n);
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.compute(key.0, &key.1, key.2);
        self.memo.write().unwrap().insert(key, v.clone());
        v
    }

    fn in_range(&self, d: i64, sigma: &[u32], n: i64) -> bool {
        let top = self.table.N() as i64 - 2;
        let m: i64 = sigma.iter().map(|&p| p as i64).sum();
        if d - m < 1 {
            return false;
        }
        let mut ins = vec![top - n, n - 1 - d];
        ins.extend(sigma.iter().map(|&p| 1 + p as i64));
        ins.iter().all(|&a| (0..=top).contains(&a))
    }

    fn compute(&self, d: i64, sigma: &[u32], n: i64) -> Rational {
        if !self.in_range(d, sigma, n) {
            return Rational::zero();
        }
        let t = self.table;
        let l = sigma.len();
        if l == 0 {
            return t.get(d, n) - t.get(d, 1 + d);
        }
        let m: i64 = sigma.iter().map(|&p| p as i64).sum();
        let dm = d - m;
        let dl = sigma[l - 1];
        let rest = &sigma[..l - 1];
        let with = |extra: u32, subset: &[u32]| {
            let mut v = subset.to_vec();
            v.push(extra);
            v
        };

        let mut r = self.value(d - 1, &with(dl - 1, rest), n) + self.value(d - dl as i64, rest, n - dl as i64)
            - self.value(d - dl as i64, rest, d + 1);

        let splits = 1u32 << (l - 1);
        for j in 1..dm {
            for mask in 0..splits {
                let a: Vec<u32> = (0..l - 1).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
                let b: Vec<u32> = (0..l - 1).filter(|&i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
                let p = a.len();
                let da: i64 = a.iter().map(|&x| x as i64).sum();
                let db: i64 = b.iter().map(|&x| x as i64).sum();
                let w = Pow::pow(rational(dm - j, dm), p) * Pow::pow(rational(j, dm), l - p - 1);
                let second = self.value(j + db, &b, n + j - d + m - da - dl as i64);
                if !second.is_zero() {
                    let first = self.value(dm - j + da + dl as i64 - 1, &with(dl - 1, &a), n);
                    r += &w * first * second;
                }
                let second = self.value(j + db, &b, m + 1 + j - da);
                if !second.is_zero() {
                    let first = self.value(d, &with((m + j - da) as u32, &a), n);
                    r -= &w * first * second;
                }
            }
        }
        r
    }
}
