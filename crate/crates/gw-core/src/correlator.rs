//! Genus-0 correlators `v(∏ O_{e^{a_i}})_d` and `w(∏ O_{e^{a_i}})_d`.
//!
//! Both families share the selection rule, the degree-0 values and the
//! associativity reduction. They differ in their three-point seeds (the
//! virtual constants for `v`, the flat connection for `w`) and in how an
//! `O_e` insertion is removed from four or more points.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::sync::RwLock;

use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::gauss_manin::{eliminate_to_flat, truncated_system, FlatConnection};
use crate::partition::Partition;
use crate::scalar::{format_rational, int};
use crate::virtual_constants::VirtualConstantTable;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `v`: seeds from the virtual structure constants.
    Virtual,
    /// `w`: seeds from the flat-coordinate connection.
    Flat,
}

impl Family {
    fn symbol(self) -> &'static str {
        match self {
            Family::Virtual => "v",
            Family::Flat => "w",
        }
    }
}

/// How a correlator whose insertions are all `>= 2` is split by
/// associativity. `a` is always the smallest exponent and gets lowered by
/// one; the two strategies differ in which exponents it is paired with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitStrategy {
    /// Pair `a` with the two largest exponents.
    #[default]
    SmallestWithLargest,
    /// Pair `a` with the largest and the second-smallest exponent.
    SmallestWithNext,
}

/// Sorted exponents and a degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorrelatorKey {
    pub exponents: Vec<u32>,
    pub degree: u32,
}

impl fmt::Display for CorrelatorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exponents.iter().map(|a| a.to_string()).collect();
        write!(f, "<{}>_{}", e.join(","), self.degree)
    }
}

#[derive(Clone, Debug)]
struct Term {
    coeff: Rational,
    factors: Vec<CorrelatorKey>,
}

#[derive(Clone, Debug)]
enum Reduction {
    Value(Rational, &'static str),
    Terms(Vec<Term>, &'static str),
}

enum Seeds {
    Virtual,
    Flat(Box<FlatConnection>),
}

pub struct CorrelatorEngine<'a> {
    n: u32,
    k: u32,
    family: Family,
    table: &'a VirtualConstantTable,
    seeds: Seeds,
    strategy: SplitStrategy,
    memo: RwLock<HashMap<CorrelatorKey, Rational>>,
}

impl<'a> CorrelatorEngine<'a> {
    /// Engine for the `v` family.
    pub fn virtual_family(table: &'a VirtualConstantTable) -> Self {
        Self::build(table, Family::Virtual, Seeds::Virtual)
    }

    /// Engine for the `w` family, seeded by an existing flat connection.
    pub fn flat_family(table: &'a VirtualConstantTable, flat: FlatConnection) -> Result<Self> {
        if flat.n != table.N() || flat.k != table.k() {
            return Err(Error::UnsupportedRegime {
                n: flat.n as i64,
                k: flat.k as i64,
            });
        }
        Ok(Self::build(table, Family::Flat, Seeds::Flat(Box::new(flat))))
    }

    /// Engine for the `w` family, building the flat connection through
    /// `q^truncation` first.
    pub fn flat_family_to(table: &'a VirtualConstantTable, truncation: u32) -> Result<Self> {
        let system = truncated_system(table, truncation)?;
        let flat = eliminate_to_flat(&system)?;
        Self::flat_family(table, flat)
    }

    fn build(table: &'a VirtualConstantTable, family: Family, seeds: Seeds) -> Self {
        CorrelatorEngine {
            n: table.N(),
            k: table.k(),
            family,
            table,
            seeds,
            strategy: SplitStrategy::default(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_strategy(mut self, strategy: SplitStrategy) -> Self {
        self.strategy = strategy;
        self.memo.write().unwrap().clear();
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn table(&self) -> &'a VirtualConstantTable {
        self.table
    }

    pub fn flat_connection(&self) -> Option<&FlatConnection> {
        match &self.seeds {
            Seeds::Flat(f) => Some(f),
            Seeds::Virtual => None,
        }
    }

    #[allow(non_snake_case)]
    pub fn N(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of memoized values.
    pub fn cached(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    /// Canonical key, or `None` when the correlator vanishes on sight:
    /// negative degree, an exponent outside `0..=N-2`, or a violated
    /// selection rule `Σ (a_i - 1) = N - 5 + (N - k) d`.
    pub fn key(&self, exponents: &[i64], degree: i64) -> Option<CorrelatorKey> {
        let (n, k) = (self.n as i64, self.k as i64);
        if degree < 0 || exponents.iter().any(|&a| a < 0 || a > n - 2) {
            return None;
        }
        let lhs: i64 = exponents.iter().map(|a| a - 1).sum();
        if lhs != n - 5 + (n - k) * degree {
            return None;
        }
        let mut e: Vec<u32> = exponents.iter().map(|&a| a as u32).collect();
        e.sort_unstable();
        Some(CorrelatorKey {
            exponents: e,
            degree: degree as u32,
        })
    }

    /// Correlator with insertions `O_{e^{a}}` for `a` in `exponents`.
    pub fn correlator(&self, exponents: &[i64], degree: i64) -> Result<Rational> {
        match self.key(exponents, degree) {
            None => Ok(Rational::zero()),
            Some(key) => self.value(&key, &mut HashSet::new()),
        }
    }

    /// `V^{N,k,d}_{d-m}(n; σ)`: the correlator
    /// `<O_e O_{e^{N-2-n}} O_{e^{n-1-(k-N)d}} ∏_j O_{e^{1+(k-N)d_j}}>_{d-m}`
    /// divided by `k (d-m)^l`, with `m = |σ|` and `l` its number of parts.
    pub fn normalized(&self, d: u32, sigma: &Partition, n: i64) -> Result<Rational> {
        let m = sigma.weight();
        if m >= d {
            return Err(Error::OutOfRange {
                what: "partition weight",
                index: m as i64,
            });
        }
        let (nn, k) = (self.n as i64, self.k as i64);
        let mut ins = vec![1, nn - 2 - n, n - 1 - (k - nn) * d as i64];
        ins.extend(sigma.parts().iter().map(|&p| 1 + (k - nn) * p as i64));
        let dm = (d - m) as i64;
        let raw = self.correlator(&ins, dm)?;
        let denom = int(k) * Pow::pow(int(dm), sigma.len());
        Ok(raw / denom)
    }

    fn value(&self, key: &CorrelatorKey, visiting: &mut HashSet<CorrelatorKey>) -> Result<Rational> {
        if let Some(v) = self.memo.read().unwrap().get(key) {
            return Ok(v.clone());
        }
        if !visiting.insert(key.clone()) {
            return Err(Error::Reduction {
                key: self.label(key),
                reason: "reduction revisits this correlator".into(),
            });
        }
        let v = match self.reduce(key)? {
            Reduction::Value(v, _) => v,
            Reduction::Terms(terms, _) => self.evaluate(&terms, visiting)?,
        };
        visiting.remove(key);
        self.memo.write().unwrap().insert(key.clone(), v.clone());
        Ok(v)
    }

    fn evaluate(&self, terms: &[Term], visiting: &mut HashSet<CorrelatorKey>) -> Result<Rational> {
        let mut total = Rational::zero();
        'terms: for t in terms {
            let mut prod = t.coeff.clone();
            for f in &t.factors {
                let v = self.value(f, visiting)?;
                if v.is_zero() {
                    continue 'terms;
                }
                prod *= v;
            }
            total += prod;
        }
        Ok(total)
    }

    fn three_point_seed(&self, a: u32, b: u32, d: u32) -> Result<Rational> {
        let (n, k) = (self.n as i64, self.k as i64);
        match &self.seeds {
            Seeds::Virtual => {
                let idx = n - 2 - a.min(b) as i64;
                let dd = d as i64;
                Ok(int(k) * (self.table.get(dd, idx) - self.table.get(dd, 1 + (k - n) * dd)))
            }
            Seeds::Flat(f) => f.three_point(a, b, d),
        }
    }

    fn reduce(&self, key: &CorrelatorKey) -> Result<Reduction> {
        let (n, k) = (self.n as i64, self.k as i64);
        let e = &key.exponents;
        let d = key.degree;
        let points = e.len();
        if d == 0 {
            let s: u32 = e.iter().sum();
            let v = if points == 3 && s as i64 == n - 2 {
                int(k)
            } else {
                Rational::zero()
            };
            return Ok(Reduction::Value(v, "classical"));
        }
        if e.contains(&0) {
            return Ok(Reduction::Value(Rational::zero(), "unit insertion"));
        }
        if points < 3 {
            return Err(Error::Reduction {
                key: self.label(key),
                reason: "fewer than three insertions".into(),
            });
        }
        if e[0] == 1 {
            let rest: Vec<i64> = e[1..].iter().map(|&a| a as i64).collect();
            if points == 3 {
                let v = self.three_point_seed(e[1], e[2], d)?;
                return Ok(Reduction::Value(v, "seed"));
            }
            let mut terms = Vec::new();
            if let Some(kk) = self.key(&rest, d as i64) {
                terms.push(Term {
                    coeff: int(d as i64),
                    factors: vec![kk],
                });
            }
            if self.family == Family::Flat {
                for f in 1..d as i64 {
                    let ins = 1 + (k - n) * f;
                    if ins > n - 2 {
                        continue;
                    }
                    let u = self.table.get(f, ins);
                    let mut more = rest.clone();
                    more.push(ins);
                    if let (false, Some(kk)) = (u.is_zero(), self.key(&more, d as i64 - f)) {
                        terms.push(Term {
                            coeff: -u,
                            factors: vec![kk],
                        });
                    }
                }
            }
            let rule = match self.family {
                Family::Virtual => "divisor",
                Family::Flat => "modified divisor",
            };
            return Ok(Reduction::Terms(terms, rule));
        }
        Ok(Reduction::Terms(self.associativity_terms(key), "associativity"))
    }

    /// Lowers the smallest exponent `a` by one through
    /// `<e a-1 | b c> = <e b | a-1 c>` summed over degree splits and
    /// distributions of the remaining insertions. The target appears once on
    /// the left with coefficient `k`.
    fn associativity_terms(&self, key: &CorrelatorKey) -> Vec<Term> {
        let (n, k) = (self.n as i64, self.k as i64);
        let e: Vec<i64> = key.exponents.iter().map(|&a| a as i64).collect();
        let d = key.degree as i64;
        let len = e.len();
        let a = e[0];
        let b = e[len - 1];
        let (c, others): (i64, Vec<i64>) = match self.strategy {
            SplitStrategy::SmallestWithLargest => (e[len - 2], e[1..len - 2].to_vec()),
            SplitStrategy::SmallestWithNext => (e[1], e[2..len - 1].to_vec()),
        };
        let inv_k = Rational::one() / int(k);
        let mut terms = Vec::new();
        let mut side = |p: [i64; 2], q: [i64; 2], sign: Rational, skip_target: bool| {
            let x = others.len();
            for mask in 0u32..(1 << x) {
                let alpha: Vec<i64> = (0..x).filter(|t| mask >> t & 1 == 1).map(|t| others[t]).collect();
                let beta: Vec<i64> = (0..x).filter(|t| mask >> t & 1 == 0).map(|t| others[t]).collect();
                for d1 in 0..=d {
                    let used: i64 = p.iter().chain(alpha.iter()).map(|v| v - 1).sum();
                    let i = n - 4 + (n - k) * d1 - used;
                    if skip_target && d1 == 0 && alpha.is_empty() {
                        continue;
                    }
                    let mut f1: Vec<i64> = p.to_vec();
                    f1.extend(&alpha);
                    f1.push(i);
                    let mut f2: Vec<i64> = vec![n - 2 - i];
                    f2.extend(&beta);
                    f2.extend(q);
                    if let (Some(k1), Some(k2)) = (self.key(&f1, d1), self.key(&f2, d - d1)) {
                        terms.push(Term {
                            coeff: sign.clone(),
                            factors: vec![k1, k2],
                        });
                    }
                }
            }
        };
        side([1, b], [a - 1, c], inv_k.clone(), false);
        side([1, a - 1], [b, c], -inv_k, true);
        terms
    }

    fn label(&self, key: &CorrelatorKey) -> String {
        format!("{}{}", self.family.symbol(), key)
    }

    /// Indented reduction tree for debugging, down to `max_depth` levels.
    pub fn explain(&self, exponents: &[i64], degree: i64, max_depth: usize) -> Result<String> {
        let mut out = String::new();
        match self.key(exponents, degree) {
            None => {
                let _ = writeln!(out, "{}{:?}_{} = 0 [selection]", self.family.symbol(), exponents, degree);
            }
            Some(key) => self.explain_into(&key, 0, max_depth, &mut out)?,
        }
        Ok(out)
    }

    fn explain_into(&self, key: &CorrelatorKey, depth: usize, max_depth: usize, out: &mut String) -> Result<()> {
        let pad = "  ".repeat(depth);
        let value = self.value(key, &mut HashSet::new())?;
        let reduction = self.reduce(key)?;
        let rule = match &reduction {
            Reduction::Value(_, r) | Reduction::Terms(_, r) => *r,
        };
        let _ = writeln!(out, "{pad}{} = {} [{rule}]", self.label(key), format_rational(&value));
        if depth >= max_depth {
            return Ok(());
        }
        if let Reduction::Terms(terms, _) = reduction {
            for t in terms {
                let mut vals = Vec::new();
                for f in &t.factors {
                    vals.push(self.value(f, &mut HashSet::new())?);
                }
                if vals.iter().any(Zero::is_zero) {
                    continue;
                }
                let names: Vec<String> = t.factors.iter().map(|f| self.label(f)).collect();
                let _ = writeln!(out, "{pad}  * {} x {}", format_rational(&t.coeff), names.join(" . "));
                for f in &t.factors {
                    self.explain_into(f, depth + 2, max_depth, out)?;
                }
            }
        }
        Ok(())
    }
}
