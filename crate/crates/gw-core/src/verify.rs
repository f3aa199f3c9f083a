//! Named verification suites. Each one runs a fixed battery of exact
//! comparisons and reports every check, so callers can print a full log or
//! stop at the first failure.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::closed_forms::{
    coefficient_ledger, flat_three_point, g_polynomial, hi_product_identities, hi_sector_sums, m8k9_connection,
    m8k9_flat_derivative, m8k9_greek, m8k9_t_connection, m8k9_three_point, real_constant_degree_four,
    real_constant_from_g, real_constant_low_degree, virtual_identities, Identity,
};
use crate::correlator::CorrelatorEngine;
use crate::error::{Error, Result};
use crate::gauss_manin::{check_consistency, eliminate_to_flat, truncated_system};
use crate::mirror::{real_structure_constant, verify_kahler_scaling, window};
use crate::named::hi;
use crate::oracle::VgwOracle;
use crate::partition::partitions;
use crate::scalar::{format_rational, int, parse_rational};
use crate::sector::{build_sector_matrices, lower_index, Normalization};
use crate::virtual_constants::VirtualConstantTable;
use crate::Rational;

/// Reference value for `L^{13,14,6}_8`.
pub const D6_REFERENCE: &str = "3895919811389645033770563942661264371465474526956421097691226041140067266620858637887736545388962432/9375";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn compare(name: impl Into<String>, lhs: &Rational, rhs: &Rational) -> Self {
        Check {
            name: name.into(),
            passed: lhs == rhs,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
        }
    }

    pub fn flag(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            lhs: passed.to_string(),
            rhs: "true".into(),
        }
    }

    fn identity(prefix: &str, id: &Identity) -> Self {
        let show = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        Check {
            name: format!("{prefix}{}", id.label),
            passed: id.holds(),
            lhs: show(&id.lhs),
            rhs: show(&id.rhs),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    M8k9,
    D123General,
    D45HyperplaneSection,
    HiVanishing,
    Iritani,
    OracleVgw,
    Bignum,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::M8k9,
        Suite::D123General,
        Suite::D45HyperplaneSection,
        Suite::HiVanishing,
        Suite::Iritani,
        Suite::OracleVgw,
        Suite::Bignum,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::M8k9 => "m8k9",
            Suite::D123General => "d123-general",
            Suite::D45HyperplaneSection => "d45-hyperplane-section",
            Suite::HiVanishing => "hi-vanishing",
            Suite::Iritani => "iritani",
            Suite::OracleVgw => "oracle-vgw",
            Suite::Bignum => "bignum",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::UnknownCombination(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub fn run(suite: Suite) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::M8k9 => m8k9()?,
        Suite::D123General => {
            let mut c = flat_seeds_low_degree(&[(8, 9), (10, 12)])?;
            c.extend(real_low_degree(&[(10, 12), (12, 14)])?);
            c
        }
        Suite::D45HyperplaneSection => hyperplane_section(12)?,
        Suite::HiVanishing => hi_vanishing(10..=14)?,
        Suite::Iritani => iritani(8, 9, 3)?,
        Suite::OracleVgw => oracle_vgw(12, 5)?,
        Suite::Bignum => bignum()?,
    };
    Ok(SuiteReport { suite, checks })
}

/// Elimination for `M_8^9` against the hand-written system, flat
/// derivative, t-connection and three-point seeds.
pub fn m8k9() -> Result<Vec<Check>> {
    let table = VirtualConstantTable::new(8, 9)?;
    let g = m8k9_greek(&table)?;
    let system = truncated_system(&table, 5)?;
    let flat = eliminate_to_flat(&truncated_system(&table, 3)?)?;
    let mut out = vec![Check::flag("connection matrix", system.connection == m8k9_connection(&g, 5))];

    let f = flat.flat_derivative.with_truncation(3);
    let want = m8k9_flat_derivative(&g);
    out.push(Check::flag("flat derivative through q^3", f == want));

    let got = &flat.t_connection;
    let want = m8k9_t_connection(&g);
    for r in 0..7 {
        for c in 0..7 {
            for d in 0..=3 {
                let (a, b) = (got.coeff(r, c, d), want.coeff(r, c, d));
                if !a.is_zero() || !b.is_zero() {
                    out.push(Check::compare(format!("t-connection ({r},{c}) q^{d}"), &a, &b));
                }
            }
        }
    }
    out.push(Check::flag("flat derivative maps psi_0 to psi_1", check_consistency(&system, &flat)));

    let k = int(9);
    for (e, d, want) in m8k9_three_point(&g) {
        let got = flat.three_point(e[1] as u32, e[2] as u32, d)? / &k;
        out.push(Check::compare(format!("(1/k)w(e^{},e^{},e^{})_{d}", e[0], e[1], e[2]), &got, &want));
    }
    Ok(out)
}

/// `(1/k) w` three-point seeds for `d = 1, 2, 3` against their `V`
/// expansions, for every valid `n`.
pub fn flat_seeds_low_degree(pairs: &[(u32, u32)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(nn, k) in pairs {
        let table = VirtualConstantTable::new(nn, k)?;
        let ve = CorrelatorEngine::virtual_family(&table);
        let we = CorrelatorEngine::flat_family_to(&table, 3)?;
        for d in 1..=3u32 {
            let (lo, hi) = window(nn, k, d);
            for n in lo..=hi {
                let exps = [nn as i64 - 2 - n, n - 1 - (k - nn) as i64 * d as i64, 1];
                let got = we.correlator(&exps, d as i64)? / int(k as i64);
                let want = flat_three_point(&ve, d, n)?;
                out.push(Check::compare(format!("(1/k)w N={nn} k={k} d={d} n={n}"), &got, &want));
            }
        }
    }
    Ok(out)
}

/// Real structure constants for `d = 1, 2, 3` against their closed forms.
pub fn real_low_degree(pairs: &[(u32, u32)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(nn, k) in pairs {
        let table = VirtualConstantTable::new(nn, k)?;
        let ve = CorrelatorEngine::virtual_family(&table);
        let we = CorrelatorEngine::flat_family_to(&table, 3)?;
        for d in 1..=3u32 {
            let (lo, hi) = window(nn, k, d);
            for n in lo..=hi {
                let got = real_structure_constant(&we, d, n)?;
                let want = real_constant_low_degree(&ve, d, n)?;
                out.push(Check::compare(format!("L N={nn} k={k} d={d} n={n}"), &got, &want));
            }
        }
    }
    Ok(out)
}

/// Degree four and five at `N = k - 1`.
pub fn hyperplane_section(k: u32) -> Result<Vec<Check>> {
    let nn = k - 1;
    let table = VirtualConstantTable::new(nn, k)?;
    let ve = CorrelatorEngine::virtual_family(&table);
    let we = CorrelatorEngine::flat_family_to(&table, 5)?;
    let mut out = Vec::new();

    for d in 4..=5u32 {
        let (lo, hi) = window(nn, k, d);
        for n in lo..=hi {
            let exps = [nn as i64 - 2 - n, n - 1 - d as i64, 1];
            let w = we.correlator(&exps, d as i64)? / int(k as i64);
            out.push(Check::compare(format!("(1/k)w d={d} n={n}"), &w, &flat_three_point(&ve, d, n)?));
            let l = real_structure_constant(&we, d, n)?;
            if d == 4 {
                out.push(Check::compare(format!("L d=4 n={n}"), &l, &real_constant_degree_four(&ve, n)?));
            }
            out.push(Check::compare(format!("L d={d} n={n} via G"), &l, &real_constant_from_g(&ve, d, n)?));
        }
    }

    // Sectors with one part, or with s = d - m = 1, must have G = V.
    for d in 1..=5u32 {
        let (lo, hi) = window(nn, k, d);
        for m in 0..d {
            for sigma in partitions(m) {
                if sigma.len() > 1 && d - m != 1 {
                    continue;
                }
                for n in lo..=hi {
                    let g = g_polynomial(&ve, d, &sigma, n)?;
                    let v = ve.normalized(d, &sigma, n)?;
                    out.push(Check::compare(format!("G=V d={d} sigma={sigma} n={n}"), &g, &v));
                }
            }
        }
    }

    let (lo, hi) = window(nn, k, 5);
    for n in lo..=hi {
        for id in virtual_identities(&ve, n)?.iter().chain(&hi_product_identities(&ve, n)?) {
            out.push(Check::identity("", id));
        }
    }
    for id in hi_sector_sums().iter().chain(&coefficient_ledger()) {
        out.push(Check::identity("", id));
    }
    Ok(out)
}

pub fn hi_vanishing(ks: impl IntoIterator<Item = u32>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in ks {
        let table = VirtualConstantTable::new(k - 1, k)?;
        for j in 1..=4u8 {
            for n in 6..=7 {
                out.push(Check::compare(format!("hi_{j}({n}) k={k}"), &hi(&table, j, n)?, &Rational::zero()));
            }
        }
    }
    Ok(out)
}

/// Deformation matrices: commutativity, the coordinate change and the
/// lowered `C̄_1` entries against the elimination seeds.
pub fn iritani(nn: u32, k: u32, truncation: u32) -> Result<Vec<Check>> {
    let table = VirtualConstantTable::new(nn, k)?;
    let system = truncated_system(&table, truncation)?;
    let sectors = build_sector_matrices(&system, Normalization::RowZero)?;
    let flat = eliminate_to_flat(&system)?;
    let mut out = Vec::new();

    let m = &sectors.matrices;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            out.push(Check::flag(format!("[C{}, C{}] = 0", i + 1, j + 1), m[i].commutator(&m[j]).is_zero()));
        }
    }

    let step = (k - nn) as usize;
    let change = sectors.coordinate_change()?;
    for j in 2..=(nn as usize - 2) {
        for d in 1..=truncation {
            let want = if j == 1 + step * d as usize {
                table.get(d as i64, j as i64) / int(d as i64)
            } else {
                Rational::zero()
            };
            let got = change.get(&j).map(|s| s.coeff(d)).unwrap_or_else(Rational::zero);
            out.push(Check::compare(format!("t^{j} at q^{d}"), &got, &want));
        }
    }

    let c1 = sectors.transformed(1)?;
    for d in 1..=truncation {
        let (lo, hi) = window(nn, k, d);
        for n in lo..=hi {
            let j = (nn as i64 - 2 - n) as usize;
            let mm = (n - 1 - (k - nn) as i64 * d as i64) as usize;
            let got = lower_index(&c1, k, j, mm).coeff(d);
            let want = flat.extract_w3(d, n as u32)?;
            out.push(Check::compare(format!("C1({j},{mm}) q^{d}"), &got, &want));
        }
    }
    Ok(out)
}

/// Engine-normalized `V` against the closed recursion, on every in-range
/// key with `d <= d_max` and `m < d`, `m <= 4`. Multi-part sectors are also
/// fed to the recursion in reversed order.
pub fn oracle_vgw(k: u32, d_max: u32) -> Result<Vec<Check>> {
    let nn = k - 1;
    let table = VirtualConstantTable::new(nn, k)?;
    let engine = CorrelatorEngine::virtual_family(&table);
    let oracle = VgwOracle::new(&table)?;
    let top = nn as i64 - 2;
    let mut out = Vec::new();
    for d in 1..=d_max {
        for m in 0..d.min(5) {
            for sigma in partitions(m) {
                for n in 0..=nn as i64 {
                    let mut ins = vec![top - n, n - 1 - d as i64];
                    ins.extend(sigma.parts().iter().map(|&p| 1 + p as i64));
                    if !ins.iter().all(|a| (0..=top).contains(a)) {
                        continue;
                    }
                    let got = engine.normalized(d, &sigma, n)?;
                    let want = oracle.value(d as i64, sigma.parts(), n);
                    out.push(Check::compare(format!("V d={d} sigma={sigma} n={n}"), &got, &want));
                    if sigma.len() > 1 {
                        let rev: Vec<u32> = sigma.parts().iter().rev().copied().collect();
                        let want = oracle.value(d as i64, &rev, n);
                        out.push(Check::compare(format!("V d={d} sigma={sigma} reversed n={n}"), &got, &want));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `L^{13,14,6}_8` against [`D6_REFERENCE`].
pub fn bignum() -> Result<Vec<Check>> {
    let table = VirtualConstantTable::new(13, 14)?;
    let engine = CorrelatorEngine::flat_family_to(&table, 6)?;
    let want = parse_rational(D6_REFERENCE)?;
    let got = real_structure_constant(&engine, 6, 8)?;
    Ok(vec![Check::compare("L^{13,14,6}_8", &got, &want)])
}

/// Kähler scaling at every valid `n` for each `(N, k, d)`.
pub fn kahler(cases: &[(u32, u32, u32)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(nn, k, d) in cases {
        let table = VirtualConstantTable::new(nn, k)?;
        let engine = CorrelatorEngine::flat_family_to(&table, d)?;
        let (lo, hi) = window(nn, k, d);
        for n in lo..=hi {
            let c = verify_kahler_scaling(&engine, d, n)?;
            out.push(Check::compare(format!("Kahler N={nn} k={k} d={d} n={n}"), &c.with_unit, &c.scaled));
        }
    }
    Ok(out)
}
