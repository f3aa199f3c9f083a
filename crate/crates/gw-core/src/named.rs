//! Bilinear combinations of normalized virtual invariants that show up in
//! the degree-4 and degree-5 transformations for `N = k - 1`.
//!
//! `A … D` are products of `V` values; `hi_1 … hi_4` are quadratic in the
//! degree-one constants `L̃^{k-1,k,1}_m` and vanish at `n = 6, 7`.

use std::fmt;
use std::str::FromStr;

use crate::correlator::CorrelatorEngine;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::virtual_constants::VirtualConstantTable;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedCombination {
    A,
    B,
    C,
    D,
    Hi(u8),
}

impl NamedCombination {
    pub const ALL: [NamedCombination; 8] = [
        NamedCombination::A,
        NamedCombination::B,
        NamedCombination::C,
        NamedCombination::D,
        NamedCombination::Hi(1),
        NamedCombination::Hi(2),
        NamedCombination::Hi(3),
        NamedCombination::Hi(4),
    ];
}

impl fmt::Display for NamedCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCombination::A => write!(f, "A"),
            NamedCombination::B => write!(f, "B"),
            NamedCombination::C => write!(f, "C"),
            NamedCombination::D => write!(f, "D"),
            NamedCombination::Hi(j) => write!(f, "hi_{j}"),
        }
    }
}

impl FromStr for NamedCombination {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(NamedCombination::A),
            "B" => Ok(NamedCombination::B),
            "C" => Ok(NamedCombination::C),
            "D" => Ok(NamedCombination::D),
            "hi_1" => Ok(NamedCombination::Hi(1)),
            "hi_2" => Ok(NamedCombination::Hi(2)),
            "hi_3" => Ok(NamedCombination::Hi(3)),
            "hi_4" => Ok(NamedCombination::Hi(4)),
            other => Err(Error::UnknownCombination(other.to_string())),
        }
    }
}

fn check_hyperplane(n: u32, k: u32) -> Result<()> {
    if k != n + 1 {
        return Err(Error::UnsupportedRegime {
            n: n as i64,
            k: k as i64,
        });
    }
    Ok(())
}

/// `V^{k-1,k,d}_{d-|σ|}(n; σ)` through a `v`-family engine.
pub fn v(engine: &CorrelatorEngine, d: u32, parts: &[u32], n: i64) -> Result<Rational> {
    engine.normalized(d, &Partition::new(parts.to_vec()), n)
}

/// Evaluates a combination at `n`. `engine` must be a `v`-family engine
/// with `N = k - 1`; the `hi_j` only read its table.
pub fn evaluate(engine: &CorrelatorEngine, which: NamedCombination, n: i64) -> Result<Rational> {
    check_hyperplane(engine.N(), engine.k())?;
    match which {
        NamedCombination::A => a(engine, n),
        NamedCombination::B => b(engine, n),
        NamedCombination::C => c(engine, n),
        NamedCombination::D => Ok(a(engine, n)? + a(engine, n - 1)?),
        NamedCombination::Hi(j) => hi(engine.table(), j, n),
    }
}

fn a(e: &CorrelatorEngine, n: i64) -> Result<Rational> {
    Ok(v(e, 2, &[1], n)? * v(e, 1, &[], n - 3)? + v(e, 1, &[], n)? * v(e, 2, &[1], n - 2)?
        - v(e, 4, &[1, 2], n)? * v(e, 1, &[], 3)?
        - v(e, 4, &[3], n)? * v(e, 1, &[], 4)?)
}

fn b(e: &CorrelatorEngine, n: i64) -> Result<Rational> {
    let bracket = v(e, 4, &[2], n)? + v(e, 4, &[2], n - 1)? - v(e, 2, &[], 6)?;
    Ok(v(e, 3, &[1], n)? * v(e, 1, &[], n - 4)? + v(e, 1, &[], n)? * v(e, 3, &[1], n - 2)?
        - bracket * v(e, 1, &[], 3)?
        - v(e, 5, &[4], n)? * v(e, 2, &[], 5)?)
}

fn c(e: &CorrelatorEngine, n: i64) -> Result<Rational> {
    Ok(v(e, 2, &[1], n)? * v(e, 2, &[], n - 3)? + v(e, 2, &[], n)? * v(e, 2, &[1], n - 3)?
        - v(e, 5, &[1, 3], n)? * v(e, 2, &[], 4)?
        - v(e, 5, &[3], n)? * v(e, 1, &[], 4)?)
}

/// `hi_j(n)` from the degree-one row of `table` (which must have `N = k-1`).
pub fn hi(table: &VirtualConstantTable, j: u8, n: i64) -> Result<Rational> {
    check_hyperplane(table.N(), table.k())?;
    let l = |m: i64| table.get(1, m);
    let window = |n: i64| (0..=4).map(|s| l(n - s)).fold(Rational::from_integer(0.into()), |a, b| a + b);
    let (l2, l3, l4, l5, l6) = (l(2), l(3), l(4), l(5), l(6));
    let low = &l6 + &l5 + &l4 + &l3 + &l2;
    Ok(match j {
        1 => {
            l(n) * l(n - 4) - &l3 * window(n) + &l2 * (l(n - 1) + l(n - 2) + l(n - 3))
                - (&l6 * &l2 - &l3 * &low + &l2 * (&l5 + &l4 + &l3))
        }
        2 => {
            l(n) * l(n - 3) + l(n - 1) * l(n - 4) - &l4 * window(n) + &l2 * l(n - 2)
                - (&l6 * &l3 + &l5 * &l2 - &l4 * &low + &l2 * &l4)
        }
        3 => {
            l(n) * l(n - 2) + l(n - 1) * l(n - 3) + l(n - 2) * l(n - 4) - &l5 * window(n) - &l2 * l(n - 2)
                - (&l6 * &l4 + &l5 * &l3 + &l4 * &l2 - &l5 * &low - &l2 * &l4)
        }
        4 => {
            l(n - 1) * l(n - 3) - &l4 * (l(n - 1) + l(n - 2) + l(n - 3)) + &l3 * l(n - 2)
                - (&l5 * &l3 - &l4 * (&l5 + &l4 + &l3) + &l3 * &l4)
        }
        _ => return Err(Error::UnknownCombination(format!("hi_{j}"))),
    })
}
