//! Real structure constants `L^{N,k,d}_n` from `w` correlators.
//!
//! `k L^d_n = Σ_{g<d} Σ_{σ ⊢ g} (-1)^{l(σ)} S(σ) ∏_i (u_{d_i}/d_i)
//!            · w(O_{e^{N-2-n}} O_{e^{n-1-(k-N)d}} O_e ∏_i O_{e^{1+(k-N)d_i}})_{d-g}`
//! with `u_f = L̃^{N,k,f}_{1+(k-N)f}`.

use num_traits::Zero;

use crate::correlator::{CorrelatorEngine, Family};
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::scalar::int;
use crate::Rational;

/// Inclusive range of `n` where `L^{N,k,d}_n` can be nonzero.
pub fn window(n: u32, k: u32, d: u32) -> (i64, i64) {
    (2 + (k as i64 - n as i64) * d as i64, n as i64 - 3)
}

/// `u_f = L̃^f_{1+(k-N)f}`, or 0 when that exponent is not a valid insertion.
pub fn shift_coefficient(engine: &CorrelatorEngine, f: u32) -> Rational {
    let (n, k) = (engine.N() as i64, engine.k() as i64);
    let e = 1 + (k - n) * f as i64;
    if e > n - 2 {
        return Rational::zero();
    }
    engine.table().get(f as i64, e)
}

/// `(-1)^l S(σ) ∏ u_{d_i}/d_i`.
pub fn sector_weight(engine: &CorrelatorEngine, sigma: &Partition) -> Rational {
    let mut w = sigma.symmetry_factor();
    for &p in sigma.parts() {
        w = w * shift_coefficient(engine, p) / int(p as i64);
        w = -w;
    }
    w
}

fn require_flat(engine: &CorrelatorEngine) -> Result<()> {
    if engine.family() != Family::Flat {
        return Err(Error::Reduction {
            key: "mirror sum".into(),
            reason: "needs the w family".into(),
        });
    }
    Ok(())
}

/// The partition sum itself, without the window check or the `1/k`.
/// With `extra_unit` every correlator gets one more `O_e`.
pub fn mirror_sum(engine: &CorrelatorEngine, d: u32, n: i64, extra_unit: bool) -> Result<Rational> {
    require_flat(engine)?;
    let (nn, k) = (engine.N() as i64, engine.k() as i64);
    let mut total = Rational::zero();
    for g in 0..d {
        for sigma in partitions(g) {
            let weight = sector_weight(engine, &sigma);
            if weight.is_zero() {
                continue;
            }
            let mut ins = vec![nn - 2 - n, n - 1 - (k - nn) * d as i64, 1];
            if extra_unit {
                ins.push(1);
            }
            ins.extend(sigma.parts().iter().map(|&p| 1 + (k - nn) * p as i64));
            let w = engine.correlator(&ins, (d - g) as i64)?;
            total += weight * w;
        }
    }
    Ok(total)
}

/// `L^{N,k,d}_n`; zero outside [`window`].
pub fn real_structure_constant(engine: &CorrelatorEngine, d: u32, n: i64) -> Result<Rational> {
    require_flat(engine)?;
    let (lo, hi) = window(engine.N(), engine.k(), d);
    if n < lo || n > hi {
        return Ok(Rational::zero());
    }
    Ok(mirror_sum(engine, d, n, false)? / int(engine.k() as i64))
}

/// Outcome of comparing the sum with an extra `O_e` against `d` times the
/// plain sum.
#[derive(Clone, Debug, PartialEq)]
pub struct KahlerCheck {
    pub with_unit: Rational,
    pub scaled: Rational,
}

impl KahlerCheck {
    pub fn holds(&self) -> bool {
        self.with_unit == self.scaled
    }
}

pub fn verify_kahler_scaling(engine: &CorrelatorEngine, d: u32, n: i64) -> Result<KahlerCheck> {
    let with_unit = mirror_sum(engine, d, n, true)?;
    let scaled = mirror_sum(engine, d, n, false)? * int(d as i64);
    Ok(KahlerCheck { with_unit, scaled })
}

/// `d^l S(σ) ∏ 1/d_i`: the total weight a sector `σ ⊢ m` collects in the
/// degree-`d` transformation once every correlator is expanded.
pub fn expanded_sector_coefficient(d: u32, sigma: &Partition) -> Rational {
    let mut c = sigma.symmetry_factor();
    for &p in sigma.parts() {
        c = c * int(d as i64) / int(p as i64);
    }
    c
}
