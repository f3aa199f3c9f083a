//! The truncated Gauss-Manin system and its reduction to flat coordinates.
//!
//! Basis vectors `ψ_0 … ψ_{N-2}` satisfy `θ ψ = C̃_1 ψ` with `θ = q d/dq`.
//! Eliminating `ψ_{N-2}, …, ψ_2` leaves a single operator `F(q, θ)` with
//! `ψ_1 = F ψ_0`; applying `F` row by row gives the connection in the flat
//! coordinate `t`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int};
use crate::virtual_constants::VirtualConstantTable;
use crate::{Matrix, Operator, Rational, Series};

#[derive(Clone, Debug, PartialEq)]
pub struct GaussManinSystem {
    pub n: u32,
    pub k: u32,
    pub truncation: u32,
    /// `C̃_1`, of size `(N-1) x (N-1)`.
    pub connection: Matrix,
}

/// Builds `C̃_1` through `q^D`.
///
/// Row `r = N-2-m` has a 1 just above the diagonal and `L̃^d_m q^d` in
/// column `r + 1 + (k-N)d` for each `d >= 1` with `(k-N)d <= m-1`.
pub fn truncated_system(table: &VirtualConstantTable, truncation: u32) -> Result<GaussManinSystem> {
    let (n, k) = (table.N(), table.k());
    if truncation < 1 {
        return Err(Error::Truncation {
            required: 1,
            available: truncation,
        });
    }
    let dim = (n - 1) as usize;
    let step = (k - n) as usize;
    let mut c = Matrix::zero(dim, truncation);
    for r in 0..dim {
        let m = n as usize - 2 - r;
        if r + 1 < dim {
            c.set(r, r + 1, Series::one(truncation));
        }
        let mut d = 1usize;
        while step * d < m && d <= truncation as usize {
            let col = r + 1 + step * d;
            c.set(r, col, Series::monomial(table.get(d as i64, m as i64), d as u32, truncation));
            d += 1;
        }
    }
    Ok(GaussManinSystem {
        n,
        k,
        truncation,
        connection: c,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlatConnection {
    pub n: u32,
    pub k: u32,
    pub truncation: u32,
    /// `F` with `∂_t = F(q, θ)` on `ψ_0`, i.e. `ψ_1 = F ψ_0`.
    pub flat_derivative: Operator,
    /// Row `r` expresses `∂_t ψ_r` in the basis `ψ_0 … ψ_{N-2}`.
    pub t_connection: Matrix,
}

pub fn eliminate_to_flat(system: &GaussManinSystem) -> Result<FlatConnection> {
    let dim = system.connection.dim();
    let d_max = system.truncation;
    let c = &system.connection;
    let theta = Operator::theta(d_max);

    // ψ_r = chain[r] ψ_s for the current lowest kept index s.
    let mut chain: BTreeMap<usize, Operator> = BTreeMap::new();
    chain.insert(dim - 1, Operator::identity(d_max));
    for s in (1..dim).rev() {
        let r = s - 1;
        // θ ψ_r = ψ_s + Σ_{col > s} c_{r,col}(q) ψ_col = M ψ_s
        let mut m = Operator::identity(d_max);
        for col in s + 1..dim {
            let entry = c.get(r, col);
            if entry.is_zero() {
                continue;
            }
            let term = &Operator::from_series(entry) * &chain[&col];
            m = &m + &term;
        }
        let step = &m.inverse()? * &theta;
        for op in chain.values_mut() {
            *op = &*op * &step;
        }
        chain.insert(r, Operator::identity(d_max));
    }
    let flat = chain.remove(&1).expect("dimension is at least 3");
    let t_connection = apply_to_basis(system, &flat);
    Ok(FlatConnection {
        n: system.n,
        k: system.k,
        truncation: d_max,
        flat_derivative: flat,
        t_connection,
    })
}

/// `θ` on a row of coefficients: `θ(Σ a_j ψ_j) = Σ θ(a_j) ψ_j + a C̃_1`.
fn theta_row(system: &GaussManinSystem, row: &[Series]) -> Vec<Series> {
    let dim = row.len();
    let c = &system.connection;
    let mut out: Vec<Series> = row.iter().map(Series::theta).collect();
    for (j, a) in row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (l, slot) in out.iter_mut().enumerate().take(dim) {
            let cjl = c.get(j, l);
            if !cjl.is_zero() {
                *slot = &*slot + &(a * cjl);
            }
        }
    }
    out
}

/// Matrix whose row `r` is `op` applied to `ψ_r` through the system.
pub fn apply_to_basis(system: &GaussManinSystem, op: &Operator) -> Matrix {
    let dim = system.connection.dim();
    let d_max = system.truncation.min(op.truncation());
    let max_theta = op.max_theta() as usize;
    let mut out = Matrix::zero(dim, d_max);
    for r in 0..dim {
        let mut unit = vec![Series::zero(d_max); dim];
        unit[r] = Series::one(d_max);
        let mut powers = vec![unit];
        for _ in 0..max_theta {
            let next = theta_row(system, powers.last().unwrap());
            powers.push(next);
        }
        for (a, j, coeff) in op.terms() {
            for (l, s) in powers[j as usize].iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let add = s.shift(a).scale(coeff);
                let cur = out.get(r, l).clone();
                out.set(r, l, &cur + &add);
            }
        }
    }
    out
}

/// `F ψ_0` recomputed through the original system must be `ψ_1`.
pub fn check_consistency(system: &GaussManinSystem, flat: &FlatConnection) -> bool {
    let dim = system.connection.dim();
    let m = apply_to_basis(system, &flat.flat_derivative);
    (0..dim).all(|l| {
        let want = if l == 1 { Rational::one() } else { Rational::zero() };
        let s = m.get(0, l);
        s.coeff(0) == want && (1..=s.truncation()).all(|e| s.coeff(e).is_zero())
    })
}

impl FlatConnection {
    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.truncation {
            return Err(Error::Truncation {
                required: d,
                available: self.truncation,
            });
        }
        Ok(())
    }

    /// `w(O_e O_{e^{N-2-m}} O_{e^{m-1-(k-N)d}})_d`, read off row `N-2-m`
    /// of the t-connection and multiplied by `k`.
    pub fn extract_w3(&self, d: u32, m: u32) -> Result<Rational> {
        self.check_degree(d)?;
        if m > self.n - 2 {
            return Err(Error::OutOfRange {
                what: "m",
                index: m as i64,
            });
        }
        let row = (self.n - 2 - m) as usize;
        let col = (self.n - 1 - m + (self.k - self.n) * d) as usize;
        if col > (self.n - 2) as usize {
            return Ok(Rational::zero());
        }
        Ok(self.t_connection.coeff(row, col, d) * int(self.k as i64))
    }

    /// `w(O_e O_{e^a} O_{e^b})_d` for `d >= 1`.
    pub fn three_point(&self, a: u32, b: u32, d: u32) -> Result<Rational> {
        self.check_degree(d)?;
        let top = self.n - 2;
        if a > top || b > top {
            return Ok(Rational::zero());
        }
        let (a, b) = (a.min(b), a.max(b));
        let col = (top - b) as usize;
        Ok(self.t_connection.coeff(a as usize, col, d) * int(self.k as i64))
    }
}

/// Debug form `[{"q": a, "theta": j, "coeff": "num/den"}, ...]`.
pub fn operator_to_json(op: &Operator) -> Value {
    Value::Array(
        op.terms()
            .map(|(a, j, c)| json!({"q": a, "theta": j, "coeff": format_rational(c)}))
            .collect(),
    )
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|r| {
            Value::Array(
                (0..m.dim())
                    .map(|c| {
                        Value::Array(
                            m.get(r, c)
                                .coeffs()
                                .iter()
                                .map(|x| Value::String(format_rational(x)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}
