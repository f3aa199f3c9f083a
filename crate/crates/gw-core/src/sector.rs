//! Commuting deformation matrices `C̃_j` and the flat-coordinate structure
//! they induce.
//!
//! `C̃_1` is the truncated connection matrix. For `j >= 2`, `C̃_j` is
//! `S^j + Σ_d X_{j,d} q^d` where `S` is the shift and `X_{j,d}` lives on the
//! diagonal `col = row + j + (k-N)d`. Commuting with `C̃_1` fixes each
//! `X_{j,d}` only up to adding a multiple of `S^{j+(k-N)d}`; the gauge
//! choice is explicit in [`Normalization`].

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gauss_manin::GaussManinSystem;
use crate::linalg::{solve, Solution};
use crate::scalar::int;
use crate::{Matrix, Rational, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Only commutativity with `C̃_1` and the unit entries on the diagonal
    /// `col = row + j`. Reports the leftover freedom as [`Error::NonUnique`].
    CommutantOnly,
    /// Additionally require row 0 of `C̃_j` to be exactly `e_j`, i.e.
    /// `∂ψ_0/∂x^j = ψ_j` for `j >= 2`.
    RowZero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectorMatrices {
    pub n: u32,
    pub k: u32,
    pub truncation: u32,
    /// `C̃_1 … C̃_{N-2}`; index `j - 1`.
    pub matrices: Vec<Matrix>,
}

pub fn build_sector_matrices(system: &GaussManinSystem, normalization: Normalization) -> Result<SectorMatrices> {
    let dim = system.connection.dim();
    let d_max = system.truncation;
    let step = (system.k - system.n) as usize;
    let c1 = &system.connection;
    let shift = Matrix::shift(dim, d_max);

    let mut matrices = vec![c1.clone()];
    for j in 2..dim {
        let mut cj = shift.pow(j as u32);
        for d in 1..=d_max {
            let s = j + step * d as usize;
            if s >= dim {
                break;
            }
            // [C̃_1, C̃_j] at q^d, with X_{j,d} still zero, is the right-hand side.
            let known = c1.commutator(&cj).degree_part(d);
            let unknowns = dim - s;
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            // ([S, X])_{r, r+s+1} = x_{r+1} - x_r
            for r in 0..dim - s - 1 {
                let mut eq = vec![Rational::zero(); unknowns];
                eq[r + 1] = int(1);
                eq[r] = int(-1);
                rows.push(eq);
                rhs.push(-known[r][r + s + 1].clone());
            }
            if normalization == Normalization::RowZero {
                let mut eq = vec![Rational::zero(); unknowns];
                eq[0] = int(1);
                rows.push(eq);
                rhs.push(Rational::zero());
            }
            let x = match solve(rows, rhs, unknowns) {
                Solution::Unique(x) => x,
                Solution::Underdetermined(dimension) => {
                    return Err(Error::NonUnique {
                        sector: j,
                        degree: d,
                        dimension,
                    })
                }
                Solution::Inconsistent => return Err(Error::Inconsistent { sector: j, degree: d }),
            };
            for (r, v) in x.into_iter().enumerate() {
                cj.add_to_coeff(r, r + s, d, v);
            }
        }
        if !c1.commutator(&cj).is_zero() {
            let degree = (1..=d_max)
                .find(|&d| c1.commutator(&cj).degree_part(d).iter().flatten().any(|x| !x.is_zero()))
                .unwrap_or(0);
            return Err(Error::Inconsistent { sector: j, degree });
        }
        matrices.push(cj);
    }
    Ok(SectorMatrices {
        n: system.n,
        k: system.k,
        truncation: d_max,
        matrices,
    })
}

impl SectorMatrices {
    pub fn get(&self, j: usize) -> &Matrix {
        &self.matrices[j - 1]
    }

    /// Every pair commutes through the truncation order.
    pub fn all_commute(&self) -> bool {
        let m = &self.matrices;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i].commutator(&m[j]).is_zero()))
    }

    /// Jacobian `∂t^j/∂x^i = (C̃_i)_0^j`, indices `i, j` in `1..=N-2`
    /// stored at `i-1, j-1`.
    pub fn jacobian(&self) -> Matrix {
        let size = self.matrices.len();
        let mut jac = Matrix::zero(size, self.truncation);
        for i in 0..size {
            for j in 0..size {
                jac.set(i, j, self.matrices[i].get(0, j + 1).clone());
            }
        }
        jac
    }

    /// `C̄_i = Σ_j (∂x^j/∂t^i) C̃_j`.
    pub fn transformed(&self, i: usize) -> Result<Matrix> {
        let inv = self.jacobian().inverse()?;
        let dim = self.matrices[0].dim();
        let mut out = Matrix::zero(dim, self.truncation);
        for j in 0..self.matrices.len() {
            let coeff = inv.get(i - 1, j);
            if coeff.is_zero() {
                continue;
            }
            out = &out + &self.matrices[j].scale_series(coeff);
        }
        Ok(out)
    }

    /// Along `x^j = 0` for `j >= 2`, the flat coordinates are
    /// `t^1 = x^1` and `t^j = ∫ (C̃_1)_0^j dx^1`. Returns `t^j` as a series
    /// in `q = e^{x^1}` for each `j >= 2` that is not identically zero.
    pub fn coordinate_change(&self) -> Result<BTreeMap<usize, Series>> {
        let c1 = &self.matrices[0];
        let mut out = BTreeMap::new();
        for j in 2..c1.dim() {
            let entry = c1.get(0, j);
            if !entry.coeff(0).is_zero() {
                return Err(Error::NotIntegrable {
                    index: j,
                    constant: entry.coeff(0).to_string(),
                });
            }
            if entry.is_zero() {
                continue;
            }
            let mut t = Series::zero(self.truncation);
            for d in 1..=self.truncation {
                t.set_coeff(d, entry.coeff(d) / int(d as i64));
            }
            out.insert(j, t);
        }
        Ok(out)
    }
}

/// `C_{ijm} = (C_i)_j^l η_{lm}` with `η_{lm} = k δ_{l+m, N-2}`.
pub fn lower_index(ci: &Matrix, k: u32, j: usize, m: usize) -> Series {
    let top = ci.dim() - 1;
    if m > top {
        return Series::zero(ci.truncation());
    }
    ci.get(j, top - m).scale(&int(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss_manin::truncated_system;
    use crate::virtual_constants::VirtualConstantTable;

    #[test]
    fn commutant_alone_leaves_freedom() {
        let t = VirtualConstantTable::new(8, 9).unwrap();
        let s = truncated_system(&t, 3).unwrap();
        match build_sector_matrices(&s, Normalization::CommutantOnly) {
            Err(Error::NonUnique { sector, degree, dimension }) => {
                assert_eq!((sector, degree, dimension), (2, 1, 1));
            }
            other => panic!("expected non-uniqueness, got {other:?}"),
        }
    }

    #[test]
    fn row_zero_fixes_the_gauge() {
        let t = VirtualConstantTable::new(8, 9).unwrap();
        let s = truncated_system(&t, 3).unwrap();
        let sm = build_sector_matrices(&s, Normalization::RowZero).unwrap();
        assert!(sm.all_commute());
        for j in 2..=6 {
            for c in 0..7 {
                let want = if c == j { Series::one(3) } else { Series::zero(3) };
                assert_eq!(sm.get(j).get(0, c), &want);
            }
        }
    }
}
