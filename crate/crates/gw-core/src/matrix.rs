use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::QSeries;

/// Square matrix of truncated q-series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesMatrix<T> {
    dim: usize,
    truncation: u32,
    entries: Vec<QSeries<T>>,
}

impl<T: Scalar> SeriesMatrix<T> {
    pub fn zero(dim: usize, truncation: u32) -> Self {
        SeriesMatrix {
            dim,
            truncation,
            entries: vec![QSeries::zero(truncation); dim * dim],
        }
    }

    pub fn identity(dim: usize, truncation: u32) -> Self {
        let mut m = Self::zero(dim, truncation);
        for i in 0..dim {
            m.set(i, i, QSeries::one(truncation));
        }
        m
    }

    /// Matrix with ones on the superdiagonal `col = row + 1`.
    pub fn shift(dim: usize, truncation: u32) -> Self {
        let mut m = Self::zero(dim, truncation);
        for i in 0..dim.saturating_sub(1) {
            m.set(i, i + 1, QSeries::one(truncation));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn get(&self, r: usize, c: usize) -> &QSeries<T> {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: QSeries<T>) {
        self.entries[r * self.dim + c] = s.truncate(self.truncation);
    }

    pub fn coeff(&self, r: usize, c: usize, d: u32) -> T {
        self.get(r, c).coeff(d)
    }

    pub fn add_to_coeff(&mut self, r: usize, c: usize, d: u32, v: T) {
        self.entries[r * self.dim + c].add_to_coeff(d, v);
    }

    pub fn row(&self, r: usize) -> &[QSeries<T>] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn scale(&self, c: &T) -> Self {
        SeriesMatrix {
            dim: self.dim,
            truncation: self.truncation,
            entries: self.entries.iter().map(|s| s.scale(c)).collect(),
        }
    }

    pub fn scale_series(&self, s: &QSeries<T>) -> Self {
        SeriesMatrix {
            dim: self.dim,
            truncation: self.truncation.min(s.truncation()),
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| s.is_zero())
    }

    /// Coefficient matrix of q^d.
    pub fn degree_part(&self, d: u32) -> Vec<Vec<T>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.coeff(r, c, d)).collect())
            .collect()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::identity(self.dim, self.truncation);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Inverse of a matrix whose q^0 part is the identity.
    pub fn inverse(&self) -> Result<Self> {
        let id = Self::identity(self.dim, self.truncation);
        let mut nilp = self - &id;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if !nilp.coeff(r, c, 0).is_zero() {
                    return Err(Error::NotUnit);
                }
            }
        }
        nilp = nilp.scale(&-T::one());
        let mut result = id.clone();
        let mut power = id;
        for _ in 0..self.truncation {
            power = &power * &nilp;
            result = &result + &power;
        }
        Ok(result)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&QSeries<T>, &QSeries<T>) -> QSeries<T>) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SeriesMatrix {
            dim: self.dim,
            truncation: self.truncation.min(other.truncation),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl<T: Scalar> Add for &SeriesMatrix<T> {
    type Output = SeriesMatrix<T>;
    fn add(self, rhs: Self) -> SeriesMatrix<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for &SeriesMatrix<T> {
    type Output = SeriesMatrix<T>;
    fn sub(self, rhs: Self) -> SeriesMatrix<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Mul for &SeriesMatrix<T> {
    type Output = SeriesMatrix<T>;
    fn mul(self, rhs: Self) -> SeriesMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let truncation = self.truncation.min(rhs.truncation);
        let mut out = SeriesMatrix::zero(n, truncation);
        for r in 0..n {
            for m in 0..n {
                let a = self.get(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(m, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * n + c;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }
}
