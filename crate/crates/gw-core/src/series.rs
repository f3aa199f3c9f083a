use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Power series in q kept through q^D. Combining two series keeps the
/// smaller of the two truncation orders.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> QSeries<T> {
    pub fn zero(truncation: u32) -> Self {
        QSeries {
            coeffs: vec![T::zero(); truncation as usize + 1],
        }
    }

    pub fn one(truncation: u32) -> Self {
        Self::constant(T::one(), truncation)
    }

    pub fn constant(c: T, truncation: u32) -> Self {
        Self::monomial(c, 0, truncation)
    }

    /// `c q^d`, which is zero when `d` is past the truncation.
    pub fn monomial(c: T, d: u32, truncation: u32) -> Self {
        let mut s = Self::zero(truncation);
        if d <= truncation {
            s.coeffs[d as usize] = c;
        }
        s
    }

    /// Series with the given coefficients; the truncation is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least q^0");
        QSeries { coeffs }
    }

    pub fn truncation(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of q^d; zero past the truncation.
    pub fn coeff(&self, d: u32) -> T {
        self.coeffs
            .get(d as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, d: u32, c: T) {
        if let Some(slot) = self.coeffs.get_mut(d as usize) {
            *slot = c;
        }
    }

    pub fn add_to_coeff(&mut self, d: u32, c: T) {
        if let Some(slot) = self.coeffs.get_mut(d as usize) {
            *slot = slot.clone() + c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|p| p as u32)
    }

    pub fn truncate(&self, truncation: u32) -> Self {
        let keep = (truncation.min(self.truncation()) + 1) as usize;
        QSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by q^d, same truncation.
    pub fn shift(&self, d: u32) -> Self {
        let mut out = Self::zero(self.truncation());
        for (e, c) in self.coeffs.iter().enumerate() {
            let t = e as u32 + d;
            if t > self.truncation() {
                break;
            }
            out.coeffs[t as usize] = c.clone();
        }
        out
    }

    /// `q d/dq`.
    pub fn theta(&self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| c.clone() * T::from_int(e as i64))
                .collect(),
        }
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let inv0 = T::one() / c0;
        let mut out = vec![T::zero(); n];
        out[0] = inv0.clone();
        for e in 1..n {
            let mut acc = T::zero();
            for j in 1..=e {
                acc = acc + self.coeffs[j].clone() * out[e - j].clone();
            }
            out[e] = -(acc * inv0.clone());
        }
        Some(QSeries { coeffs: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        QSeries {
            coeffs: (0..n)
                .map(|i| f(self.coeffs[i].clone(), other.coeffs[i].clone()))
                .collect(),
        }
    }
}

impl<T: Scalar> Add for &QSeries<T> {
    type Output = QSeries<T>;
    fn add(self, rhs: Self) -> QSeries<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for &QSeries<T> {
    type Output = QSeries<T>;
    fn sub(self, rhs: Self) -> QSeries<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Mul for &QSeries<T> {
    type Output = QSeries<T>;
    fn mul(self, rhs: Self) -> QSeries<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl<T: Scalar> Neg for &QSeries<T> {
    type Output = QSeries<T>;
    fn neg(self) -> QSeries<T> {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for QSeries<T> {
            type Output = QSeries<T>;
            fn $m(self, rhs: Self) -> QSeries<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
