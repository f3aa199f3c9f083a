use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::QSeries;

/// Element of the q-difference Weyl algebra, truncated past q^D.
///
/// Terms are written `c q^a θ^j` with the power of q on the left, keyed by
/// `(a, j)`. Zero coefficients are never stored, so two operators are equal
/// exactly when their maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct QOperator<T> {
    terms: BTreeMap<(u32, u32), T>,
    truncation: u32,
}

impl<T: Scalar> QOperator<T> {
    pub fn zero(truncation: u32) -> Self {
        QOperator {
            terms: BTreeMap::new(),
            truncation,
        }
    }

    pub fn identity(truncation: u32) -> Self {
        Self::monomial(T::one(), 0, 0, truncation)
    }

    pub fn theta(truncation: u32) -> Self {
        Self::monomial(T::one(), 0, 1, truncation)
    }

    pub fn monomial(c: T, q: u32, theta: u32, truncation: u32) -> Self {
        let mut op = Self::zero(truncation);
        op.add_term(q, theta, c);
        op
    }

    /// Left multiplication by a series.
    pub fn from_series(s: &QSeries<T>) -> Self {
        let mut op = Self::zero(s.truncation());
        for (a, c) in s.coeffs().iter().enumerate() {
            op.add_term(a as u32, 0, c.clone());
        }
        op
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.terms.iter().map(|(&(a, j), c)| (a, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, theta: u32) -> T {
        self.terms.get(&(q, theta)).cloned().unwrap_or_else(T::zero)
    }

    pub fn max_theta(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Coefficients of `q^a`, as a polynomial in θ (index = power).
    pub fn q_slice(&self, q: u32) -> Vec<T> {
        let mut out = vec![T::zero(); self.max_theta() as usize + 1];
        for (&(a, j), c) in &self.terms {
            if a == q {
                out[j as usize] = c.clone();
            }
        }
        out
    }

    pub fn add_term(&mut self, q: u32, theta: u32, c: T) {
        if q > self.truncation || c.is_zero() {
            return;
        }
        let key = (q, theta);
        let sum = match self.terms.remove(&key) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.truncation);
        for (&(a, j), x) in &self.terms {
            out.add_term(a, j, x.clone() * c.clone());
        }
        out
    }

    pub fn with_truncation(&self, truncation: u32) -> Self {
        let mut out = Self::zero(truncation);
        for (&(a, j), x) in &self.terms {
            out.add_term(a, j, x.clone());
        }
        out
    }

    /// Inverse of `1 + R` where `R` has no `q^0 θ^0` part, as the Neumann
    /// series `Σ (-R)^n`. Every term of `R` must carry a positive power of q
    /// for the series to terminate, so that is required too.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeff(0, 0) != T::one() {
            return Err(Error::NotUnit);
        }
        if self.terms.keys().any(|&(a, j)| a == 0 && j > 0) {
            return Err(Error::NotUnit);
        }
        let mut neg_r = Self::zero(self.truncation);
        for (&(a, j), c) in &self.terms {
            if (a, j) != (0, 0) {
                neg_r.add_term(a, j, -c.clone());
            }
        }
        let mut result = Self::identity(self.truncation);
        let mut power = Self::identity(self.truncation);
        for _ in 0..self.truncation {
            power = &power * &neg_r;
            if power.is_empty() {
                break;
            }
            result = &result + &power;
        }
        Ok(result)
    }
}

fn binomial_row<T: Scalar>(n: u32) -> Vec<T> {
    let mut row = vec![T::one()];
    for i in 0..n {
        let prev = row[i as usize].clone();
        row.push(prev * T::from_int((n - i) as i64) / T::from_int((i + 1) as i64));
    }
    row
}

impl<T: Scalar> Mul for &QOperator<T> {
    type Output = QOperator<T>;

    /// `(q^a θ^i)(q^b θ^j) = q^{a+b} (θ+b)^i θ^j`.
    fn mul(self, rhs: Self) -> QOperator<T> {
        let truncation = self.truncation.min(rhs.truncation);
        let mut out = QOperator::zero(truncation);
        let binoms: Vec<Vec<T>> = (0..=self.max_theta()).map(binomial_row).collect();
        for (&(a, i), x) in &self.terms {
            for (&(b, j), y) in &rhs.terms {
                if a + b > truncation {
                    continue;
                }
                let xy = x.clone() * y.clone();
                let bb = T::from_int(b as i64);
                // (θ+b)^i = Σ_t C(i,t) b^{i-t} θ^t
                let mut bpow = T::one();
                for t in (0..=i).rev() {
                    let c = xy.clone() * binoms[i as usize][t as usize].clone() * bpow.clone();
                    out.add_term(a + b, t + j, c);
                    bpow = bpow * bb.clone();
                    if bpow.is_zero() {
                        break;
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &QOperator<T> {
    type Output = QOperator<T>;
    fn add(self, rhs: Self) -> QOperator<T> {
        let mut out = self.with_truncation(self.truncation.min(rhs.truncation));
        for (&(a, j), c) in &rhs.terms {
            out.add_term(a, j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &QOperator<T> {
    type Output = QOperator<T>;
    fn neg(self) -> QOperator<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Sub for &QOperator<T> {
    type Output = QOperator<T>;
    fn sub(self, rhs: Self) -> QOperator<T> {
        self + &(-rhs)
    }
}
