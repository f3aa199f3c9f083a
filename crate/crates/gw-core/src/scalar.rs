use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Zero};

use crate::error::{Error, Result};

/// Coefficient field for series, operators and matrices.
///
/// Anything with field arithmetic and a way in from small integers works:
/// `BigRational` for exact results, `f64` for quick exploration.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("small integers embed in every scalar field")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"num/den"` or a bare integer. The result is reduced; a zero
/// denominator is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |reason: &str| Error::InvalidRational {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = d.parse().map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: `num/den` in lowest terms with positive
/// denominator, or just `num` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}
