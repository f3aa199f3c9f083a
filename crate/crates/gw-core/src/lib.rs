//! Exact genus-0 structure constants of degree-k hypersurfaces `M_N^k` in
//! `CP^{N-1}`.
//!
//! The pipeline runs from the virtual structure constants `L̃^{N,k,d}_m`,
//! through the Gauss-Manin system they define, to flat coordinates and the
//! real structure constants `L^{N,k,d}_n`. Everything is computed over `Q`.
//!
//! The algebraic building blocks ([`QSeries`], [`QOperator`],
//! [`SeriesMatrix`]) are generic over any [`Scalar`] field; the pipeline
//! itself is fixed to [`Rational`].

pub mod closed_forms;
pub mod correlator;
pub mod error;
pub mod gauss_manin;
pub mod linalg;
pub mod matrix;
pub mod mirror;
pub mod named;
pub mod operator;
pub mod oracle;
pub mod partition;
pub mod scalar;
pub mod sector;
pub mod series;
pub mod verify;
pub mod virtual_constants;

pub use error::{Error, Result};
pub use matrix::SeriesMatrix;
pub use operator::QOperator;
pub use partition::{partitions, Partition};
pub use scalar::{format_rational, parse_rational, Scalar};
pub use series::QSeries;
pub use virtual_constants::{degree_one_row, VirtualConstantTable};

pub type Rational = num_rational::BigRational;
pub type Series = QSeries<Rational>;
pub type Operator = QOperator<Rational>;
pub type Matrix = SeriesMatrix<Rational>;

/// Floating-point variants for quick numerical exploration.
pub type SeriesF64 = QSeries<f64>;
pub type OperatorF64 = QOperator<f64>;
pub type MatrixF64 = SeriesMatrix<f64>;
