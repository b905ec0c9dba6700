//! Exact integer and rational algebra: matrices, polynomials, Smith normal
//! form, characteristic polynomials, rational functions and power series.

pub mod charpoly;
pub mod encoding;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod snf;

pub use charpoly::{char_poly, core_poly, det_one_minus_z};
pub use linalg::{eventual_range, EventualRange};
pub use matrix::{IntMatrix, Matrix, RationalMatrix, Ring};
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};
pub use ratfunc::RationalFunction;
pub use series::{exp_of_count_series, series_of_rational, TruncatedSeries};
pub use snf::{smith_normal_form, SmithForm};
