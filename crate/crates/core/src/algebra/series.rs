//! Truncated power series with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Coefficients `c_0 .. c_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    #[serde(with = "super::encoding::rationals")]
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn from_integers(xs: &[i64]) -> Self {
        Self::new(
            xs.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    /// Coefficients of `f'/f` (the logarithmic derivative) through `z^(order-1)`.
    pub fn log_derivative(&self) -> Vec<BigRational> {
        let c = &self.coeffs;
        assert!(!c[0].is_zero(), "log derivative needs a unit constant term");
        let n = self.order();
        let deriv: Vec<BigRational> = (1..=n)
            .map(|i| c[i].clone() * BigRational::from_integer(BigInt::from(i)))
            .collect();
        // g * f = f'
        let mut g: Vec<BigRational> = Vec::with_capacity(n);
        for i in 0..n {
            let acc = (1..=i).fold(deriv[i].clone(), |acc, j| {
                acc - g[i - j].clone() * c[j].clone()
            });
            g.push(acc / c[0].clone());
        }
        g
    }
}

/// Taylor coefficients of `f` at 0 through `z^order`.
pub fn series_of_rational(f: &RationalFunction, order: usize) -> Result<TruncatedSeries> {
    let q: Vec<BigRational> = (0..=order)
        .map(|i| BigRational::from_integer(f.denominator().coeff(i)))
        .collect();
    if q[0].is_zero() {
        return Err(Error::PoleAtZero);
    }
    let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let p_i = BigRational::from_integer(f.numerator().coeff(i));
        let acc = (1..=i).fold(p_i, |acc, j| acc - q[j].clone() * c[i - j].clone());
        c.push(acc / q[0].clone());
    }
    Ok(TruncatedSeries::new(c))
}

/// Truncation of `exp(sum_{m<=order} counts[m-1] / m * z^m)`.
///
/// Uses `n f_n = sum_{k=1}^{n} N_k f_{n-k}`, which follows from
/// `f' = g' f` for `f = exp(g)`.
pub fn exp_of_count_series(counts: &[BigInt], order: usize) -> TruncatedSeries {
    assert!(counts.len() >= order, "need N_1 .. N_order");
    let mut f: Vec<BigRational> = vec![BigRational::from_integer(1.into())];
    for n in 1..=order {
        let s = (1..=n).fold(BigRational::zero(), |acc, k| {
            acc + f[n - k].clone() * BigRational::from_integer(counts[k - 1].clone())
        });
        f.push(s / BigRational::from_integer(BigInt::from(n)));
    }
    TruncatedSeries::new(f)
}
