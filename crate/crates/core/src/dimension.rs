//! Signed dimension groups and shift equivalence.
//!
//! The rationalized inductive limit of `(ℤ[paths], γ^s)` is the eventual range
//! of the transfer matrix with `γ^s` acting invertibly, so it is determined by
//! its dimension and the core polynomial of the transfer matrix. The
//! Bowen–Franks divisors give an integral fingerprint alongside.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::encoding::{int_matrix, int_poly};
use crate::algebra::{core_poly, eventual_range, smith_normal_form, IntMatrix, IntPolynomial};
use crate::algebra::{Matrix, RatPolynomial, RationalMatrix};
use crate::error::{Error, Result};
use crate::graph::{transfer_on_paths, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionGroupData {
    pub block: usize,
    #[serde(with = "int_matrix")]
    pub transfer: IntMatrix,
    pub dimension: usize,
    #[serde(with = "int_poly")]
    pub core_poly: IntPolynomial,
    pub bowen_franks: Vec<String>,
}

pub fn signed_dimension_group(g: &SignedGraph, block: usize) -> Result<DimensionGroupData> {
    let transfer = transfer_on_paths(g, block);
    let er = eventual_range(&transfer.to_rational())?;
    let core = core_poly(&transfer)?;
    debug_assert_eq!(core.degree(), Some(er.dimension()));
    let bowen_franks = bowen_franks(&transfer)?
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(DimensionGroupData {
        block,
        transfer,
        dimension: er.dimension(),
        core_poly: core,
        bowen_franks,
    })
}

/// Elementary divisors of `I - A`, so that the group is `⊕ ℤ/d_i`.
pub fn bowen_franks(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = a.ensure_square()?;
    let m = IntMatrix::identity(n).checked_sub(a)?;
    Ok(smith_normal_form(&m).divisors())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftEquivalenceCertificate {
    #[serde(rename = "A", with = "int_matrix")]
    pub a: IntMatrix,
    #[serde(rename = "B", with = "int_matrix")]
    pub b: IntMatrix,
    #[serde(rename = "R", with = "int_matrix")]
    pub r: IntMatrix,
    #[serde(rename = "S", with = "int_matrix")]
    pub s: IntMatrix,
    pub lag: u32,
}

impl ShiftEquivalenceCertificate {
    fn check_shapes(&self) -> Result<()> {
        let n = self.a.ensure_square()?;
        let m = self.b.ensure_square()?;
        let shape = |x: &IntMatrix| (x.rows(), x.cols());
        if shape(&self.r) != (n, m) || shape(&self.s) != (m, n) {
            return Err(Error::ShapeMismatch(format!(
                "A is {n}x{n} and B is {m}x{m}, so R must be {n}x{m} and S {m}x{n}; got R {}x{} and S {}x{}",
                self.r.rows(),
                self.r.cols(),
                self.s.rows(),
                self.s.cols()
            )));
        }
        if self.lag < 1 {
            return Err(Error::BadLag);
        }
        Ok(())
    }
}

/// `AR = RB`, `SA = BS`, `RS = A^lag`, `SR = B^lag`.
pub fn verify_shift_equivalence(c: &ShiftEquivalenceCertificate) -> Result<bool> {
    c.check_shapes()?;
    let ok = c.a.checked_mul(&c.r)? == c.r.checked_mul(&c.b)?
        && c.s.checked_mul(&c.a)? == c.b.checked_mul(&c.s)?
        && c.r.checked_mul(&c.s)? == c.a.pow(c.lag)?
        && c.s.checked_mul(&c.r)? == c.b.pow(c.lag)?;
    if ok {
        assert_eq!(
            core_poly(&c.a)?,
            core_poly(&c.b)?,
            "shift equivalent matrices must share their nonzero spectrum"
        );
    }
    Ok(ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::Parse(format!(
                "parity must be `even` or `odd`, got `{s}`"
            ))),
        }
    }
}

/// The two direct sums compared for a given parity of the unstable rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectraComparison {
    pub parity: Parity,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub equal: bool,
}

/// Direct sum over the degrees of the given parity.
fn parity_sum(actions: &BTreeMap<i64, RationalMatrix>, even: bool) -> Result<RationalMatrix> {
    let blocks: Vec<&RationalMatrix> = actions
        .iter()
        .filter(|(d, _)| (*d % 2 == 0) == even)
        .map(|(_, m)| m)
        .collect();
    for b in &blocks {
        b.ensure_square()?;
    }
    Ok(Matrix::direct_sum(blocks))
}

/// Compares `Φ_even ⊕ f_odd` with `Φ_odd ⊕ f_even` (even parity) or
/// `Φ_even ⊕ f_even` with `Φ_odd ⊕ f_odd` (odd parity) by core polynomial,
/// where `Φ` are the homology actions and `f` the manifold actions.
pub fn compare_even_odd(
    parity: Parity,
    homology: &BTreeMap<i64, RationalMatrix>,
    manifold: &BTreeMap<i64, IntMatrix>,
) -> Result<SpectraComparison> {
    let manifold: BTreeMap<i64, RationalMatrix> = manifold
        .iter()
        .map(|(d, m)| (*d, m.to_rational()))
        .collect();
    let (phi_even, phi_odd) = (parity_sum(homology, true)?, parity_sum(homology, false)?);
    let (f_even, f_odd) = (parity_sum(&manifold, true)?, parity_sum(&manifold, false)?);
    let (left, right) = match parity {
        Parity::Even => (
            Matrix::direct_sum([&phi_even, &f_odd]),
            Matrix::direct_sum([&phi_odd, &f_even]),
        ),
        Parity::Odd => (
            Matrix::direct_sum([&phi_even, &f_even]),
            Matrix::direct_sum([&phi_odd, &f_odd]),
        ),
    };
    let (pl, pr) = (core_poly(&left)?, core_poly(&right)?);
    Ok(SpectraComparison {
        parity,
        left: poly_strings(&pl),
        right: poly_strings(&pr),
        equal: pl == pr,
    })
}

fn poly_strings(p: &RatPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}
