//! JSON encodings: matrices are arrays of rows of decimal strings,
//! polynomials are coefficient arrays with the constant term first.
//!
//! Readers also accept bare JSON integers, and `"p/q"` strings for rationals.
//! Use with `#[serde(with = "...")]`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{IntMatrix, Matrix, RationalMatrix};
use super::poly::IntPolynomial;

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(i) => i.to_string(),
            Scalar::Text(s) => s.trim().to_string(),
        }
    }
}

pub fn parse_int(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("`{s}` is not an integer"))
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == BigInt::from(0) {
                return Err(format!("`{s}` has a zero denominator"));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn matrix_rows<T>(m: &Matrix<T>) -> Vec<Vec<String>>
where
    T: super::matrix::Ring + ToString,
{
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn read_int_matrix<'de, D: Deserializer<'de>>(d: D) -> Result<IntMatrix, D::Error> {
    let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
    let parsed: Result<Vec<Vec<BigInt>>, String> = rows
        .iter()
        .map(|r| r.iter().map(|x| parse_int(&x.text())).collect())
        .collect();
    Matrix::from_rows(parsed.map_err(D::Error::custom)?).map_err(D::Error::custom)
}

fn read_rat_matrix<'de, D: Deserializer<'de>>(d: D) -> Result<RationalMatrix, D::Error> {
    let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
    let parsed: Result<Vec<Vec<BigRational>>, String> = rows
        .iter()
        .map(|r| r.iter().map(|x| parse_rational(&x.text())).collect())
        .collect();
    Matrix::from_rows(parsed.map_err(D::Error::custom)?).map_err(D::Error::custom)
}

pub mod integer {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        n.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        parse_int(&Scalar::deserialize(d)?.text()).map_err(D::Error::custom)
    }
}

pub mod int_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
        matrix_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntMatrix, D::Error> {
        read_int_matrix(d)
    }
}

pub mod rat_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &RationalMatrix, s: S) -> Result<S::Ok, S::Error> {
        matrix_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RationalMatrix, D::Error> {
        read_rat_matrix(d)
    }
}

pub mod int_poly {
    use super::*;

    pub fn serialize<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
        let v = Vec::<Scalar>::deserialize(d)?;
        let c: Result<Vec<BigInt>, String> = v.iter().map(|x| parse_int(&x.text())).collect();
        Ok(IntPolynomial::new(c.map_err(D::Error::custom)?))
    }
}

pub mod rationals {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = v.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<Scalar>::deserialize(d)?;
        v.iter()
            .map(|x| parse_rational(&x.text()).map_err(D::Error::custom))
            .collect()
    }
}

fn parse_degree<E: serde::de::Error>(k: &str) -> Result<i64, E> {
    k.trim()
        .parse::<i64>()
        .map_err(|_| E::custom(format!("degree key `{k}` is not an integer")))
}

/// Degree-string keyed map of integer matrices.
pub mod int_action_map {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<i64, IntMatrix>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), matrix_rows(v))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<i64, IntMatrix>, D::Error> {
        let raw = BTreeMap::<String, Vec<Vec<Scalar>>>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, rows)| {
                let deg = parse_degree::<D::Error>(&k)?;
                let parsed: Result<Vec<Vec<BigInt>>, String> = rows
                    .iter()
                    .map(|r| r.iter().map(|x| parse_int(&x.text())).collect())
                    .collect();
                let m = Matrix::from_rows(parsed.map_err(D::Error::custom)?)
                    .map_err(D::Error::custom)?;
                Ok((deg, m))
            })
            .collect()
    }
}

/// Degree-string keyed map of rational matrices.
pub mod rat_action_map {
    use super::*;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<i64, RationalMatrix>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), matrix_rows(v))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<i64, RationalMatrix>, D::Error> {
        let raw = BTreeMap::<String, Vec<Vec<Scalar>>>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, rows)| {
                let deg = parse_degree::<D::Error>(&k)?;
                let parsed: Result<Vec<Vec<BigRational>>, String> = rows
                    .iter()
                    .map(|r| r.iter().map(|x| parse_rational(&x.text())).collect())
                    .collect();
                let m = Matrix::from_rows(parsed.map_err(D::Error::custom)?)
                    .map_err(D::Error::custom)?;
                Ok((deg, m))
            })
            .collect()
    }
}
