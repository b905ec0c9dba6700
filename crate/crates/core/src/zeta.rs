//! Signed dynamical and homological zeta functions as exact rational
//! functions in `z`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::encoding::int_poly;
use crate::algebra::{
    det_one_minus_z, exp_of_count_series, series_of_rational, IntMatrix, IntPolynomial,
    RatPolynomial, RationalFunction, RationalMatrix, TruncatedSeries,
};
use crate::dimension::Parity;
use crate::dynamics::signed_counts;
use crate::error::Result;
use crate::graph::{signed_adjacency, SignedGraph};
use crate::putnam::GradedHomology;

/// `1 / det(I - zA)` for the signed adjacency matrix `A`.
pub fn zeta_sft(g: &SignedGraph) -> RationalFunction {
    let d = det_one_minus_z(&signed_adjacency(g)).expect("adjacency matrices are square");
    RationalFunction::reciprocal_of(d).expect("det(I - zA) has constant term 1")
}

/// `prod_N det(I - zΦ_N)^((-1)^(N+1))`.
fn alternating_product<I>(factors: I) -> Result<RationalFunction>
where
    I: IntoIterator<Item = (i64, RatPolynomial)>,
{
    let mut num = RatPolynomial::one();
    let mut den = RatPolynomial::one();
    for (n, d) in factors {
        if n.rem_euclid(2) == 0 {
            den = den.mul(&d);
        } else {
            num = num.mul(&d);
        }
    }
    RationalFunction::from_rational_parts(&num, &den)
}

pub fn zeta_from_actions(actions: &BTreeMap<i64, RationalMatrix>) -> Result<RationalFunction> {
    let factors: Result<Vec<(i64, RatPolynomial)>> = actions
        .iter()
        .map(|(&n, a)| Ok((n, det_one_minus_z(a)?)))
        .collect();
    alternating_product(factors?)
}

pub fn zeta_from_homology(h: &GradedHomology) -> Result<RationalFunction> {
    zeta_from_actions(&h.actions())
}

/// The homological zeta function of a map on a manifold, from its integer
/// actions on homology.
pub fn zeta_hom_manifold(actions: &BTreeMap<i64, IntMatrix>) -> Result<RationalFunction> {
    let factors: Result<Vec<(i64, RatPolynomial)>> = actions
        .iter()
        .map(|(&n, a)| Ok((n, det_one_minus_z(a)?.to_rational())))
        .collect();
    alternating_product(factors?)
}

/// Even: the two functions agree. Odd: they are reciprocal.
pub fn check_corollary(
    parity: Parity,
    zeta_hom: &RationalFunction,
    zeta_signed: &RationalFunction,
) -> bool {
    match parity {
        Parity::Even => zeta_hom == zeta_signed,
        Parity::Odd => zeta_hom.mul(zeta_signed).is_one(),
    }
}

/// Whether `exp(sum N_n z^n / n)` and the Taylor series of `f` agree through
/// `z^order`, with `counts[n-1] = N_n`.
pub fn verify_series_counts(counts: &[BigInt], f: &RationalFunction, order: usize) -> Result<bool> {
    Ok(exp_of_count_series(counts, order) == series_of_rational(f, order)?)
}

/// `verify_series_counts` with counts enumerated from periodic orbits.
pub fn verify_series(
    g: &SignedGraph,
    f: &RationalFunction,
    order: usize,
    budget: u64,
) -> Result<bool> {
    let counts = signed_counts(g, order, budget)?;
    verify_series_counts(&counts, f, order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub source: String,
    pub function: String,
    #[serde(with = "int_poly")]
    pub numerator: IntPolynomial,
    #[serde(with = "int_poly")]
    pub denominator: IntPolynomial,
    pub series: TruncatedSeries,
    pub verdicts: BTreeMap<String, bool>,
}

impl ZetaReport {
    pub fn new(source: impl Into<String>, f: &RationalFunction, order: usize) -> Result<Self> {
        Ok(Self {
            source: source.into(),
            function: f.to_string(),
            numerator: f.numerator().clone(),
            denominator: f.denominator().clone(),
            series: series_of_rational(f, order)?,
            verdicts: BTreeMap::new(),
        })
    }

    pub fn with_verdict(mut self, name: impl Into<String>, value: bool) -> Self {
        self.verdicts.insert(name.into(), value);
        self
    }

    pub fn function(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.numerator.clone(), self.denominator.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::DEFAULT_ORBIT_BUDGET;

    fn fib() -> SignedGraph {
        SignedGraph::build(
            &["a", "b"],
            &[("x", "a", "a", 1), ("y", "a", "b", 1), ("w", "b", "a", 1)],
        )
        .unwrap()
    }

    fn recip(c: &[i64]) -> RationalFunction {
        RationalFunction::reciprocal_of(IntPolynomial::from_i64(c)).unwrap()
    }

    fn torus(a: &[&[i64]], top: i64) -> BTreeMap<i64, IntMatrix> {
        BTreeMap::from([
            (0, IntMatrix::from_i64_rows(&[&[1]])),
            (1, IntMatrix::from_i64_rows(a)),
            (2, IntMatrix::from_i64_rows(&[&[top]])),
        ])
    }

    #[test]
    fn sft_examples() {
        let s2 = SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap();
        assert!(zeta_sft(&s2).is_one());
        let f2 = SignedGraph::build(&["v"], &[("a", "v", "v", 1), ("b", "v", "v", 1)]).unwrap();
        assert_eq!(zeta_sft(&f2), recip(&[1, -2]));
        assert_eq!(zeta_sft(&fib()), recip(&[1, -1, -1]));
    }

    #[test]
    fn manifold_examples() {
        let t = zeta_hom_manifold(&torus(&[&[1, 1], &[1, 0]], -1)).unwrap();
        let expected = RationalFunction::new(
            IntPolynomial::from_i64(&[1, -1, -1]),
            IntPolynomial::from_i64(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(t, expected);
        let id = BTreeMap::from([(0, IntMatrix::from_i64_rows(&[&[1]]))]);
        assert_eq!(zeta_hom_manifold(&id).unwrap(), recip(&[1, -1]));
        assert!(zeta_hom_manifold(&BTreeMap::new()).unwrap().is_one());
    }

    #[test]
    fn corollary_cases() {
        let one = RationalFunction::one();
        assert!(check_corollary(Parity::Even, &one, &one));
        let g = recip(&[1, -2]);
        assert!(!check_corollary(Parity::Odd, &g, &g));
        assert!(check_corollary(Parity::Odd, &g, &g.inverse().unwrap()));
    }

    #[test]
    fn series_checks() {
        let s2 = SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap();
        assert!(verify_series(&s2, &RationalFunction::one(), 10, DEFAULT_ORBIT_BUDGET).unwrap());
        assert!(verify_series(&fib(), &recip(&[1, -1, -1]), 10, DEFAULT_ORBIT_BUDGET).unwrap());
        assert!(!verify_series(&fib(), &recip(&[1, -2]), 3, DEFAULT_ORBIT_BUDGET).unwrap());
    }

    #[test]
    fn report_round_trip() {
        let r = ZetaReport::new("fib", &zeta_sft(&fib()), 4)
            .unwrap()
            .with_verdict("series", true);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""series":["1","1","2","3","5"]"#));
        let back: ZetaReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.function().unwrap(), zeta_sft(&fib()));
    }
}
