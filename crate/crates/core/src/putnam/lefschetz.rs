//! The signed Lefschetz identity on rationalized homology.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    orbit_sign, periodic_points_with_budget, PeriodicPoint, DEFAULT_ORBIT_BUDGET,
};
use crate::error::{Error, Result};

use super::fiber::fiber_graph;
use super::homology::{homology, GradedHomology};
use super::presentation::SuPairPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzRow {
    pub n: usize,
    #[serde(with = "crate::algebra::encoding::integer")]
    pub lhs: BigInt,
    #[serde(with = "crate::algebra::encoding::integer")]
    pub rhs: BigInt,
    pub equal: bool,
}

/// `sum_N (-1)^N tr(Φ_N^n)`.
pub fn lefschetz_number(h: &GradedHomology, n: usize) -> Result<BigInt> {
    let mut total = BigRational::zero();
    for (&deg, d) in &h.degrees {
        let t = d.action.pow(n as u32)?.trace()?;
        if deg.rem_euclid(2) == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    if !total.denom().is_one() {
        return Err(Error::NonIntegralTrace(total.to_string()));
    }
    Ok(total.to_integer())
}

/// Signed count of period-`n` points of the `Y` coordinate, taken from
/// closed paths of `G_{0,0}` projected to `H`.
pub fn signed_fixed_points(p: &SuPairPresentation, n: usize, budget: u64) -> Result<BigInt> {
    let f = fiber_graph(p, 0, 0)?;
    let h = p.y_graph();
    let projected: BTreeSet<Vec<usize>> = periodic_points_with_budget(&f.graph, n, budget)?
        .iter()
        .map(|x| x.edges().iter().map(|&e| f.tuples[e].ys[0]).collect())
        .collect();
    let mut total = BigInt::zero();
    for edges in projected {
        let point = PeriodicPoint::new(h, edges).expect("projection of a closed path is closed");
        total += orbit_sign(h, &point);
    }
    Ok(total)
}

pub fn lefschetz_check(p: &SuPairPresentation, n: usize) -> Result<LefschetzRow> {
    Ok(lefschetz_table(p, n, DEFAULT_ORBIT_BUDGET)?
        .pop()
        .expect("n >= 1"))
}

/// Rows for `1 <= n <= n_max`, computing homology once.
pub fn lefschetz_table(
    p: &SuPairPresentation,
    n_max: usize,
    budget: u64,
) -> Result<Vec<LefschetzRow>> {
    if n_max == 0 {
        return Err(Error::BadPeriod(0));
    }
    lefschetz_rows(p, &homology(p)?, n_max, budget)
}

/// Rows for `1 <= n <= n_max` from already computed homology of `p`.
pub fn lefschetz_rows(
    p: &SuPairPresentation,
    h: &GradedHomology,
    n_max: usize,
    budget: u64,
) -> Result<Vec<LefschetzRow>> {
    (1..=n_max)
        .map(|n| {
            let lhs = lefschetz_number(h, n)?;
            let rhs = signed_fixed_points(p, n, budget)?;
            Ok(LefschetzRow {
                n,
                equal: lhs == rhs,
                lhs,
                rhs,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedGraph;
    use crate::putnam::presentation::{diagonal_pair, two_block_pair};

    fn rows(p: &SuPairPresentation, n: usize) -> Vec<(i64, i64)> {
        lefschetz_table(p, n, DEFAULT_ORBIT_BUDGET)
            .unwrap()
            .iter()
            .map(|r| {
                (
                    i64::try_from(&r.lhs).unwrap(),
                    i64::try_from(&r.rhs).unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn fibonacci_rows() {
        let g = SignedGraph::build(
            &["a", "b"],
            &[("x", "a", "a", 1), ("y", "a", "b", 1), ("w", "b", "a", 1)],
        )
        .unwrap();
        assert_eq!(
            rows(&diagonal_pair(&g), 4),
            [(1, 1), (3, 3), (4, 4), (7, 7)]
        );
        assert_eq!(
            rows(&two_block_pair(&g).unwrap(), 4),
            [(1, 1), (3, 3), (4, 4), (7, 7)]
        );
    }

    #[test]
    fn signed_two_shift_rows() {
        let g = SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap();
        assert!(rows(&diagonal_pair(&g), 6).iter().all(|&r| r == (0, 0)));
        assert!(rows(&two_block_pair(&g).unwrap(), 6)
            .iter()
            .all(|&r| r == (0, 0)));
    }

    #[test]
    fn full_two_shift_fifth_row() {
        let g = SignedGraph::build(&["v"], &[("a", "v", "v", 1), ("b", "v", "v", 1)]).unwrap();
        let r = lefschetz_check(&diagonal_pair(&g), 5).unwrap();
        assert_eq!(
            (r.n, r.lhs, r.rhs, r.equal),
            (5, 32.into(), 32.into(), true)
        );
    }

    #[test]
    fn mixed_sign_graph() {
        let g = SignedGraph::build(
            &["a", "b"],
            &[
                ("p", "a", "a", -1),
                ("q", "a", "b", 1),
                ("r", "b", "a", -1),
                ("s", "b", "b", 1),
            ],
        )
        .unwrap();
        for p in [diagonal_pair(&g), two_block_pair(&g).unwrap()] {
            assert!(lefschetz_table(&p, 6, DEFAULT_ORBIT_BUDGET)
                .unwrap()
                .iter()
                .all(|r| r.equal));
        }
    }
}
