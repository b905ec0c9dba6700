//! Brute-force periodic orbits of edge shifts.
//!
//! Period-`n` points of the edge shift correspond to closed edge sequences of
//! length `n`. They are enumerated by depth-first search and never derived
//! from matrix powers, so the trace formulas elsewhere have an independent
//! check.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{signed_adjacency, Sign, SignedGraph};

pub const DEFAULT_ORBIT_BUDGET: u64 = 1_000_000;

/// A closed path `e_0 .. e_{n-1}` with `t(e_{n-1}) = i(e_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicPoint {
    edges: Vec<usize>,
}

impl PeriodicPoint {
    pub fn new(g: &SignedGraph, edges: Vec<usize>) -> Option<Self> {
        if edges.is_empty() {
            return None;
        }
        let closed = edges
            .iter()
            .zip(edges.iter().cycle().skip(1))
            .all(|(&a, &b)| g.edge(a).dst == g.edge(b).src);
        closed.then_some(Self { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn period(&self) -> usize {
        self.edges.len()
    }

    /// The image under the shift: rotate left by one.
    pub fn shifted(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.rotate_left(1);
        Self { edges }
    }

    pub fn label(&self, g: &SignedGraph) -> String {
        self.edges
            .iter()
            .map(|&e| g.edge(e).id.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Product of the signs along the orbit segment of length `n`.
pub fn orbit_sign(g: &SignedGraph, p: &PeriodicPoint) -> i64 {
    p.edges
        .iter()
        .fold(Sign::Plus, |acc, &e| acc * g.edge(e).sign)
        .value()
}

/// Number of period-`n` points, counted with the unsigned adjacency matrix.
/// Only used to refuse oversized enumerations.
fn unsigned_count(g: &SignedGraph, n: usize) -> BigInt {
    let a = signed_adjacency(&g.unsigned());
    a.pow(n as u32).and_then(|p| p.trace()).unwrap_or_default()
}

pub fn periodic_points(g: &SignedGraph, n: usize) -> Result<Vec<PeriodicPoint>> {
    periodic_points_with_budget(g, n, DEFAULT_ORBIT_BUDGET)
}

pub fn periodic_points_with_budget(
    g: &SignedGraph,
    n: usize,
    budget: u64,
) -> Result<Vec<PeriodicPoint>> {
    if n < 1 {
        return Err(Error::BadPeriod(n));
    }
    let count = unsigned_count(g, n);
    if count > BigInt::from(budget) {
        return Err(Error::OrbitBudgetExceeded {
            period: n,
            count: count.to_string(),
            budget,
        });
    }
    let out = g.out_edges();
    let mut points = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut stack = Vec::with_capacity(n);
    for e in 0..g.edges().len() {
        stack.push(e);
        close_paths(g, &out, n, &mut stack, &mut points);
        stack.pop();
    }
    Ok(points)
}

fn close_paths(
    g: &SignedGraph,
    out: &[Vec<usize>],
    n: usize,
    stack: &mut Vec<usize>,
    points: &mut Vec<PeriodicPoint>,
) {
    let last = g.edge(*stack.last().unwrap()).dst;
    if stack.len() == n {
        if last == g.edge(stack[0]).src {
            points.push(PeriodicPoint {
                edges: stack.clone(),
            });
        }
        return;
    }
    for &e in &out[last] {
        stack.push(e);
        close_paths(g, out, n, stack, points);
        stack.pop();
    }
}

/// `N_n = sum of orbit signs over Per(n)`, by enumeration.
pub fn signed_count(g: &SignedGraph, n: usize) -> Result<BigInt> {
    signed_count_with_budget(g, n, DEFAULT_ORBIT_BUDGET)
}

pub fn signed_count_with_budget(g: &SignedGraph, n: usize, budget: u64) -> Result<BigInt> {
    let total: i64 = periodic_points_with_budget(g, n, budget)?
        .iter()
        .map(|p| orbit_sign(g, p))
        .sum();
    Ok(BigInt::from(total))
}

/// `N_1 .. N_order`.
pub fn signed_counts(g: &SignedGraph, order: usize, budget: u64) -> Result<Vec<BigInt>> {
    (1..=order)
        .map(|n| signed_count_with_budget(g, n, budget))
        .collect()
}

/// Number of period-`n` points of the automorphism of ℝ²/ℤ² induced by `a`:
/// `|det(A^n - I)|`, the index of `(A^n - I)ℤ²` in ℤ².
pub fn toral_fixed_point_count(a: &IntMatrix, n: usize) -> Result<BigInt> {
    if (a.rows(), a.cols()) != (2, 2) {
        return Err(Error::ShapeMismatch(format!(
            "toral automorphism needs a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if n < 1 {
        return Err(Error::BadPeriod(n));
    }
    let det = a.determinant()?;
    if det.abs() != BigInt::from(1) {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let m = a.pow(n as u32)?.checked_sub(&IntMatrix::identity(2))?;
    let d = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
    if d.is_zero() {
        return Err(Error::DegeneratePeriod { period: n });
    }
    Ok(d.abs())
}
