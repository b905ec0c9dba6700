//! Smith normal form over ℤ with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Row transform.
    pub u: IntMatrix,
    /// Diagonal result, `u * a * v`.
    pub d: IntMatrix,
    /// Column transform.
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

/// Computes `U A V = D` with `U`, `V` unimodular and `D` diagonal,
/// non-negative, each entry dividing the next.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for k in 0..m.min(n) {
        loop {
            // smallest nonzero magnitude in the trailing block
            let Some((pi, pj)) = min_pivot(&d, k) else {
                return finish(u, d, v);
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..m {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = d[(i, k)].div_floor(&d[(k, k)]);
                d.add_row_multiple(i, k, &-q.clone());
                u.add_row_multiple(i, k, &-q);
                dirty |= !d[(i, k)].is_zero();
            }
            for j in k + 1..n {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = d[(k, j)].div_floor(&d[(k, k)]);
                d.add_col_multiple(j, k, &-q.clone());
                v.add_col_multiple(j, k, &-q);
                dirty |= !d[(k, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let pivot = d[(k, k)].clone();
            let bad = (k + 1..m).find(|&i| (k + 1..n).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    d.add_row_multiple(k, i, &BigInt::from(1));
                    u.add_row_multiple(k, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    finish(u, d, v)
}

fn finish(mut u: IntMatrix, mut d: IntMatrix, v: IntMatrix) -> SmithForm {
    for k in 0..d.rows().min(d.cols()) {
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { u, d, v }
}

fn min_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(p, _)| p)
}
