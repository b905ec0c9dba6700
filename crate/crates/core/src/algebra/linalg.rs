//! Exact linear algebra over ℚ: row reduction, kernels, images, and the
//! eventual range of an endomorphism.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

type Q = BigRational;

/// Reduced row echelon form and the pivot columns.
pub fn rref(a: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(p) = (row..m.rows()).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = Q::one() / m[(row, col)].clone();
        for j in col..m.cols() {
            let x = m[(row, j)].clone();
            m[(row, j)] = x * inv.clone();
        }
        for i in 0..m.rows() {
            if i != row && !m[(i, col)].is_zero() {
                let f = -m[(i, col)].clone();
                m.add_row_multiple(i, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank(a: &RationalMatrix) -> usize {
    rref(a).1.len()
}

/// Basis of the column space, chosen among the columns of `a`.
pub fn column_basis(a: &RationalMatrix) -> RationalMatrix {
    let (_, pivots) = rref(a);
    let cols: Vec<Vec<Q>> = pivots.iter().map(|&j| a.column(j)).collect();
    RationalMatrix::from_columns(a.rows(), &cols)
}

/// Basis of the kernel, one column per free variable.
pub fn nullspace(a: &RationalMatrix) -> RationalMatrix {
    let (r, pivots) = rref(a);
    let n = a.cols();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let cols: Vec<Vec<Q>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    RationalMatrix::from_columns(n, &cols)
}

/// Solves `basis * x = rhs` for a basis with independent columns.
/// Returns `None` when some column of `rhs` is outside the span.
pub fn solve_in_basis(basis: &RationalMatrix, rhs: &RationalMatrix) -> Option<RationalMatrix> {
    assert_eq!(basis.rows(), rhs.rows());
    let k = basis.cols();
    let aug = hstack(basis, rhs);
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= k) || pivots.len() < k {
        return None;
    }
    let mut x = RationalMatrix::zeros(k, rhs.cols());
    for i in 0..k {
        for j in 0..rhs.cols() {
            x[(i, j)] = r[(i, k + j)].clone();
        }
    }
    Some(x)
}

pub fn hstack(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    assert_eq!(a.rows(), b.rows());
    let mut out = RationalMatrix::zeros(a.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols() {
            out[(i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    out
}

pub fn inverse(a: &RationalMatrix) -> Option<RationalMatrix> {
    let n = a.ensure_square().ok()?;
    solve_in_basis(a, &RationalMatrix::identity(n))
}

/// The subspace `image(T^d)` on which `T` acts invertibly, together with the
/// matrix of `T` there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventualRange {
    /// Columns span `image(T^d)`.
    pub basis: RationalMatrix,
    /// `T * basis = basis * restricted`.
    pub restricted: RationalMatrix,
}

impl EventualRange {
    pub fn dimension(&self) -> usize {
        self.basis.cols()
    }
}

pub fn eventual_range(t: &RationalMatrix) -> Result<EventualRange> {
    let n = t.ensure_square()?;
    // iterate W -> basis(T W) until the dimension stops dropping
    let mut w = RationalMatrix::identity(n);
    loop {
        let next = column_basis(&t.checked_mul(&w)?);
        if next.cols() == w.cols() {
            w = next;
            break;
        }
        w = next;
    }
    let image = t.checked_mul(&w)?;
    let restricted = solve_in_basis(&w, &image)
        .ok_or_else(|| Error::ShapeMismatch("eventual range is not invariant".into()))?;
    Ok(EventualRange {
        basis: w,
        restricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::charpoly::{char_poly, core_poly};
    use crate::algebra::IntMatrix;

    fn q(rows: &[&[i64]]) -> RationalMatrix {
        IntMatrix::from_i64_rows(rows).to_rational()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = nullspace(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.checked_mul(&k).unwrap().is_zero());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn eventual_range_examples() {
        assert_eq!(eventual_range(&q(&[&[0]])).unwrap().dimension(), 0);
        let nil = eventual_range(&q(&[&[-1, 1], &[-1, 1]])).unwrap();
        assert_eq!(nil.dimension(), 0);
        let fib = q(&[&[1, 1], &[1, 0]]);
        let er = eventual_range(&fib).unwrap();
        assert_eq!(er.dimension(), 2);
        assert_eq!(char_poly(&er.restricted).unwrap(), char_poly(&fib).unwrap());
    }

    #[test]
    fn eventual_range_mixed() {
        // [[2, 1], [0, 0]] has eventual range spanned by e1, acting by 2
        let t = q(&[&[2, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let er = eventual_range(&t).unwrap();
        assert_eq!(er.dimension(), 1);
        assert_eq!(er.restricted, q(&[&[2]]));
        assert_eq!(core_poly(&t).unwrap(), char_poly(&er.restricted).unwrap());
    }

    #[test]
    fn solve_rejects_outside_span() {
        let b = q(&[&[1], &[0]]);
        assert!(solve_in_basis(&b, &q(&[&[0], &[1]])).is_none());
        assert_eq!(solve_in_basis(&b, &q(&[&[3], &[0]])).unwrap(), q(&[&[3]]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.checked_mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert!(inverse(&q(&[&[1, 1], &[1, 1]])).is_none());
    }
}
