//! Characteristic polynomials by Berkowitz's division-free recursion.
//!
//! The recursion only multiplies and adds entries, so it runs unchanged over
//! ℤ and ℚ and never produces intermediate fractions on integer input.

use super::matrix::{Matrix, Ring};
use super::poly::Polynomial;
use crate::error::Result;

/// `det(tI - A)`.
pub fn char_poly<T: Ring>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    let n = a.ensure_square()?;
    // descending coefficients of the leading r x r principal minor
    let mut c: Vec<T> = vec![T::one()];
    for r in 0..n {
        let diag = a[(r, r)].clone();
        // toeplitz column: 1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C
        let mut col = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(-diag);
        let mut v: Vec<T> = (0..r).map(|i| a[(i, r)].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(T::zero(), |acc, j| acc + a[(r, j)].clone() * v[j].clone());
            col.push(-rc);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + a[(i, j)].clone() * v[j].clone()))
                .collect();
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| acc + col[i - j].clone() * c[j].clone())
            })
            .collect();
        c = next;
    }
    c.reverse();
    Ok(Polynomial::new(c))
}

/// Characteristic polynomial with every factor of `t` removed; two matrices
/// have the same nonzero eigenvalues (with multiplicity) iff these agree.
pub fn core_poly<T: Ring>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    Ok(char_poly(a)?.strip_zero_roots())
}

/// `det(I - zA)` as a polynomial in `z`.
pub fn det_one_minus_z<T: Ring>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    let n = a.ensure_square()?;
    Ok(char_poly(a)?.reversed(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{IntMatrix, IntPolynomial};

    #[test]
    fn fibonacci_char_poly() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(
            char_poly(&a).unwrap(),
            IntPolynomial::from_i64(&[-1, -1, 1])
        );
        assert_eq!(
            core_poly(&a).unwrap(),
            IntPolynomial::from_i64(&[-1, -1, 1])
        );
    }

    #[test]
    fn identity_is_power_of_t_minus_one() {
        let p = char_poly(&IntMatrix::identity(3)).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[-1, 3, -3, 1]));
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            char_poly(&IntMatrix::from_i64_rows(&[&[0]])).unwrap(),
            IntPolynomial::from_i64(&[0, 1])
        );
        assert_eq!(
            char_poly(&IntMatrix::zeros(0, 0)).unwrap(),
            IntPolynomial::one()
        );
        let nil = IntMatrix::from_i64_rows(&[&[-1, 1], &[-1, 1]]);
        assert_eq!(core_poly(&nil).unwrap(), IntPolynomial::one());
        let d = IntMatrix::from_i64_rows(&[&[0, 0], &[0, 2]]);
        assert_eq!(core_poly(&d).unwrap(), IntPolynomial::from_i64(&[-2, 1]));
    }

    #[test]
    fn not_square() {
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn det_one_minus_z_of_fibonacci() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(
            det_one_minus_z(&a).unwrap(),
            IntPolynomial::from_i64(&[1, -1, -1])
        );
    }
}
