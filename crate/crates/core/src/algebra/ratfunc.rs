//! Reduced ratios of integer polynomials in `z`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{format_poly, IntPolynomial, RatPolynomial};
use crate::error::{Error, Result};

/// `numerator / denominator` in lowest terms.
///
/// Normal form: no common factor of positive degree, no common integer
/// content, and the denominator's constant term positive (its leading
/// coefficient when the constant term vanishes). Equality of normal forms is
/// equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    /// Builds from rational-coefficient parts by clearing denominators.
    pub fn from_rational_parts(num: &RatPolynomial, den: &RatPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (n, sn) = num.to_primitive_integer();
        let (d, sd) = den.to_primitive_integer();
        // num / den = (sn / sd) * n / d
        let ratio = sn / sd;
        Self::new(n.scale(ratio.numer()), d.scale(ratio.denom()))
    }

    pub fn one() -> Self {
        Self {
            num: IntPolynomial::one(),
            den: IntPolynomial::one(),
        }
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        Self::reduce(p, IntPolynomial::one())
    }

    /// `1 / p`.
    pub fn reciprocal_of(p: IntPolynomial) -> Result<Self> {
        Self::new(IntPolynomial::one(), p)
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn reduce(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: IntPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let g = if g.degree().unwrap_or(0) > 0 {
            let (p, _) = g.to_rational().to_primitive_integer();
            p
        } else {
            IntPolynomial::one()
        };
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        let c0 = den.coeff(0);
        let flip = if c0.is_zero() {
            den.leading().is_some_and(Signed::is_negative)
        } else {
            c0.is_negative()
        };
        if flip {
            let m1 = BigInt::from(-1);
            num = num.scale(&m1);
            den = den.scale(&m1);
        }
        Self { num, den }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPolynomial| {
            let s = format_poly(p.coeffs(), "z");
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one_poly() {
            write!(f, "{}", format_poly(self.num.coeffs(), "z"))
        } else {
            write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
        }
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for IntPolynomial {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cancels_common_factors() {
        // (1 - z^2) / (1 - z) = 1 + z
        let f = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(f, RationalFunction::polynomial(p(&[1, 1])));
        // (2 - 2z) / (4 - 4z^2) = 1 / (2 + 2z)
        let g = RationalFunction::new(p(&[2, -2]), p(&[4, 0, -4])).unwrap();
        assert_eq!(g.numerator(), &p(&[1]));
        assert_eq!(g.denominator(), &p(&[2, 2]));
    }

    #[test]
    fn sign_normalisation() {
        let f = RationalFunction::new(p(&[-1]), p(&[-1, 2])).unwrap();
        assert_eq!(f.numerator(), &p(&[1]));
        assert_eq!(f.denominator(), &p(&[1, -2]));
        assert_eq!(f.to_string(), "1 / (1 - 2z)");
    }

    #[test]
    fn torus_product_is_one() {
        let hom = RationalFunction::new(p(&[1, -1, -1]), p(&[1, 0, -1])).unwrap();
        let signed = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1, -1])).unwrap();
        assert!(hom.mul(&signed).is_one());
        assert_eq!(hom.to_string(), "(1 - z - z^2) / (1 - z^2)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPolynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn rational_parts() {
        let num = p(&[1]).to_rational();
        let den = RatPolynomial::new(vec![
            num_rational::BigRational::new(1.into(), 2.into()),
            num_rational::BigRational::new((-1).into(), 2.into()),
        ]);
        let f = RationalFunction::from_rational_parts(&num, &den).unwrap();
        assert_eq!(f, RationalFunction::new(p(&[2]), p(&[1, -1])).unwrap());
    }
}
