//! Dense univariate polynomials, lowest degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{Matrix, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `t` itself.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `t - root`.
    pub fn linear_root(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|x| -x.clone()).collect())
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(factors: I) -> Self
    where
        T: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Multiplicity of 0 as a root (0 for the zero polynomial).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out every factor of `t`.
    pub fn strip_zero_roots(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Coefficients reversed with respect to `degree`: `t^degree p(1/t)`.
    pub fn reversed(&self, degree: usize) -> Self {
        assert!(self.coeffs.len() <= degree + 1);
        let mut c = self.coeffs.clone();
        c.resize(degree + 1, T::zero());
        c.reverse();
        Self::new(c)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix<T>) -> Matrix<T> {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(a)
                .expect("square")
                .checked_add(&Matrix::identity(n).scale(c))
                .expect("square");
        }
        acc
    }
}

impl IntPolynomial {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact division by an integer that divides every coefficient.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % d).is_zero());
                    c / d
                })
                .collect(),
        )
    }

    /// Exact polynomial division over the integers; `None` if it is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.to_rational().div_rem(&divisor.to_rational());
        if !r.is_zero() {
            return None;
        }
        q.to_integer()
    }

    /// gcd over ℤ[t]: primitive, with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.to_rational().gcd(&other.to_rational());
        if g.is_zero() {
            return Self::zero();
        }
        let (p, _) = g.to_primitive_integer();
        let content = self.content().gcd(&other.content());
        p.scale(&content)
    }
}

impl RatPolynomial {
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor
            .leading()
            .expect("division by zero polynomial")
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd over ℚ (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(BigRational::one() / l)),
            None => a,
        }
    }

    pub fn to_integer(&self) -> Option<IntPolynomial> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(Polynomial::new(
                self.coeffs.iter().map(|c| c.to_integer()).collect(),
            ))
        } else {
            None
        }
    }

    /// Writes the polynomial as `scale * p` with `p` primitive in ℤ[t] and
    /// positive leading coefficient.
    pub fn to_primitive_integer(&self) -> (IntPolynomial, BigRational) {
        if self.is_zero() {
            return (IntPolynomial::zero(), BigRational::one());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut p = IntPolynomial::new(ints);
        let mut content = p.content();
        if p.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        p = p.div_exact_scalar(&content);
        (p, BigRational::new(content, lcm))
    }
}

/// Formats with ascending powers, e.g. `1 - z - z^2`.
pub fn format_poly<T>(coeffs: &[T], var: &str) -> String
where
    T: fmt::Display + Signed + One + PartialEq,
{
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !unit {
                    let s = mag.to_string();
                    if s.contains('/') {
                        out.push_str(&format!("({s})"));
                    } else {
                        out.push_str(&s);
                    }
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T> fmt::Display for Polynomial<T>
where
    T: fmt::Display + Signed + One + PartialEq,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs, "t"))
    }
}
