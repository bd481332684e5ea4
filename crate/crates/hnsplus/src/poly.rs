//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored by ascending degree with a nonzero leading
//! coefficient; the zero polynomial is the empty coefficient list.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::quadint::QuadraticInteger;

/// A polynomial over `Z` in one variable `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients indexed by degree,
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::from(1))
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::from(0), BigInt::from(1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(Zero::zero)
    }

    /// Coefficients by ascending degree, leading coefficient last.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when every monomial degree has the same parity as `parity`
    /// (0 = even, 1 = odd).
    pub fn has_degree_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k % 2 == parity % 2)
    }

    /// Substitutes `X^2` for `X`: `p(X) -> p(X^2)`.
    pub fn compose_x_squared(&self) -> IntPolynomial {
        let mut out = vec![BigInt::from(0); self.coeffs.len().saturating_mul(2)];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if out.len() <= 2 * k {
                    out.resize(2 * k + 1, BigInt::from(0));
                }
                out[2 * k] = c.clone();
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Exact evaluation at `sqrt(n)`, computed in `Z[sqrt(n)]`.
    pub fn eval_sqrt(&self, n: u64) -> QuadraticInteger {
        let mut acc = QuadraticInteger::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_sqrt_radicand() + QuadraticInteger::from_int(c.clone(), n);
        }
        acc
    }

    /// Floating-point evaluation by Horner's rule.
    ///
    /// Coefficients are converted to `f64` individually, so results lose
    /// precision once coefficients exceed 2^53; the exact evaluators should
    /// be preferred whenever exactness matters.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders like `X^4 - 3X^2 + 1`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for BigInt {
    fn is_one(&self) -> bool {
        *self == BigInt::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        let q = p(&[1, 0, 0]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(p(&[0, 0]), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 2]); // 1 + 2X
        let b = p(&[-1, 1]); // -1 + X
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!(&a - &b, p(&[2, 1]));
        assert_eq!(&a * &b, p(&[-1, -1, 2]));
        assert_eq!(&a * &IntPolynomial::zero(), IntPolynomial::zero());
    }

    #[test]
    fn compose_x_squared_reindexes() {
        // X^2 - 1 -> X^4 - 1
        let q = p(&[-1, 0, 1]).compose_x_squared();
        assert_eq!(q, p(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn eval_sqrt_matches_hand_value() {
        // X^3 - 2X at sqrt(5): 5*sqrt5 - 2*sqrt5 = 3*sqrt5
        let q = p(&[0, -2, 0, 1]);
        let v = q.eval_sqrt(5);
        assert_eq!(v, QuadraticInteger::new(BigInt::from(0), BigInt::from(3), 5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, -3, 0, 0, 1]).to_string(), "X^4 - 3X + 1");
        assert_eq!(p(&[0, 1]).to_string(), "X");
        assert_eq!(p(&[-1, -1]).to_string(), "-X - 1");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[7]).to_string(), "7");
    }
}
