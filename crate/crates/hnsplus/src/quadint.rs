//! Exact arithmetic in the quadratic ring `Z[sqrt(N)]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// An element `p + q*sqrt(N)` with arbitrary-precision `p`, `q`.
///
/// Arithmetic is only defined between values sharing the same radicand;
/// mixing radicands is a programming error and panics.
#[derive(Debug, Clone)]
pub struct QuadraticInteger {
    rational_part: BigInt,
    root_part: BigInt,
    radicand: u64,
}

impl QuadraticInteger {
    pub fn new(rational_part: BigInt, root_part: BigInt, radicand: u64) -> Self {
        assert!(radicand >= 2, "radicand must be at least 2");
        QuadraticInteger {
            rational_part,
            root_part,
            radicand,
        }
    }

    pub fn zero(radicand: u64) -> Self {
        QuadraticInteger::new(BigInt::from(0), BigInt::from(0), radicand)
    }

    pub fn one(radicand: u64) -> Self {
        QuadraticInteger::new(BigInt::from(1), BigInt::from(0), radicand)
    }

    pub fn from_int(v: BigInt, radicand: u64) -> Self {
        QuadraticInteger::new(v, BigInt::from(0), radicand)
    }

    /// `sqrt(N)` itself.
    pub fn sqrt_radicand(radicand: u64) -> Self {
        QuadraticInteger::new(BigInt::from(0), BigInt::from(1), radicand)
    }

    pub fn rational_part(&self) -> &BigInt {
        &self.rational_part
    }

    pub fn root_part(&self) -> &BigInt {
        &self.root_part
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.root_part.is_zero()
    }

    /// Multiplication by `sqrt(N)`: `(p + q*sqrt(N)) * sqrt(N) = qN + p*sqrt(N)`.
    pub fn mul_sqrt_radicand(&self) -> Self {
        QuadraticInteger::new(
            &self.root_part * BigInt::from(self.radicand),
            self.rational_part.clone(),
            self.radicand,
        )
    }

    /// The value as a float, `p + q*sqrt(N)`.
    pub fn to_f64(&self) -> f64 {
        let p = self.rational_part.to_f64().unwrap_or(f64::NAN);
        let q = self.root_part.to_f64().unwrap_or(f64::NAN);
        p + q * (self.radicand as f64).sqrt()
    }

    /// Sign of the value (`-1`, `0`, `1`), decided exactly.
    ///
    /// `p + q*sqrt(N) > 0` iff `p > 0 && q >= 0`, or `p >= 0 && q > 0`, or
    /// the dominant square wins: `p > 0, q < 0, p^2 > q^2 N`, or
    /// `p < 0, q > 0, q^2 N > p^2`.
    pub fn signum(&self) -> i32 {
        let p = &self.rational_part;
        let q = &self.root_part;
        if p.is_zero() && q.is_zero() {
            return 0;
        }
        if !p.is_negative() && !q.is_negative() {
            return 1;
        }
        if !p.is_positive() && !q.is_positive() {
            return -1;
        }
        // opposite signs: compare p^2 against q^2 N
        let p2 = p * p;
        let q2n = q * q * BigInt::from(self.radicand);
        match (p.is_positive(), p2 > q2n) {
            (true, true) => 1,
            (true, false) => -1,
            (false, true) => -1,
            (false, false) => 1,
        }
    }

    fn check_radicand(&self, other: &Self) {
        assert_eq!(
            self.radicand, other.radicand,
            "cannot combine Z[sqrt({})] with Z[sqrt({})]",
            self.radicand, other.radicand
        );
    }
}

/// Values with a zero root part are plain integers and compare equal across
/// radicands.
impl PartialEq for QuadraticInteger {
    fn eq(&self, other: &Self) -> bool {
        self.rational_part == other.rational_part
            && self.root_part == other.root_part
            && (self.root_part.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for QuadraticInteger {}

impl Add for &QuadraticInteger {
    type Output = QuadraticInteger;
    fn add(self, rhs: &QuadraticInteger) -> QuadraticInteger {
        self.check_radicand(rhs);
        QuadraticInteger::new(
            &self.rational_part + &rhs.rational_part,
            &self.root_part + &rhs.root_part,
            self.radicand,
        )
    }
}

impl Sub for &QuadraticInteger {
    type Output = QuadraticInteger;
    fn sub(self, rhs: &QuadraticInteger) -> QuadraticInteger {
        self.check_radicand(rhs);
        QuadraticInteger::new(
            &self.rational_part - &rhs.rational_part,
            &self.root_part - &rhs.root_part,
            self.radicand,
        )
    }
}

impl Mul for &QuadraticInteger {
    type Output = QuadraticInteger;
    fn mul(self, rhs: &QuadraticInteger) -> QuadraticInteger {
        self.check_radicand(rhs);
        let n = BigInt::from(self.radicand);
        QuadraticInteger::new(
            &self.rational_part * &rhs.rational_part + &self.root_part * &rhs.root_part * n,
            &self.rational_part * &rhs.root_part + &self.root_part * &rhs.rational_part,
            self.radicand,
        )
    }
}

impl Neg for &QuadraticInteger {
    type Output = QuadraticInteger;
    fn neg(self) -> QuadraticInteger {
        QuadraticInteger::new(-&self.rational_part, -&self.root_part, self.radicand)
    }
}

impl Add for QuadraticInteger {
    type Output = QuadraticInteger;
    fn add(self, rhs: QuadraticInteger) -> QuadraticInteger {
        &self + &rhs
    }
}

impl Sub for QuadraticInteger {
    type Output = QuadraticInteger;
    fn sub(self, rhs: QuadraticInteger) -> QuadraticInteger {
        &self - &rhs
    }
}

impl Mul for QuadraticInteger {
    type Output = QuadraticInteger;
    fn mul(self, rhs: QuadraticInteger) -> QuadraticInteger {
        &self * &rhs
    }
}

impl Neg for QuadraticInteger {
    type Output = QuadraticInteger;
    fn neg(self) -> QuadraticInteger {
        -&self
    }
}

impl fmt::Display for QuadraticInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root_part.is_zero() {
            return write!(f, "{}", self.rational_part);
        }
        if self.rational_part.is_zero() {
            return write_root(f, &self.root_part, self.radicand, false);
        }
        write!(f, "{}", self.rational_part)?;
        write_root(f, &self.root_part, self.radicand, true)
    }
}

fn write_root(f: &mut fmt::Formatter<'_>, q: &BigInt, n: u64, spaced: bool) -> fmt::Result {
    let mag = q.abs();
    if spaced {
        write!(f, "{}", if q.is_negative() { " - " } else { " + " })?;
    } else if q.is_negative() {
        write!(f, "-")?;
    }
    if mag != BigInt::from(1) {
        write!(f, "{mag}")?;
    }
    write!(f, "sqrt({n})")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(p: i64, q: i64, n: u64) -> QuadraticInteger {
        QuadraticInteger::new(BigInt::from(p), BigInt::from(q), n)
    }

    #[test]
    fn ring_arithmetic() {
        // (1 + sqrt5)(2 - sqrt5) = 2 - sqrt5 + 2sqrt5 - 5 = -3 + sqrt5
        assert_eq!(&qi(1, 1, 5) * &qi(2, -1, 5), qi(-3, 1, 5));
        assert_eq!(&qi(1, 1, 5) + &qi(2, -1, 5), qi(3, 0, 5));
        assert_eq!(&qi(1, 1, 5) - &qi(2, -1, 5), qi(-1, 2, 5));
    }

    #[test]
    #[should_panic(expected = "cannot combine")]
    fn mixing_radicands_panics() {
        let _ = &qi(1, 1, 5) * &qi(1, 1, 7);
    }

    #[test]
    fn integers_compare_across_radicands() {
        assert_eq!(qi(4, 0, 5), qi(4, 0, 7));
        assert_ne!(qi(0, 1, 5), qi(0, 1, 7));
    }

    #[test]
    fn exact_sign() {
        // 9 - 4*sqrt(5): 81 vs 80 -> positive
        assert_eq!(qi(9, -4, 5).signum(), 1);
        // 8 - 4*sqrt(5): 64 vs 80 -> negative
        assert_eq!(qi(8, -4, 5).signum(), -1);
        assert_eq!(qi(-9, 4, 5).signum(), -1);
        assert_eq!(qi(-8, 4, 5).signum(), 1);
        assert_eq!(qi(0, 0, 5).signum(), 0);
    }

    #[test]
    fn float_value() {
        let v = qi(1, 2, 5).to_f64();
        assert!((v - (1.0 + 2.0 * 5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn display() {
        assert_eq!(qi(4, 0, 5).to_string(), "4");
        assert_eq!(qi(0, 3, 5).to_string(), "3sqrt(5)");
        assert_eq!(qi(0, -1, 5).to_string(), "-sqrt(5)");
        assert_eq!(qi(2, -7, 3).to_string(), "2 - 7sqrt(3)");
    }
}
