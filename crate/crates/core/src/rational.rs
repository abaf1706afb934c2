//! Canonical arbitrary-precision rationals.
//!
//! [`Rat`] wraps `num_rational::BigRational`, which keeps every value in
//! reduced form with positive denominator. The wrapper adds the helpers the
//! number theory layers need: exact square testing, squarefree kernels,
//! valuation at a prime, and a strict string syntax used by the curve
//! database ("-3/4", "17").

use crate::arith;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    /// n/d in lowest terms. Panics if d = 0.
    pub fn new<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Self {
        Rat(BigRational::new(n.into(), d.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            assert!(!self.is_zero(), "0^negative");
        }
        Rat(self.0.pow(e))
    }

    /// Exact square root if the value is a square in Q.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        let n = arith::sqrt_exact(self.numer())?;
        let d = arith::sqrt_exact(self.denom())?;
        Some(Rat(BigRational::new(n, d)))
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }

    /// The squarefree integer m with self = m * (rational square), signed.
    /// Panics on zero.
    pub fn squarefree_kernel(&self) -> BigInt {
        // n/d = n*d / d^2, so the kernel of n*d is the kernel of the value.
        arith::squarefree_kernel(&(self.numer() * self.denom()))
    }

    /// p-adic valuation; `None` for the zero value (valuation infinity).
    pub fn valuation(&self, p: &BigInt) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let count = |mut n: BigInt| -> i64 {
            let mut v = 0;
            while (&n % p).is_zero() {
                n /= p;
                v += 1;
            }
            v
        };
        Some(count(self.numer().clone()) - count(self.denom().clone()))
    }

    pub fn to_f64_approx(&self) -> f64 {
        // Only for ordering heuristics in search routines, never for results.
        let n = self.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let d = self.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n / d
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Accepts an optionally signed integer or `a/b` fraction; no whitespace.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse_int = |t: &str| -> std::result::Result<BigInt, String> {
            if t.is_empty() {
                return Err("empty integer".into());
            }
            t.parse::<BigInt>().map_err(|e| format!("bad integer {t:?}: {e}"))
        };
        match s.split_once('/') {
            None => Ok(Rat::from_int(parse_int(s)?)),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Rat(BigRational::new(parse_int(n)?, d)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl<'a> Div<&'a Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(self.0 / &rhs.0)
    }
}

impl Div<Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rat::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-17", "3/4", "-29/5", "123456789012345678901234567891/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
        assert!(" 1".parse::<Rat>().is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(Rat::new(9, 4).sqrt_exact(), Some(Rat::new(3, 2)));
        assert!(Rat::new(-9, 4).sqrt_exact().is_none());
        assert!(Rat::new(2, 1).sqrt_exact().is_none());
        assert!(Rat::zero().is_square());
    }

    #[test]
    fn kernels_and_valuations() {
        assert_eq!(Rat::new(-8, 9).squarefree_kernel(), BigInt::from(-2));
        assert_eq!(Rat::new(45, 4).squarefree_kernel(), BigInt::from(5));
        let r = Rat::new(45, 4);
        assert_eq!(r.valuation(&BigInt::from(3)), Some(2));
        assert_eq!(r.valuation(&BigInt::from(2)), Some(-2));
        assert_eq!(r.valuation(&BigInt::from(7)), Some(0));
        assert_eq!(Rat::zero().valuation(&BigInt::from(2)), None);
    }
}
