//! Exact rational scalars.
//!
//! Every quantity in the engine is an [`ExactScalar`]: an arbitrary-precision
//! rational number stored in lowest terms with a positive denominator. There
//! is no floating point anywhere; integrality of final counts is asserted at
//! the reporting layer, never assumed mid-computation (intermediate values
//! such as -1 or 1/8 are legitimately non-integral).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(n))
    }

    /// `numer/denom` as a scalar; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactScalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as a big integer, or `None` if it is not integral.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_bigint().and_then(|n| n.to_i64())
    }

    /// Canonical cache spelling, always `numerator/denominator`.
    pub fn cache_repr(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Integers print bare, everything else as `numerator/denominator`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts `n` or `n/d` with optional sign; the result is reduced and the
/// denominator made positive.
impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(numer.trim()).map_err(|_| bad())?;
        let denom = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(ExactScalar(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, rhs: ExactScalar) {
        self.0 -= rhs.0;
    }
}

impl Mul<i64> for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: i64) -> ExactScalar {
        self * ExactScalar::from_int(rhs)
    }
}

impl Mul<i64> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: i64) -> ExactScalar {
        self * &ExactScalar::from_int(rhs)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> ExactScalar {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = ExactScalar::ratio(4, -6);
        assert_eq!(x.cache_repr(), "-2/3");
        assert_eq!(x.to_string(), "-2/3");
        assert!(x.is_negative());
        assert!(!x.is_integer());
    }

    #[test]
    fn integer_display_is_bare() {
        let x = ExactScalar::ratio(14, 7);
        assert_eq!(x.to_string(), "2");
        assert_eq!(x.cache_repr(), "2/1");
        assert_eq!(x.to_i64(), Some(2));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0/1", "-3/8", "14280/1", "1/8"] {
            let v: ExactScalar = s.parse().unwrap();
            assert_eq!(v.cache_repr(), s);
        }
        assert_eq!(
            "12".parse::<ExactScalar>().unwrap(),
            ExactScalar::from_int(12)
        );
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("x".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = ExactScalar::ratio(1, 8);
        let b = ExactScalar::ratio(3, 8);
        assert_eq!(&a + &b, ExactScalar::ratio(1, 2));
        assert_eq!(&a - &b, ExactScalar::ratio(-1, 4));
        assert_eq!(&a * 8, ExactScalar::one());
        assert_eq!(a / b, ExactScalar::ratio(1, 3));
    }
}
