//! Exact rational arithmetic used throughout the toolkit.
//!
//! Every payoff, game parameter and region boundary is a [`Rat`], a thin
//! wrapper around an arbitrary-precision rational kept in canonical form
//! (reduced, positive denominator). Comparisons are exact, so region
//! predicates can test boundary points like `a = 1/4` without epsilons.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

/// Error raised when a string cannot be parsed as an exact rational.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds `num / den`. Panics on a zero denominator; use the parser for
    /// untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(value: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rat(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Nearest-integer conversion to `f64`; exact for small rationals, best
    /// effort otherwise.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational square root, when one exists.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let num = self.0.numer();
        let den = self.0.denom();
        let sqrt_num = num.sqrt();
        let sqrt_den = den.sqrt();
        if &(&sqrt_num * &sqrt_num) == num && &(&sqrt_den * &sqrt_den) == den {
            Some(Rat(BigRational::new(sqrt_num, sqrt_den)))
        } else {
            None
        }
    }

    /// Rounds `value` to the nearest dyadic rational with denominator
    /// `2^bits`. Used when a float estimate must be turned back into an
    /// exactly testable point.
    pub fn from_f64_dyadic(value: f64, bits: u32) -> Rat {
        assert!(value.is_finite(), "non-finite value");
        let scale = (value * (2f64.powi(bits as i32))).round();
        let num = BigInt::from(scale as i128);
        let den = BigInt::from(1u8) << bits;
        Rat(BigRational::new(num, den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"n"`, `"n/d"` and exact decimal strings such as `"0.25"`
    /// (parsed as 1/4, never as binary floating point).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(ParseRatError::Empty);
        }
        if let Some((num, den)) = trimmed.split_once('/') {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| ParseRatError::Invalid(text.to_owned()))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| ParseRatError::Invalid(text.to_owned()))?;
            if den.is_zero() {
                return Err(ParseRatError::ZeroDenominator(text.to_owned()));
            }
            return Ok(Rat(BigRational::new(num, den)));
        }
        if let Some((whole, frac)) = trimmed.split_once('.') {
            let negative = whole.starts_with('-');
            let whole_digits = whole.strip_prefix(['-', '+']).unwrap_or(whole);
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRatError::Invalid(text.to_owned()));
            }
            if !whole_digits.is_empty() && !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRatError::Invalid(text.to_owned()));
            }
            let whole_part: BigInt = if whole_digits.is_empty() {
                BigInt::zero()
            } else {
                whole_digits
                    .parse()
                    .map_err(|_| ParseRatError::Invalid(text.to_owned()))?
            };
            let frac_part: BigInt = frac
                .parse()
                .map_err(|_| ParseRatError::Invalid(text.to_owned()))?;
            let den = BigInt::from(10u8).pow(frac.len() as u32);
            let mut num = whole_part * &den + frac_part;
            if negative {
                num = -num;
            }
            return Ok(Rat(BigRational::new(num, den)));
        }
        let num: BigInt = trimmed
            .parse()
            .map_err(|_| ParseRatError::Invalid(text.to_owned()))?;
        Ok(Rat(BigRational::from_integer(num)))
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::int(value)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
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

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!("3/5".parse::<Rat>().unwrap(), Rat::ratio(3, 5));
        assert_eq!("-3/5".parse::<Rat>().unwrap(), Rat::ratio(-3, 5));
        assert_eq!("6/10".parse::<Rat>().unwrap(), Rat::ratio(3, 5));
        assert_eq!("5".parse::<Rat>().unwrap(), Rat::int(5));
        assert_eq!("0.25".parse::<Rat>().unwrap(), Rat::ratio(1, 4));
        assert_eq!("-0.2".parse::<Rat>().unwrap(), Rat::ratio(-1, 5));
        assert_eq!("1.50".parse::<Rat>().unwrap(), Rat::ratio(3, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!("".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
        assert!("one".parse::<Rat>().is_err());
        assert!("1.".parse::<Rat>().is_err());
        assert!("1e-3".parse::<Rat>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["3/5", "-7/3", "4", "0", "-1"] {
            let value: Rat = text.parse().unwrap();
            assert_eq!(value.to_string(), text);
            assert_eq!(value.to_string().parse::<Rat>().unwrap(), value);
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::ratio(1, 3);
        let b = Rat::ratio(1, 6);
        assert_eq!(&a + &b, Rat::ratio(1, 2));
        assert_eq!(&a - &b, Rat::ratio(1, 6));
        assert_eq!(&a * &b, Rat::ratio(1, 18));
        assert_eq!(&a / &b, Rat::int(2));
        assert_eq!(-&a, Rat::ratio(-1, 3));
    }

    #[test]
    fn sqrt_exact_detects_perfect_squares() {
        assert_eq!(Rat::ratio(9, 4).sqrt_exact(), Some(Rat::ratio(3, 2)));
        assert_eq!(Rat::ratio(1, 3).sqrt_exact(), None);
        assert_eq!(Rat::ratio(-1, 4).sqrt_exact(), None);
        assert_eq!(Rat::zero().sqrt_exact(), Some(Rat::zero()));
    }

    #[test]
    fn dyadic_rounding_is_close() {
        let x = 0.2113248654051871;
        let r = Rat::from_f64_dyadic(x, 40);
        assert!((r.to_f64() - x).abs() < 1e-12);
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let x = Rat::ratio(3, 5);
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"3/5\"");
        let back: Rat = serde_json::from_str("\"3/5\"").unwrap();
        assert_eq!(back, x);
    }
}
