//! Exact rational scalars.
//!
//! Coordinates of multiset points and side lengths of intervals and rectangles
//! are exact rationals, never floats: the multiplicity maps need exact equality
//! of coordinates, which floating point cannot provide. Floats appear only at
//! the geometric-realization boundary.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An exact rational, serialized as `"p/q"` in lowest terms with `q > 0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Rational64);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(Rational64::new(numer, denom)))
    }

    pub const fn zero() -> Self {
        Rat(Rational64::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Rat(Rational64::new_raw(1, 1))
    }

    pub fn integer(value: i64) -> Self {
        Rat(Rational64::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Lossy conversion used only when emitting geometric realizations.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("i64 ratio converts to f64")
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::integer(value)
    }
}

impl From<u64> for Rat {
    fn from(value: u64) -> Self {
        Rat::integer(i64::try_from(value).expect("entry fits in i64"))
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadRational(s.to_string());
        let mut parts = s.splitn(2, '/');
        let numer: i64 = parts
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let denom: i64 = match parts.next() {
            Some(d) => d.trim().parse().map_err(|_| bad())?,
            None => 1,
        };
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(Rational64::new(numer, denom)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_lowest_terms() {
        let r: Rat = "6/4".parse().unwrap();
        assert_eq!(r, Rat::new(3, 2).unwrap());
        assert_eq!(r.to_string(), "3/2");
        let neg: Rat = "2/-4".parse().unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        let int: Rat = "7".parse().unwrap();
        assert_eq!(int.to_string(), "7/1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(Rat::new(1, 0), Err(Error::ZeroDenominator)));
        assert!("3/0".parse::<Rat>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 3).unwrap();
        let b = Rat::new(1, 6).unwrap();
        assert_eq!(a + b, Rat::new(1, 2).unwrap());
        assert_eq!(a - b, b);
        assert_eq!(a * b, Rat::new(1, 18).unwrap());
        assert_eq!(a / b, Rat::integer(2));
        assert_eq!((-a).to_string(), "-1/3");
    }

    #[test]
    fn json_round_trip() {
        let r = Rat::new(-5, 8).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, "\"-5/8\"");
        let back: Rat = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
