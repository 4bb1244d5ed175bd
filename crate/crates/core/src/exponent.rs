//! Exact rational exponents, generic over the integer type.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// Unsigned integer type usable as numerator and denominator of an
/// [`Exponent`]. Implemented for the primitive unsigned types and for
/// `num_bigint::BigUint`.
pub trait ExactInt:
    Integer
    + Unsigned
    + Clone
    + FromPrimitive
    + ToPrimitive
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Unsigned
        + Clone
        + FromPrimitive
        + ToPrimitive
        + Hash
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// A positive rational `num/den` kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent<T = u64> {
    num: T,
    den: T,
}

impl<T: ExactInt> Exponent<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::BadExponent(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Exponent {
            num: num / g.clone(),
            den: den / g,
        })
    }

    /// `len / period`, reduced.
    pub fn of_ratio(len: usize, period: usize) -> Result<Self> {
        let conv = |x: usize| T::from_usize(x).ok_or_else(|| Error::BadExponent(x.to_string()));
        Exponent::new(conv(len)?, conv(period)?)
    }

    pub fn num(&self) -> &T {
        &self.num
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    pub fn is_greater_than_one(&self) -> bool {
        self.num > self.den
    }

    /// Compares `len / period` against this exponent by cross-multiplying.
    pub fn cmp_ratio(&self, len: usize, period: usize) -> Ordering {
        let len = T::from_usize(len).expect("length fits the exponent type");
        let period = T::from_usize(period).expect("period fits the exponent type");
        (len * self.den.clone()).cmp(&(self.num.clone() * period))
    }

    /// Smallest length `L` with `L/period ≥ self` (or `> self` when `strict`).
    /// Saturates at `usize::MAX`.
    pub fn min_length(&self, period: usize, strict: bool) -> usize {
        let p = T::from_usize(period).expect("period fits the exponent type");
        let prod = self.num.clone() * p;
        let len = if strict {
            prod.div_floor(&self.den) + T::one()
        } else {
            prod.div_ceil(&self.den)
        };
        len.to_usize().unwrap_or(usize::MAX)
    }

    /// Converts between integer representations.
    pub fn convert<U: ExactInt>(&self) -> Option<Exponent<U>> {
        let num = U::from_u128(self.num.to_u128()?)?;
        let den = U::from_u128(self.den.to_u128()?)?;
        Exponent::new(num, den).ok()
    }
}

impl<T: ExactInt> PartialOrd for Exponent<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: ExactInt> Ord for Exponent<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.clone() * other.den.clone()).cmp(&(other.num.clone() * self.den.clone()))
    }
}

impl<T: ExactInt> fmt::Display for Exponent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `NUM/DEN`, a bare integer, or a decimal such as `1.2608`, which
/// is converted exactly (`1.2608` is `788/625`).
impl<T: ExactInt> FromStr for Exponent<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadExponent(s.to_string());
        let digits = |t: &str| -> Result<T> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            T::from_str_radix(t, 10).map_err(|_| bad())
        };
        if let Some((n, d)) = s.split_once('/') {
            return Exponent::new(digits(n.trim())?, digits(d.trim())?).map_err(|_| bad());
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int = if int.is_empty() { "0" } else { int };
            let num = digits(&format!("{int}{frac}"))?;
            let den = digits(&format!("1{}", "0".repeat(frac.len())))?;
            return Exponent::new(num, den).map_err(|_| bad());
        }
        Exponent::new(digits(s)?, T::one()).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn reduces_to_lowest_terms() {
        let e = Exponent::<u64>::new(12608, 10000).unwrap();
        assert_eq!((*e.num(), *e.den()), (788, 625));
        assert!(Exponent::<u64>::new(0, 3).is_err());
        assert!(Exponent::<u64>::new(3, 0).is_err());
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!("1.2608".parse::<Exponent>().unwrap().to_string(), "788/625");
        assert_eq!("14/8".parse::<Exponent>().unwrap().to_string(), "7/4");
        assert_eq!("2".parse::<Exponent>().unwrap().to_string(), "2/1");
        assert_eq!(".5".parse::<Exponent>().unwrap().to_string(), "1/2");
        assert_eq!(
            "1.2608".parse::<Exponent<BigUint>>().unwrap().to_string(),
            "788/625"
        );
        for bad in ["", "a/b", "1/", "/2", "1.2.3", "-3/2", "0/4"] {
            assert!(bad.parse::<Exponent>().is_err(), "{bad}");
        }
    }

    #[test]
    fn thresholds_are_exact() {
        let e: Exponent = "3/2".parse().unwrap();
        assert_eq!(e.min_length(4, false), 6);
        assert_eq!(e.min_length(4, true), 7);
        assert_eq!(e.min_length(3, false), 5);
        assert_eq!(e.min_length(3, true), 5);
        let e: Exponent<u32> = "788/625".parse().unwrap();
        assert_eq!(e.min_length(8, false), 11); // 10.0864 rounds up
        assert_eq!(e.cmp_ratio(11, 8), Ordering::Greater);
        assert_eq!(e.cmp_ratio(10, 8), Ordering::Less);
    }

    #[test]
    fn ordering_and_conversion() {
        let a: Exponent = "7/5".parse().unwrap();
        let b: Exponent = "3/2".parse().unwrap();
        assert!(a < b);
        let big: Exponent<BigUint> = b.convert().unwrap();
        assert_eq!(big.to_string(), "3/2");
    }
}
