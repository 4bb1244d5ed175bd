//! Which repetitions are forbidden: threshold exponent, minimum period,
//! and whether the threshold itself is forbidden.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exponent::{ExactInt, Exponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Forbid exponents `≥ α`.
    Geq,
    /// Forbid exponents `> α`.
    Gt,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Geq => "geq",
            Mode::Gt => "gt",
        }
    }
}

/// A set of forbidden repetitions: every factor with a period `p ≥
/// min_period` whose length over `p` reaches `alpha` (strictly exceeds it
/// in [`Mode::Gt`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreenessSpec<T = u64> {
    alpha: Exponent<T>,
    min_period: usize,
    mode: Mode,
}

impl<T: ExactInt> FreenessSpec<T> {
    pub fn new(alpha: Exponent<T>, min_period: usize, mode: Mode) -> Result<Self> {
        if !alpha.is_greater_than_one() {
            return Err(Error::ExponentTooSmall(alpha.to_string()));
        }
        if min_period == 0 {
            return Err(Error::ZeroPeriod);
        }
        Ok(FreenessSpec {
            alpha,
            min_period,
            mode,
        })
    }

    pub fn alpha(&self) -> &Exponent<T> {
        &self.alpha
    }

    pub fn min_period(&self) -> usize {
        self.min_period
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// True when a factor of length `len` with period `period` is forbidden.
    pub fn violates(&self, len: usize, period: usize) -> bool {
        if period < self.min_period {
            return false;
        }
        let ord = self.alpha.cmp_ratio(len, period);
        match self.mode {
            Mode::Geq => ord.is_ge(),
            Mode::Gt => ord.is_gt(),
        }
    }

    /// Shortest forbidden length for a factor with the given period.
    pub fn min_violating_len(&self, period: usize) -> usize {
        self.alpha.min_length(period, self.mode == Mode::Gt)
    }
}

impl<T: ExactInt> fmt::Display for FreenessSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plus = if self.mode == Mode::Gt { "+" } else { "" };
        write!(f, "{}{} @ {}", self.alpha, plus, self.min_period)
    }
}

/// Parses `"NUM/DEN[+] @ L"`, e.g. `"3/2+ @ 2"`. The exponent may also be
/// written as a decimal.
impl<T: ExactInt> FromStr for FreenessSpec<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSpec(s.to_string());
        let (alpha, period) = s.split_once('@').ok_or_else(bad)?;
        let alpha = alpha.trim();
        let (alpha, mode) = match alpha.strip_suffix('+') {
            Some(a) => (a.trim_end(), Mode::Gt),
            None => (alpha, Mode::Geq),
        };
        let alpha: Exponent<T> = alpha.parse()?;
        let period: usize = period.trim().parse().map_err(|_| bad())?;
        FreenessSpec::new(alpha, period, mode)
    }
}
