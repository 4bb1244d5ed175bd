//! Periods, exponents, and the direct (naive) freeness scan.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{ExactInt, Exponent};
use crate::spec::FreenessSpec;
use crate::word::Word;

/// A located forbidden factor: the factor `w[end + 1 − length ..= end]`
/// has period `period` and an exponent the spec forbids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub end: usize,
    pub period: usize,
    pub length: usize,
}

impl Witness {
    pub fn start(&self) -> usize {
        self.end + 1 - self.length
    }

    pub fn exponent(&self) -> Exponent<u64> {
        Exponent::of_ratio(self.length, self.period).expect("nonzero witness")
    }

    /// Re-checks every claim the witness makes against `w`.
    pub fn is_valid_for<T: ExactInt>(&self, w: &Word, spec: &FreenessSpec<T>) -> bool {
        self.length >= 1
            && self.length <= self.end + 1
            && self.end < w.len()
            && self.period >= spec.min_period()
            && is_period_of(&w.letters()[self.start()..=self.end], self.period)
            && spec.violates(self.length, self.period)
    }
}

pub(crate) fn is_period_of(letters: &[u8], p: usize) -> bool {
    assert!(p >= 1, "period must be positive");
    letters
        .iter()
        .zip(letters.iter().skip(p))
        .all(|(a, b)| a == b)
}

/// True iff `w[i] = w[i + p]` wherever both sides exist.
///
/// Panics when `p == 0`.
pub fn is_period(w: &Word, p: usize) -> bool {
    is_period_of(w.letters(), p)
}

/// `|w| / p` for a period `p` of `w`.
pub fn exponent_of<T: ExactInt>(w: &Word, p: usize) -> Result<Exponent<T>> {
    if p == 0 || w.is_empty() || !is_period(w, p) {
        return Err(Error::NotAPeriod {
            period: p,
            len: w.len(),
        });
    }
    Exponent::of_ratio(w.len(), p)
}

/// Checks every factor against every period `p ≥ min_period`.
///
/// Returns the witness with the smallest `end`, ties broken by the
/// smallest period; its `length` is the longest such factor ending at
/// `end`. Cubic in `|w|`; meant as a reference, not for search.
pub fn scan<T: ExactInt>(w: &Word, spec: &FreenessSpec<T>) -> Option<Witness> {
    let letters = w.letters();
    for end in 0..letters.len() {
        for period in spec.min_period()..=end {
            for start in 0..=end {
                let length = end + 1 - start;
                if !spec.violates(length, period) {
                    break;
                }
                if is_period_of(&letters[start..=end], period) {
                    return Some(Witness {
                        end,
                        period,
                        length,
                    });
                }
            }
        }
    }
    None
}

/// Convenience wrapper: `scan(w, spec).is_none()`.
pub fn is_free<T: ExactInt>(w: &Word, spec: &FreenessSpec<T>) -> bool {
    scan(w, spec).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::from_pattern(s).unwrap()
    }

    fn spec(s: &str) -> FreenessSpec {
        s.parse().unwrap()
    }

    #[test]
    fn periods() {
        assert!(is_period(&word("tormentor"), 6));
        assert!(!is_period(&word("tormentor"), 5));
        let w = Word::parse(2, "010").unwrap();
        assert!(!is_period(&w, 1));
        assert!(is_period(&w, 2));
        assert!(is_period(&w, 3));
        assert!(is_period(&Word::empty(2).unwrap(), 1));
    }

    #[test]
    #[should_panic]
    fn zero_period_panics() {
        is_period(&word("ab"), 0);
    }

    #[test]
    fn exponents() {
        assert_eq!(
            exponent_of::<u64>(&word("alfalfa"), 3).unwrap().to_string(),
            "7/3"
        );
        assert_eq!(
            exponent_of::<u64>(&word("hotshots"), 4)
                .unwrap()
                .to_string(),
            "2/1"
        );
        assert_eq!(
            exponent_of::<u64>(&word("aaa"), 1).unwrap().to_string(),
            "3/1"
        );
        assert_eq!(
            exponent_of::<u64>(&word("tormentor"), 6)
                .unwrap()
                .to_string(),
            "3/2"
        );
        assert_eq!(
            exponent_of::<u64>(&word("alfalfa"), 2),
            Err(Error::NotAPeriod { period: 2, len: 7 })
        );
        assert!(exponent_of::<u64>(&word("aa"), 0).is_err());
    }

    #[test]
    fn scan_examples() {
        assert_eq!(
            scan(&word("hotshots"), &spec("2/1 @ 1")),
            Some(Witness {
                end: 7,
                period: 4,
                length: 8
            })
        );
        assert_eq!(
            scan(&Word::parse(2, "010").unwrap(), &spec("2/1 @ 1")),
            None
        );
        assert_eq!(
            scan(&Word::parse(2, "0101").unwrap(), &spec("2/1 @ 2")),
            Some(Witness {
                end: 3,
                period: 2,
                length: 4
            })
        );
        assert_eq!(
            scan(&Word::parse(2, "0110").unwrap(), &spec("2/1 @ 2")),
            None
        );
    }

    #[test]
    fn scan_prefers_earliest_end_then_smallest_period() {
        // "0000": period 1 violates at end 1 already.
        let w = Word::parse(2, "0000").unwrap();
        assert_eq!(
            scan(&w, &spec("2 @ 1")),
            Some(Witness {
                end: 1,
                period: 1,
                length: 2
            })
        );
        // With minimum period 2 the same word needs length 4.
        assert_eq!(
            scan(&w, &spec("2 @ 2")),
            Some(Witness {
                end: 3,
                period: 2,
                length: 4
            })
        );
    }

    #[test]
    fn empty_and_single_letters_are_free() {
        let s = spec("5/4 @ 1");
        assert!(is_free(&Word::empty(3).unwrap(), &s));
        for a in 0..3 {
            assert!(is_free(&Word::new(3, vec![a]).unwrap(), &s));
        }
    }

    #[test]
    fn witness_validation() {
        let s = spec("2/1 @ 1");
        let w = word("hotshots");
        let wit = scan(&w, &s).unwrap();
        assert!(wit.is_valid_for(&w, &s));
        assert_eq!(wit.exponent().to_string(), "2/1");
        let bogus = Witness {
            end: 7,
            period: 3,
            length: 8,
        };
        assert!(!bogus.is_valid_for(&w, &s));
    }
}
