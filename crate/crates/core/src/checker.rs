//! Incremental freeness checking for left-to-right word growth.
//!
//! For every period `p ≥ ℓ` the checker keeps the length of the longest
//! suffix that has period `p`. Appending a letter `a` extends that length
//! by one when `a` equals the letter `p` positions back and resets it to
//! `p` otherwise. One row of these lengths is stored per prefix length, so
//! popping a letter restores the previous state exactly.

use crate::error::{Error, Result};
use crate::exponent::ExactInt;
use crate::period::Witness;
use crate::spec::FreenessSpec;
use crate::word::{check_alphabet, Letter, Word};

#[inline]
fn row_start(len: usize) -> usize {
    // rows for lengths 1, 2, 3, ... hold 1, 2, 3, ... entries
    (len - 1) * len / 2
}

#[derive(Debug, Clone)]
pub struct IncrementalChecker<T = u64> {
    k: usize,
    spec: FreenessSpec<T>,
    letters: Vec<u8>,
    /// Triangular table; the row of prefix length `n` holds the suffix run
    /// for periods `1..=n` at indices `p - 1`.
    runs: Vec<u32>,
    /// `min_len[p]`: shortest forbidden length for period `p`.
    min_len: Vec<u32>,
}

impl<T: ExactInt> IncrementalChecker<T> {
    pub fn new(k: usize, spec: FreenessSpec<T>) -> Result<Self> {
        check_alphabet(k)?;
        Ok(IncrementalChecker {
            k,
            spec,
            letters: Vec::new(),
            runs: Vec::new(),
            min_len: vec![0],
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn spec(&self) -> &FreenessSpec<T> {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn word(&self) -> Word {
        Word::from_raw(self.k, self.letters.clone())
    }

    fn ensure_thresholds(&mut self, max_period: usize) {
        while self.min_len.len() <= max_period {
            let p = self.min_len.len();
            let len = self.spec.min_violating_len(p);
            self.min_len.push(u32::try_from(len).unwrap_or(u32::MAX));
        }
    }

    /// Appends `a`. Returns the witness with the smallest period among the
    /// forbidden factors ending at the new last position, if any.
    ///
    /// Panics if `a` is outside the alphabet.
    pub fn push(&mut self, a: Letter) -> Option<Witness> {
        let a = a.value();
        assert!(
            (a as usize) < self.k,
            "letter {a} outside alphabet of size {}",
            self.k
        );
        let m = self.letters.len();
        let n = m + 1;
        self.ensure_thresholds(n);
        let new_start = row_start(n);
        if self.runs.len() < new_start + n {
            self.runs.resize(new_start + n, 0);
        }
        let lp = self.spec.min_period();
        let mut witness = None;
        if m > 0 {
            let old_start = row_start(m);
            let (head, tail) = self.runs.split_at_mut(new_start);
            let old = &head[old_start..old_start + m];
            let new = &mut tail[..n];
            for p in lp..=m {
                let run = if self.letters[m - p] == a {
                    old[p - 1] + 1
                } else {
                    p as u32
                };
                new[p - 1] = run;
                if witness.is_none() && run >= self.min_len[p] {
                    witness = Some(Witness {
                        end: m,
                        period: p,
                        length: run as usize,
                    });
                }
            }
        }
        self.runs[new_start + m] = n as u32;
        self.letters.push(a);
        witness
    }

    /// Reports what [`push`](Self::push) would return for `a` without
    /// changing the state.
    #[inline]
    pub fn probe(&self, a: Letter) -> Option<Witness> {
        let a = a.value();
        let m = self.letters.len();
        if m == 0 {
            return None;
        }
        let old_start = row_start(m);
        let old = &self.runs[old_start..old_start + m];
        let lp = self.spec.min_period();
        let max_p = m.min(self.min_len.len().saturating_sub(1));
        for p in lp..=max_p {
            if self.letters[m - p] == a {
                let run = old[p - 1] + 1;
                if run >= self.min_len[p] {
                    return Some(Witness {
                        end: m,
                        period: p,
                        length: run as usize,
                    });
                }
            }
        }
        None
    }

    /// Removes the last letter, restoring the state before the matching push.
    ///
    /// Panics on an empty checker.
    pub fn pop(&mut self) -> Letter {
        Letter(self.letters.pop().expect("pop on empty checker"))
    }

    /// Empties the checker.
    pub fn clear(&mut self) {
        self.letters.clear();
    }

    /// Pushes every letter of `w`, returning the first witness met.
    pub fn push_word(&mut self, w: &Word) -> Result<Option<Witness>> {
        if w.alphabet_size() > self.k {
            if let Some(&bad) = w.letters().iter().find(|&&a| a as usize >= self.k) {
                return Err(Error::LetterOutOfRange {
                    letter: bad,
                    alphabet_size: self.k,
                });
            }
        }
        let mut first = None;
        for a in w.iter() {
            let wit = self.push(a);
            if first.is_none() {
                first = wit;
            }
        }
        Ok(first)
    }

    /// Suffix run lengths of the current state for periods `ℓ..=len`.
    pub fn suffix_runs(&self) -> &[u32] {
        let n = self.letters.len();
        if n == 0 {
            return &[];
        }
        let lp = self.spec.min_period().min(n + 1);
        &self.runs[row_start(n) + lp - 1..row_start(n) + n]
    }
}

/// Two checkers are equal when they hold the same word and the same live
/// per-period state.
impl<T: ExactInt> PartialEq for IncrementalChecker<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.k != other.k || self.spec != other.spec || self.letters != other.letters {
            return false;
        }
        let lp = self.spec.min_period();
        (1..=self.letters.len()).all(|len| {
            let s = row_start(len);
            // periods below ℓ are never tracked
            (lp..=len).all(|p| self.runs[s + p - 1] == other.runs[s + p - 1])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::scan;

    fn checker(k: usize, s: &str) -> IncrementalChecker {
        IncrementalChecker::new(k, s.parse().unwrap()).unwrap()
    }

    #[test]
    fn empty_checker_is_free() {
        let c = checker(2, "2 @ 1");
        assert!(c.is_empty());
        assert_eq!(c.word().len(), 0);
        assert!(IncrementalChecker::<u64>::new(0, "2 @ 1".parse().unwrap()).is_err());
    }

    #[test]
    fn square_detected_on_fourth_push() {
        let mut c = checker(2, "2/1 @ 1");
        assert_eq!(c.push(Letter(0)), None);
        assert_eq!(c.push(Letter(1)), None);
        assert_eq!(c.push(Letter(0)), None);
        assert_eq!(
            c.push(Letter(0)),
            Some(Witness {
                end: 3,
                period: 1,
                length: 2
            })
        );
    }

    #[test]
    fn long_binary_word_with_min_period_four() {
        let w = Word::parse(2, "01110010010111100000110110100100111110000010110110001").unwrap();
        assert_eq!(w.len(), 53);
        let mut c = checker(2, "3/2 @ 4");
        for a in w.iter() {
            assert_eq!(c.push(a), None);
        }
    }

    #[test]
    fn probe_matches_push() {
        let w = Word::parse(3, "0120210121").unwrap();
        let mut c = checker(3, "7/4 @ 1");
        for a in w.iter() {
            for b in 0..3 {
                let probed = c.probe(Letter(b));
                let pushed = c.push(Letter(b));
                assert_eq!(probed, pushed);
                c.pop();
            }
            c.push(a);
        }
    }

    #[test]
    fn pop_restores_state() {
        let mut c = checker(3, "3/2 @ 2");
        let w = Word::parse(3, "0120021122011").unwrap();
        c.push_word(&w).unwrap();
        let snapshot = c.clone();
        c.push(Letter(0));
        c.push(Letter(2));
        c.pop();
        c.pop();
        assert_eq!(c, snapshot);
        assert_eq!(c.suffix_runs(), snapshot.suffix_runs());
    }

    #[test]
    fn agrees_with_scan_on_last_position() {
        let s: FreenessSpec = "5/4 @ 2".parse().unwrap();
        let w = Word::parse(4, "0112330022110332").unwrap();
        let mut c = IncrementalChecker::new(4, s.clone()).unwrap();
        for i in 0..w.len() {
            let got = c.push(w.get(i).unwrap());
            let expect = scan(&w.factor(0, i + 1), &s).filter(|x| x.end == i);
            assert_eq!(got, expect);
        }
    }
}
