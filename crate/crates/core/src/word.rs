//! Letters and finite words over a small alphabet `{0, …, k−1}`.
//!
//! Text form uses one base-36 digit per letter; since the alphabet is
//! capped at 16 letters only `0`–`9` and `a`–`f` ever appear.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn value(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        char::from_digit(u32::from(self.0), 36).expect("letter below 36")
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c.to_digit(36) {
            Some(d) if (d as usize) < MAX_ALPHABET => Ok(Letter(d as u8)),
            _ => Err(Error::BadCharacter(c)),
        }
    }
}

pub(crate) fn check_alphabet(k: usize) -> Result<()> {
    if (1..=MAX_ALPHABET).contains(&k) {
        Ok(())
    } else {
        Err(Error::AlphabetSize(k))
    }
}

/// A finite word together with the size of the alphabet it lives in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
    alphabet_size: usize,
}

impl Word {
    pub fn empty(alphabet_size: usize) -> Result<Word> {
        Word::new(alphabet_size, Vec::new())
    }

    pub fn new(alphabet_size: usize, letters: Vec<u8>) -> Result<Word> {
        check_alphabet(alphabet_size)?;
        if let Some(&bad) = letters.iter().find(|&&a| a as usize >= alphabet_size) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    /// Parses the base-36 text form. Surrounding whitespace is ignored.
    pub fn parse(alphabet_size: usize, text: &str) -> Result<Word> {
        let letters = text
            .trim()
            .chars()
            .map(|c| Letter::from_char(c).map(Letter::value))
            .collect::<Result<Vec<_>>>()?;
        Word::new(alphabet_size, letters)
    }

    /// Encodes arbitrary text by numbering its distinct characters in order
    /// of first appearance, so `"hotshots"` becomes `01230123`.
    pub fn from_pattern(text: &str) -> Result<Word> {
        let mut seen: Vec<char> = Vec::new();
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let idx = match seen.iter().position(|&s| s == c) {
                Some(i) => i,
                None => {
                    seen.push(c);
                    seen.len() - 1
                }
            };
            letters.push(idx as u8);
        }
        if seen.len() > MAX_ALPHABET {
            return Err(Error::AlphabetSize(seen.len()));
        }
        Word::new(seen.len().max(1), letters)
    }

    pub(crate) fn from_raw(alphabet_size: usize, letters: Vec<u8>) -> Word {
        debug_assert!(letters.iter().all(|&a| (a as usize) < alphabet_size));
        Word {
            letters,
            alphabet_size,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
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

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied().map(Letter)
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied().map(Letter)
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    /// Factor `[start, end)`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word::from_raw(self.alphabet_size, self.letters[start..end].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::from_raw(self.alphabet_size.max(other.alphabet_size), letters)
    }

    /// Applies a letter renaming given as a permutation table.
    pub fn rename(&self, perm: &[u8]) -> Result<Word> {
        let letters = self.letters.iter().map(|&a| perm[a as usize]).collect();
        Word::new(self.alphabet_size, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.letters {
            write!(f, "{}", Letter(a).to_char())?;
        }
        Ok(())
    }
}
