//! Resumable snapshots of a sequential tree exploration.
//!
//! File layout: the header line `RTCKPT 1`, then one JSON object.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExactInt;
use crate::spec::FreenessSpec;
use crate::word::Word;

use super::walk::Counters;

pub const CHECKPOINT_HEADER: &str = "RTCKPT 1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub k: usize,
    pub alpha: String,
    pub mode: String,
    pub min_period: usize,
    /// Current DFS path (a free word starting with `0`).
    pub path: String,
    /// Next child letter to try below `path`.
    pub next_letter: u8,
    pub internal: u64,
    pub leaves: u64,
    pub nodes_visited: u64,
    pub max_len: usize,
    pub max_count: u64,
    pub lex_least: String,
}

impl Checkpoint {
    pub(crate) fn capture<T: ExactInt>(
        k: usize,
        spec: &FreenessSpec<T>,
        path: &[u8],
        next_letter: u8,
        counters: &Counters,
    ) -> Self {
        Checkpoint {
            k,
            alpha: spec.alpha().to_string(),
            mode: spec.mode().as_str().to_string(),
            min_period: spec.min_period(),
            path: Word::from_raw(k, path.to_vec()).to_string(),
            next_letter,
            internal: counters.internal,
            leaves: counters.leaves,
            nodes_visited: counters.visited,
            max_len: counters.max_len,
            max_count: counters.max_count,
            lex_least: Word::from_raw(k, counters.lex_least.clone()).to_string(),
        }
    }

    pub(crate) fn counters(&self) -> Result<Counters> {
        Ok(Counters {
            internal: self.internal,
            leaves: self.leaves,
            visited: self.nodes_visited,
            max_len: self.max_len,
            max_count: self.max_count,
            lex_least: Word::parse(self.k, &self.lex_least)?.into_letters(),
        })
    }

    /// Errors unless the snapshot was taken for this alphabet and spec.
    pub fn check_matches<T: ExactInt>(&self, k: usize, spec: &FreenessSpec<T>) -> Result<()> {
        let same = self.k == k
            && self.alpha == spec.alpha().to_string()
            && self.mode == spec.mode().as_str()
            && self.min_period == spec.min_period();
        if same {
            Ok(())
        } else {
            Err(Error::Checkpoint(format!(
                "snapshot is for k={} {}{} @ {}, not k={k} {spec}",
                self.k,
                self.alpha,
                if self.mode == "gt" { "+" } else { "" },
                self.min_period
            )))
        }
    }

    pub fn to_text(&self) -> String {
        let json = serde_json::to_string(self).expect("checkpoint serializes");
        format!("{CHECKPOINT_HEADER}\n{json}\n")
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        if header.trim_end() != CHECKPOINT_HEADER {
            return Err(Error::Checkpoint(format!("unsupported header {header:?}")));
        }
        let ckpt: Checkpoint =
            serde_json::from_str(body).map_err(|e| Error::Checkpoint(e.to_string()))?;
        let path = Word::parse(ckpt.k, &ckpt.path)?;
        if path.is_empty() || path.letters()[0] != 0 {
            return Err(Error::Checkpoint("path must start with letter 0".into()));
        }
        if ckpt.next_letter as usize > ckpt.k {
            return Err(Error::Checkpoint("next letter out of range".into()));
        }
        Ok(ckpt)
    }

    /// Writes through a temporary file so a crash never leaves a torn
    /// snapshot behind.
    pub fn write(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.to_text())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Checkpoint::from_text(&fs::read_to_string(path)?)
    }
}
