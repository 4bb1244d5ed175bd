//! Exhaustive exploration of the avoidance tree and depth-first
//! construction of long free words.
//!
//! The tree has the empty word at its root; a node is internal when its
//! word is free and then has one child per letter, otherwise it is a leaf.
//! Forbidden sets here are closed under renaming letters, so only the
//! subtree below the single letter `0` is walked and full-tree counts are
//! recovered from it: `I = k·I₀ + 1`, `I′ = k·I′₀`, `L = k·L₀`.

mod checkpoint;
mod walk;

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checker::IncrementalChecker;
use crate::error::{Error, Result};
use crate::exponent::ExactInt;
use crate::period::scan;
use crate::spec::FreenessSpec;
use crate::word::{check_alphabet, Letter, Word};

pub use checkpoint::{Checkpoint, CHECKPOINT_HEADER};
use walk::{Counters, Meter, Stop, Walk};

/// Limits on a search. `max_nodes` counts every visited node, internal or
/// leaf, of the tree below the letter `0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_depth: Option<usize>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_depth: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) || self.max_depth == Some(0) {
            Err(Error::EmptyBudget)
        } else {
            Ok(())
        }
    }
}

/// Statistics of a finite avoidance tree, as full-tree counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats<T = u64> {
    pub k: usize,
    pub spec: FreenessSpec<T>,
    /// Number of leaves `L`.
    pub leaves: u64,
    /// Number of internal nodes `I`, i.e. of free words (including ε).
    pub internal: u64,
    /// Height `h`: depth of the deepest leaf.
    pub height: usize,
    /// Length `M` of the longest free words.
    pub max_len: usize,
    /// Number `I′` of free words of length `M`.
    pub max_count: u64,
    pub lex_least: Word,
    /// Nodes visited in the reduced tree.
    pub nodes_visited: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T = u64> {
    Finite(TreeStats<T>),
    /// Inconclusive: the budget ran out. Says nothing about infiniteness.
    BudgetExceeded {
        nodes_visited: u64,
        deepest_free_word: Word,
    },
}

impl<T: ExactInt> SearchOutcome<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, SearchOutcome::Finite(_))
    }

    pub fn stats(&self) -> Option<&TreeStats<T>> {
        match self {
            SearchOutcome::Finite(s) => Some(s),
            SearchOutcome::BudgetExceeded { .. } => None,
        }
    }

    /// Machine-readable form. Fields unknown after a budget stop are zero.
    pub fn record(&self, k: usize, spec: &FreenessSpec<T>) -> TreeRecord {
        match self {
            SearchOutcome::Finite(s) => TreeRecord {
                k: s.k,
                alpha: s.spec.alpha().to_string(),
                mode: s.spec.mode().as_str().to_string(),
                min_period: s.spec.min_period(),
                leaves: s.leaves,
                internal: s.internal,
                height: s.height,
                max_len: s.max_len,
                max_count: s.max_count,
                lex_least: s.lex_least.to_string(),
                nodes_visited: s.nodes_visited,
                finite: true,
            },
            SearchOutcome::BudgetExceeded {
                nodes_visited,
                deepest_free_word,
            } => TreeRecord {
                k,
                alpha: spec.alpha().to_string(),
                mode: spec.mode().as_str().to_string(),
                min_period: spec.min_period(),
                leaves: 0,
                internal: 0,
                height: 0,
                max_len: deepest_free_word.len(),
                max_count: 0,
                lex_least: deepest_free_word.to_string(),
                nodes_visited: *nodes_visited,
                finite: false,
            },
        }
    }
}

/// JSON result of a tree exploration; field order is the wire order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub k: usize,
    pub alpha: String,
    pub mode: String,
    pub min_period: usize,
    pub leaves: u64,
    pub internal: u64,
    pub height: usize,
    pub max_len: usize,
    pub max_count: u64,
    pub lex_least: String,
    pub nodes_visited: u64,
    pub finite: bool,
}

impl TreeRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowResult {
    Found(Word),
    /// The whole tree is shallower than the target.
    Exhausted {
        max_len_reached: usize,
    },
    BudgetExceeded {
        nodes_visited: u64,
    },
}

#[derive(Debug, Clone)]
pub struct CheckpointConfig {
    pub path: PathBuf,
    /// Snapshot cadence in visited nodes.
    pub every: u64,
}

#[derive(Debug, Clone, Default)]
pub struct ExploreOptions {
    pub budget: Budget,
    /// Worker threads; 0 or 1 runs sequentially.
    pub shards: usize,
    /// Depth at which the tree is cut into independent subtrees when
    /// sharding. Chosen automatically when unset.
    pub split_depth: Option<usize>,
    pub checkpoint: Option<CheckpointConfig>,
    pub resume: Option<Checkpoint>,
}

fn check_search_alphabet(k: usize) -> Result<()> {
    check_alphabet(k)?;
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    Ok(())
}

/// Walks the whole avoidance tree for `spec` over `k` letters.
pub fn explore<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    budget: Budget,
) -> Result<SearchOutcome<T>> {
    explore_with(
        k,
        spec,
        &ExploreOptions {
            budget,
            ..Default::default()
        },
    )
}

pub fn explore_with<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    opts: &ExploreOptions,
) -> Result<SearchOutcome<T>> {
    check_search_alphabet(k)?;
    opts.budget.validate()?;
    if opts.shards > 1 {
        if opts.checkpoint.is_some() || opts.resume.is_some() {
            return Err(Error::Checkpoint(
                "checkpoints need a sequential run".into(),
            ));
        }
        return explore_sharded(k, spec, opts);
    }
    explore_sequential(k, spec, opts)
}

fn explore_sequential<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    opts: &ExploreOptions,
) -> Result<SearchOutcome<T>> {
    let mut checker = IncrementalChecker::new(k, spec.clone())?;
    let mut counters;
    let mut walk = match &opts.resume {
        Some(ckpt) => {
            ckpt.check_matches(k, spec)?;
            counters = ckpt.counters()?;
            let path = Word::parse(k, &ckpt.path)?;
            if checker.push_word(&path)?.is_some() {
                return Err(Error::Checkpoint(format!("path {path} is not free")));
            }
            let mut next: Vec<u8> = path.letters()[1..].iter().map(|&a| a + 1).collect();
            next.push(ckpt.next_letter);
            Walk {
                checker: &mut checker,
                next,
                max_depth: None,
                split: None,
                frontier: Vec::new(),
            }
        }
        None => {
            counters = Counters::default();
            checker.push(Letter(0));
            Walk::from_root(&mut checker, &mut counters)
        }
    };
    walk.max_depth = opts.budget.max_depth;
    let mut meter = Meter::local(opts.budget.max_nodes);

    let stop = match &opts.checkpoint {
        Some(cfg) => {
            let mut write_err = None;
            let mut save = |w: &Walk<'_, T>, c: &Counters| {
                let next = *w.next.last().expect("walk in progress");
                let ckpt = Checkpoint::capture(k, spec, w.checker.letters(), next, c);
                if let Err(e) = ckpt.write(&cfg.path) {
                    write_err.get_or_insert(e);
                }
            };
            let stop = walk.run(
                &mut counters,
                &mut meter,
                Some((cfg.every.max(1), &mut save)),
            );
            if stop == Stop::NodeBudget {
                save(&walk, &counters);
            }
            if let Some(e) = write_err {
                return Err(e);
            }
            stop
        }
        None => walk.run(&mut counters, &mut meter, None),
    };
    Ok(finish(k, spec, stop, counters))
}

/// Smallest depth whose frontier has enough subtrees to keep `shards`
/// workers busy.
fn auto_split_depth<T: ExactInt>(k: usize, spec: &FreenessSpec<T>, shards: usize) -> usize {
    let want = 64 * shards;
    let mut checker = IncrementalChecker::new(k, spec.clone()).expect("valid alphabet");
    let mut depth = 2;
    loop {
        checker.clear();
        checker.push(Letter(0));
        let mut counters = Counters::default();
        let mut walk = Walk::from_root(&mut checker, &mut counters);
        walk.split = Some(depth);
        walk.run(&mut counters, &mut Meter::local(None), None);
        if walk.frontier.is_empty() || walk.frontier.len() >= want || depth >= 64 {
            return depth;
        }
        depth += 1;
    }
}

fn explore_sharded<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    opts: &ExploreOptions,
) -> Result<SearchOutcome<T>> {
    let split = opts
        .split_depth
        .unwrap_or_else(|| auto_split_depth(k, spec, opts.shards))
        .max(2);
    let budget = opts.budget;

    let mut checker = IncrementalChecker::new(k, spec.clone())?;
    checker.push(Letter(0));
    let mut counters = Counters::default();
    let mut walk = Walk::from_root(&mut checker, &mut counters);
    walk.split = Some(split);
    walk.max_depth = budget.max_depth;
    let stop = walk.run(&mut counters, &mut Meter::local(budget.max_nodes), None);
    let roots = std::mem::take(&mut walk.frontier);
    if stop != Stop::Done {
        return Ok(finish(k, spec, stop, counters));
    }

    let total = AtomicU64::new(counters.visited);
    let halt = AtomicBool::new(false);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.shards)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<(Counters, Stop)> = pool.install(|| {
        roots
            .par_iter()
            .map(|root| {
                let mut checker =
                    IncrementalChecker::new(k, spec.clone()).expect("validated alphabet");
                for &a in root {
                    checker.push(Letter(a));
                }
                let mut c = Counters::default();
                let mut walk = Walk::from_root(&mut checker, &mut c);
                walk.max_depth = budget.max_depth;
                let mut meter = Meter::shared(budget.max_nodes, &total, &halt);
                let stop = walk.run(&mut c, &mut meter, None);
                meter.flush();
                (c, stop)
            })
            .collect()
    });

    let mut stop = Stop::Done;
    for (c, s) in results {
        counters.merge(c);
        if s != Stop::Done {
            stop = s;
        }
    }
    Ok(finish(k, spec, stop, counters))
}

fn finish<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    stop: Stop,
    counters: Counters,
) -> SearchOutcome<T> {
    let deepest = Word::from_raw(k, counters.lex_least);
    if stop != Stop::Done {
        return SearchOutcome::BudgetExceeded {
            nodes_visited: counters.visited,
            deepest_free_word: deepest,
        };
    }
    let k64 = k as u64;
    SearchOutcome::Finite(TreeStats {
        k,
        spec: spec.clone(),
        leaves: k64 * counters.leaves,
        internal: k64 * counters.internal + 1,
        height: counters.max_len + 1,
        max_len: counters.max_len,
        max_count: k64 * counters.max_count,
        lex_least: deepest,
        nodes_visited: counters.visited,
    })
}

/// Audits the internal consistency of a [`TreeStats`].
pub fn stats_check<T: ExactInt>(s: &TreeStats<T>) -> bool {
    let k = s.k as u64;
    s.k >= 2
        && s.leaves == 1 + (k - 1) * s.internal
        && s.height >= 1
        && s.max_len == s.height - 1
        && s.lex_least.len() == s.max_len
        && s.lex_least.alphabet_size() == s.k
        && (s.internal == 0 || s.max_count >= 1)
        && scan(&s.lex_least, &s.spec).is_none()
}

/// Depth-first search, children in increasing letter order, for a free
/// word of length `target_len`. The first one found is the lexicographically
/// least free word of that length.
pub fn grow<T: ExactInt>(
    k: usize,
    spec: &FreenessSpec<T>,
    target_len: usize,
    budget: Budget,
) -> Result<GrowResult> {
    check_search_alphabet(k)?;
    budget.validate()?;
    if target_len == 0 {
        return Err(Error::ZeroTarget);
    }
    let mut checker = IncrementalChecker::new(k, spec.clone())?;
    checker.push(Letter(0));
    if target_len == 1 {
        return Ok(GrowResult::Found(checker.word()));
    }
    let k = k as u8;
    let mut next = vec![0u8];
    let mut visited = 1u64;
    let mut max_len = 1;
    while let Some(top) = next.last_mut() {
        let a = *top;
        if a == k {
            next.pop();
            checker.pop();
            continue;
        }
        *top += 1;
        visited += 1;
        if budget.max_nodes.is_some_and(|l| visited > l) {
            return Ok(GrowResult::BudgetExceeded {
                nodes_visited: visited - 1,
            });
        }
        if checker.probe(Letter(a)).is_some() {
            continue;
        }
        let len = checker.len() + 1;
        if budget.max_depth.is_some_and(|d| len > d) {
            return Ok(GrowResult::BudgetExceeded {
                nodes_visited: visited,
            });
        }
        checker.push(Letter(a));
        max_len = max_len.max(len);
        if len == target_len {
            return Ok(GrowResult::Found(checker.word()));
        }
        next.push(0);
    }
    Ok(GrowResult::Exhausted {
        max_len_reached: max_len,
    })
}
