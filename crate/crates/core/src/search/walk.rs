//! Explicit-stack depth-first walk over the reduced avoidance tree.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::checker::IncrementalChecker;
use crate::exponent::ExactInt;
use crate::word::Letter;

/// Counters for one subtree. Lengths are word lengths (tree depths).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Counters {
    pub internal: u64,
    pub leaves: u64,
    pub visited: u64,
    pub max_len: usize,
    pub max_count: u64,
    pub lex_least: Vec<u8>,
}

impl Counters {
    #[inline]
    pub fn record_free(&mut self, letters: &[u8]) {
        let len = letters.len();
        if len > self.max_len {
            self.max_len = len;
            self.max_count = 1;
            self.lex_least.clear();
            self.lex_least.extend_from_slice(letters);
        } else if len == self.max_len {
            self.max_count += 1;
        }
    }

    /// Folds in the counters of a subtree that comes later in lexicographic
    /// order.
    pub fn merge(&mut self, later: Counters) {
        self.internal += later.internal;
        self.leaves += later.leaves;
        self.visited += later.visited;
        if later.max_len > self.max_len {
            self.max_len = later.max_len;
            self.max_count = later.max_count;
            self.lex_least = later.lex_least;
        } else if later.max_len == self.max_len {
            self.max_count += later.max_count;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Done,
    NodeBudget,
    DepthBudget,
}

/// Node-budget accounting, either local or shared between shards.
pub(crate) struct Meter<'a> {
    pub limit: Option<u64>,
    pub shared: Option<(&'a AtomicU64, &'a AtomicBool)>,
    pending: u64,
}

const BATCH: u64 = 4096;

impl<'a> Meter<'a> {
    pub fn local(limit: Option<u64>) -> Self {
        Meter {
            limit,
            shared: None,
            pending: 0,
        }
    }

    pub fn shared(limit: Option<u64>, total: &'a AtomicU64, stop: &'a AtomicBool) -> Self {
        Meter {
            limit,
            shared: Some((total, stop)),
            pending: 0,
        }
    }

    /// Accounts one visited node; true when the budget is exhausted.
    #[inline]
    fn tick(&mut self, visited: u64) -> bool {
        match self.shared {
            None => self.limit.is_some_and(|l| visited > l),
            Some((total, stop)) => {
                self.pending += 1;
                if self.pending < BATCH {
                    return false;
                }
                self.flush_to(total, stop)
            }
        }
    }

    fn flush_to(&mut self, total: &AtomicU64, stop: &AtomicBool) -> bool {
        let now = total.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if self.limit.is_some_and(|l| now > l) {
            stop.store(true, Ordering::Relaxed);
        }
        stop.load(Ordering::Relaxed)
    }

    pub fn flush(&mut self) {
        if let Some((total, stop)) = self.shared {
            self.flush_to(total, stop);
        }
    }
}

/// Snapshot hook: cadence in visited nodes and the callback.
pub(crate) type Tick<'f, W> = (u64, &'f mut dyn FnMut(&W, &Counters));

/// Where the walk stands: `next[i]` is the next child letter to try below
/// the node of length `base + i + 1`, whose letters are the first
/// `base + i + 1` letters held by the checker.
pub(crate) struct Walk<'c, T> {
    pub checker: &'c mut IncrementalChecker<T>,
    pub next: Vec<u8>,
    pub max_depth: Option<usize>,
    /// Free words of exactly this length are handed to `frontier` instead
    /// of being descended into.
    pub split: Option<usize>,
    pub frontier: Vec<Vec<u8>>,
}

impl<'c, T: ExactInt> Walk<'c, T> {
    /// Starts a walk below the word currently held by the checker, which
    /// must be free. The root itself is counted.
    pub fn from_root(checker: &'c mut IncrementalChecker<T>, counters: &mut Counters) -> Self {
        counters.visited += 1;
        counters.internal += 1;
        counters.record_free(checker.letters());
        Walk {
            checker,
            next: vec![0],
            max_depth: None,
            split: None,
            frontier: Vec::new(),
        }
    }

    /// Runs until the subtree is exhausted or a budget runs out. With
    /// `on_tick` set, it is called every `every` visited nodes with the walk
    /// in a resumable state.
    pub fn run(
        &mut self,
        counters: &mut Counters,
        meter: &mut Meter<'_>,
        mut on_tick: Option<Tick<'_, Self>>,
    ) -> Stop {
        let k = self.checker.alphabet_size() as u8;
        let mut last_tick = counters.visited;
        loop {
            let Some(top) = self.next.last_mut() else {
                return Stop::Done;
            };
            let a = *top;
            if a == k {
                self.next.pop();
                self.checker.pop();
                continue;
            }
            if let Some((every, f)) = on_tick.as_mut() {
                if counters.visited >= last_tick + *every {
                    last_tick = counters.visited;
                    f(self, counters);
                }
            }
            *self.next.last_mut().expect("nonempty") += 1;
            counters.visited += 1;
            if meter.tick(counters.visited) {
                // undo the count so a resumed walk revisits this node
                counters.visited -= 1;
                *self.next.last_mut().expect("nonempty") -= 1;
                return Stop::NodeBudget;
            }
            if self.checker.probe(Letter(a)).is_some() {
                counters.leaves += 1;
                continue;
            }
            let child_len = self.checker.len() + 1;
            if self.split == Some(child_len) {
                let mut root = self.checker.letters().to_vec();
                root.push(a);
                self.frontier.push(root);
                counters.visited -= 1;
                continue;
            }
            if self.max_depth.is_some_and(|d| child_len > d) {
                return Stop::DepthBudget;
            }
            self.checker.push(Letter(a));
            counters.internal += 1;
            counters.record_free(self.checker.letters());
            self.next.push(0);
        }
    }
}
