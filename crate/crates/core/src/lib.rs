//! Generalized repetition avoidance in words.
//!
//! A word is `(α, ℓ)`-free when none of its factors has a period `p ≥ ℓ`
//! with length at least `α·p`; the `+` variant forbids only lengths
//! strictly above `α·p`. This crate provides exact checks of that
//! property, exhaustive exploration of the tree of free words, depth-first
//! construction of long free words, and tools for uniform morphisms.
//!
//! Exponents are exact rationals over any unsigned integer type; the
//! aliases below fix the common choices.

pub mod checker;
pub mod error;
pub mod exponent;
pub mod morphism;
pub mod period;
pub mod search;
pub mod spec;
pub mod table;
pub mod word;

pub use checker::IncrementalChecker;
pub use error::{Error, Result};
pub use exponent::{ExactInt, Exponent};
pub use morphism::{Morphism, SyncReport};
pub use period::{exponent_of, is_free, is_period, scan, Witness};
pub use search::{
    explore, explore_with, grow, stats_check, Budget, ExploreOptions, GrowResult, SearchOutcome,
    TreeRecord, TreeStats,
};
pub use spec::{FreenessSpec, Mode};
pub use word::{Letter, Word, MAX_ALPHABET};

/// Exponent over `u32`.
pub type SmallExponent = Exponent<u32>;
/// Exponent over arbitrary-precision integers.
pub type BigExponent = Exponent<num_bigint::BigUint>;
pub type SmallSpec = FreenessSpec<u32>;
pub type BigSpec = FreenessSpec<num_bigint::BigUint>;
