//! Exact computations with polynomial functions on partitions.
//!
//! The crate covers
//! - exact rationals, Bernoulli numbers and truncated q-series ([`exact_core`]),
//! - partitions, hooks and characters of the symmetric group ([`partitions`]),
//! - the word algebra with its quasi-shuffle, shuffle and the involution ι ([`word_algebra`]),
//! - pointwise evaluation and the enumerative q-bracket ([`partition_eval`]),
//! - the fast q-bracket and quasimodularity detection ([`qbracket_fast`]),
//! - multiple zeta values and degree limits ([`mzv`]).

pub mod error;
pub mod exact_core;
pub mod mzv;
pub mod partition_eval;
pub mod partitions;
pub mod qbracket_fast;
pub mod word_algebra;

pub use error::{Error, Result};
pub use exact_core::{QSeries, Rational, UnivariatePoly};
pub use partitions::Partition;
pub use word_algebra::{Letter, Model, Word, WordSum};
