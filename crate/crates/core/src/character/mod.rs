//! Irreducible characters of S_n.
//!
//! Values come from the Murnaghan-Nakayama rule: one cycle of the class is
//! consumed per level (always the longest remaining one) and the value is a
//! signed sum over rim hooks of that length. Subproblems are memoized on
//! `(sub-diagram, remaining cycle lengths)`. If the longest remaining cycle
//! exceeds the `(1,1)` hook of the current diagram the branch is zero.

mod engine;
mod removal;
mod store;
mod table;

pub use engine::{degree, mn_value, CharacterEngine, CharacterValue, MemoKey};
pub use removal::{removal_sequences, RemovalSequence};
pub use store::{CacheLoad, CACHE_HEADER};
pub use table::{character_table, CharacterTable};
