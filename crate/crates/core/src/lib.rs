//! Exact character values of the symmetric groups S_n.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`], [`hook`], [`arith`], [`padic`]: partitions, Young-diagram
//!   hooks and rims, integer helpers, p-adic classification of classes.
//! - [`character`]: the memoized Murnaghan-Nakayama engine, hook-length
//!   degrees, full character tables and staged rim-hook removal.
//! - [`gaps`]: interval calculus for the hook-length gaps of self-conjugate
//!   partitions.
//! - [`certify`]: zero/nonzero certificates for single table entries and the
//!   p-vanishing class scanner.
//!
//! Character values are arbitrary-precision integers; nothing in the crate
//! uses floating point.

pub mod arith;
pub mod certify;
pub mod character;
mod error;
pub mod gaps;
pub mod hook;
pub mod interval;
pub mod padic;
pub mod partition;

pub use certify::{Certificate, Certifier, Rule, Verdict};
pub use character::{CharacterEngine, CharacterTable, CharacterValue, RemovalSequence};
pub use error::{Error, Result};
pub use partition::{MultiplicityForm, Node, Partition};
