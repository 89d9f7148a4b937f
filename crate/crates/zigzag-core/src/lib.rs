//! Exact combinatorics of zigzag (alternating) permutations.
//!
//! The crate provides, entirely in exact arithmetic:
//!
//! * permutation enumeration and basic operations ([`perm`]),
//! * descent-like statistics, codes, and vincular pattern counts ([`stats`]),
//! * bijections transporting those statistics ([`bijections`]),
//! * min-tree representations, simsun permutations, and the Foata-Strehl
//!   action ([`mintree`]),
//! * polynomial, bivariate, noncommutative, and truncated-series arithmetic
//!   over big integers and rationals ([`exact`]),
//! * enumerative tables and index polynomials ([`enumerate`]),
//! * symmetric-function evaluations at `1^m` ([`symfun`]),
//! * machine checks of generating-function identities ([`identities`]).
//!
//! Everything is deterministic and exact; no floating point is used anywhere.

pub mod bijections;
pub mod enumerate;
pub mod exact;
pub mod identities;
pub mod mintree;
pub mod perm;
pub mod stats;
pub mod symfun;

pub use exact::{BiPoly, IntPoly, NcPoly, QPoly, Series, Series1, Series2, Var};
pub use perm::Perm;
