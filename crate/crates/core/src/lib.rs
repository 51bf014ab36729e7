//! Partitions of an integer into powers of a base `b >= 2`.
//!
//! A b-ary partition of `n` is a tuple `(p_0, ..., p_{k-1})` of naturals with
//! `sum p_i b^i = n`. Firing position `i` (`p_i -= b`, `p_{i+1} += 1`)
//! generates every partition of `n` from `(n)` and orders them into a
//! distributive lattice. This crate builds that lattice, enumerates the
//! partitions through a tree whose level `d` is exactly the partitions of
//! `d`, and counts them exactly.
//!
//! Module map:
//!
//! - [`partition`]: the value types and the firing and odometer rules;
//! - [`lattice`]: order, meet and join, covering diagrams, the incremental
//!   construction and the disjoint-union decomposition;
//! - [`tree`]: carry sequence, the enumeration tree and linear enumeration;
//! - [`counting`]: big-integer counting formulas with memoization;
//! - [`cfg`]: the chip-firing encoding;
//! - [`oracle`]: brute-force ground truth;
//! - [`verify`]: the cross-validation suite run by `bary verify`;
//! - [`cli`]: the command-line front end.

pub mod cfg;
pub mod cli;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod partition;
pub mod tree;
pub mod verify;

pub use counting::{Count, CountCache};
pub use error::{Error, Result};
pub use lattice::{build_hasse, HasseDiagram};
pub use partition::{Basis, Partition, ShotVector};
