//! Exact bijective codes between natural numbers and richer structures.
//!
//! Everything in this crate is a bijection with ℕ = {0, 1, 2, …}, computed in
//! exact arbitrary-precision arithmetic:
//!
//! * [`pairings`] — two-dimensional pairing functions: the Cantor pair `c`
//!   and its swapped variant, the positive-integer variant `p`, the
//!   square-shell pairing `r₂`, and the dyadic pairing `q`.
//! * [`tuplings`] — their d-dimensional generalizations: the square-shell
//!   family `r_d`, the Skolem family `s_d` (combinatorial number system),
//!   the Chowla family `χ_d`, left-fold compositions of any pairing, and
//!   argument-permutation wrappers.
//! * [`shells`] — the shell-numbering framework that explains all of the
//!   above: executable checks that a claimed shell numbering is consistent
//!   with a tupling, the counting inequality it must satisfy, the
//!   max-dominating predicate, and digit-length bounds for cubic-shell
//!   codes.
//! * [`enums`] — enumerations built on top of any max-dominating pairing:
//!   ranking and unranking of full binary trees, of all binary trees (via
//!   defoliation), and of finite integer sequences (two schemes).
//! * [`oracle`] — deliberately naive table-based cross-checks used by the
//!   test suites and the `verify` command to validate every closed-form
//!   inverse against brute force.
//! * [`natmath`] — the exact integer primitives underneath: binomials,
//!   floor roots, digit lengths.
//!
//! Codes and coordinates are [`Nat`] values (arbitrary precision, never
//! negative). All functions are pure; everything is safe for concurrent use.
//!
//! ```
//! use natcode::{tuplings, Nat};
//!
//! let rs3 = tuplings::rosenberg_strong(3).unwrap();
//! let coords = [Nat::from(3u32), Nat::from(2u32), Nat::from(0u32)];
//! let code = rs3.encode(&coords).unwrap();
//! assert_eq!(rs3.decode(&code).unwrap(), coords);
//! ```

#![forbid(unsafe_code)]

pub mod enums;
mod error;
pub mod natmath;
pub mod oracle;
pub mod pairings;
pub mod shells;
pub mod tuplings;
pub mod verify;

pub use error::Error;
pub use natmath::Nat;
pub use shells::{Count, Counterexample, ShellKind, ShellNumbering, Verdict};
pub use tuplings::TuplingFunction;
