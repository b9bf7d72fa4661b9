//! Tools for the quartic genus-one curves `q·y² = x⁴ − p` over the rationals:
//! deciding solvability in every completion of Q, evaluating the quaternion
//! Brauer class `(y, p)` at local points, and certifying curves that have
//! points everywhere locally but no rational points at all.
//!
//! The pipeline, bottom to top:
//!
//! - [`arith`] — exact integer/rational arithmetic kernels (primality,
//!   factorization, modular square roots, power residues).
//! - [`localfields`] — places of Q, valuations, square and fourth-power
//!   classes in each completion, Hensel lifting, Hilbert symbols.
//! - [`curve`] — the curve family, its two smooth charts, point counts over
//!   prime fields, bounded-height rational point search, and the Jacobian.
//! - [`localsolve`] — a decision procedure for local solvability at every
//!   place, with explicit liftable witnesses.
//! - [`brauer`] — local invariants of the class `(y, p)`, the obstruction
//!   sum, and certificate assembly.
//! - [`search`] — the six-condition parameter check and the enumeration of
//!   pairs `(p, q)` whose curve provably has no rational points.
//! - [`certdoc`] — the JSON certificate document (all integers as decimal
//!   strings).
//!
//! The `lgp` binary wraps the pipeline in `verify`, `search`, and `symbols`
//! subcommands. The guide under `book/` walks through the mathematics; its
//! code snippets are compiled and run as doc-tests via [`guide`].

pub mod arith;
pub mod brauer;
pub mod certdoc;
pub mod curve;
pub mod guide;
pub mod localfields;
pub mod localsolve;
pub mod search;

pub use arith::{Int, Rat};
