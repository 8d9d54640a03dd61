//! Exact arithmetic for one-dimensional numerical semigroup rings
//! `k[[t^a1, ..., t^an]]`.
//!
//! Monomial ideals of such a ring are sets of exponents, so every question
//! about them reduces to integer-set arithmetic. The crate computes ring
//! invariants (type, canonical ideal and its trace, Elias and Ulrich indices,
//! generalized Loewy length over monomial parameters, Hilbert-Samuel data),
//! decides the Elias, Burch and Ulrich properties of ideals, and evaluates a
//! catalog of implications between them on explicit instances.

pub mod arith;
pub mod classify;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod oracle;
pub mod propositions;
pub mod semigroup;

pub use arith::{IdealArithmetic, SemigroupRing};
pub use error::{Error, Result};
pub use ideal::{trace_of_canonical, FractionalIdeal, NormalForm};
pub use oracle::{WindowOracle, WindowSet};
pub use semigroup::{NumericalSemigroup, OrdTable};
