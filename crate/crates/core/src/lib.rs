//! Exact integer arithmetic for numerical semigroups.
//!
//! The crate computes the classical invariants of a numerical semigroup
//! (Apéry sets, Frobenius number, genus, symmetry), enumerates factorization
//! fibers and their graphs, locates Betti elements and the cardinality of a
//! minimal presentation, certifies binomial generating sets of the defining
//! toric ideal, counts standard monomials of monomial ideals, and provides
//! constructors plus end-to-end verifiers for several parametric families of
//! semigroups generated by concatenating two arithmetic sequences.
//!
//! All arithmetic is exact; overflow is detected and reported, never wrapped.

pub mod error;
pub mod families;
pub mod presentations;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use report::{Check, VerificationReport};
pub use semigroup::{minimal_generators, AperyTable, SemigroupProfile, SemigroupSpec};
