//! Factorizations, relations, and presentation data of a semigroup.
//!
//! The map sending an exponent vector to its weighted sum against the
//! generators has fibers that are finite sets of factorizations; pairs of
//! factorizations of the same element are the relations of the semigroup.
//! This module enumerates fibers, partitions them into shared-support
//! components, locates Betti elements, counts minimal presentations, and
//! certifies that explicit binomial sets generate (and minimally generate)
//! the kernel congruence. Exact sparse polynomial arithmetic and monomial
//! ideal colength live here too, since binomial identities and
//! specializations are part of the same toolkit.

mod betti;
mod fiber;
mod monomial;
mod poly;
mod relations;
mod union_find;

pub use betti::{
    betti_elements, betti_elements_budgeted, betti_scan_bound, minimal_presentation_cardinality,
    minimal_presentation_cardinality_budgeted, BettiData,
};
pub use fiber::{
    factorization_graph_components, factorizations, factorizations_budgeted, Factorization,
};
pub use monomial::{specialize_binomials_at_zero, Colength, MonomialIdeal};
pub use poly::{poly_identity_zero, SparsePolynomial};
pub use relations::{
    relations_generate_up_to, relations_minimal, BinomialRelation, GenerationOutcome,
    MinimalityOutcome,
};

pub(crate) use union_find::UnionFind;
