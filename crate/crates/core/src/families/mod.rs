//! Parametric families of semigroups generated by concatenating two
//! arithmetic sequences, with closed-form invariants and verifiers that
//! compare every closed form against the general machinery.

mod bresinsky;
mod symmetric;
mod unbounded;

pub use bresinsky::{bresinsky_generators, verify_bresinsky_family, BresinskyParams};
pub use symmetric::{
    apery_closed_form_s, apery_closed_form_t, frobenius_closed_form, gamma_s_generators,
    gamma_t_generators, symmetric_generators, verify_symmetric_family, SymSParams, SymTParams,
    SymmetricParams,
};
pub use unbounded::{
    conjecture_scan, ed4_generating_set, eto_colength_check, h_relations, unbounded_generators,
    verify_ed4_ideal, verify_reduction_identities, verify_unbounded_family, CellStatus,
    ConjectureRow, UnboundedParams,
};

/// Default cap on enumeration nodes per factorization fiber, used by the
/// scanning entry points when the caller does not override it.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
