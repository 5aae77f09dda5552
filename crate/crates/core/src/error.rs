use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
///
/// `FamilyContractViolation` is deliberately distinct from `InvalidInput`:
/// the former means a family-level guarantee failed on parameters that
/// satisfy every stated precondition, which is always reported loudly and
/// never swallowed. `InvalidInput` means the caller broke a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generators have gcd {gcd}, not 1, so they do not generate a numerical semigroup")]
    NotNumerical { gcd: u64 },

    #[error("{element} is not an element of the semigroup")]
    NotMember { element: u64 },

    #[error("not a minimal generating set: {redundant} is a sum of the other generators")]
    NotMinimal { redundant: u64 },

    #[error("not a relation: {0}")]
    InvalidRelation(String),

    #[error("specialization does not yield a monomial ideal: {0}")]
    NotMonomialAfterSpecialization(String),

    #[error("family contract violated in {check}: {detail}")]
    FamilyContractViolation { check: String, detail: String },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("enumeration budget exceeded")]
    BudgetExceeded,
}
