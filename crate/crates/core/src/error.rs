//! Error types shared across the workbench.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial is reducible")]
    Reducible,
    #[error("invalid modulus: {0}")]
    BadModulus(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("subgroup closure exceeded the configured order cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("unsupported field size q = {0} (supported: 2, 3, 4, 5, 7, 8, 9)")]
    UnsupportedFieldSize(u64),
    #[error("the given elements do not form a subgroup: {0}")]
    NotClosed(String),
    #[error("subgroup is not normal in the expected overgroup")]
    NotNormal,
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),
    #[error("element {0} is outside the expected (sub)group")]
    NotAMember(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("generator images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("generators do not generate the stated domain")]
    GensDontGenerate,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("irreducibility test inconclusive after {attempts} attempts")]
    Inconclusive { attempts: usize },
    #[error("composite map is not a scalar multiple of the identity")]
    NotScalar,
    #[error("group order {order} exceeds the radical computation cap {cap}")]
    RadicalCapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("element is not invertible in the Hecke algebra")]
    NotInvertible,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}
