use thiserror::Error;

use crate::scalars::ScalarRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: ScalarRing, found: ScalarRing },
    #[error("no inverse: {0}")]
    NoInverse(String),
    #[error("operation requires a field, but {0} is not one")]
    NotAField(ScalarRing),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("gram matrix is not hermitian")]
    NotHermitian,
    #[error("gram matrix is not positive-definite")]
    NotPositiveDefinite,
    #[error("gram matrix is singular")]
    SingularGram,
    #[error("inner product is degenerate: {0}")]
    Degenerate(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not a semimodule: {0}")]
    NotASemimodule(String),
    #[error("not a hilbert semimodule: {0}")]
    NotHilbert(String),
    #[error("inner product is not well-defined on the tensor quotient: {0}")]
    IllDefinedInnerProduct(String),
    #[error("factorizations do not factor the same morphism")]
    DifferentMorphisms,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown scalar extension `{0}`")]
    UnknownExtension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
