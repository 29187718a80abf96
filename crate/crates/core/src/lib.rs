//! Exact models of (pre-)Hilbert categories.
//!
//! Objects are finitely generated free Hilbert modules given by a Hermitian
//! positive-definite Gram matrix over an involutive field (rationals,
//! Gaussian rationals, real quadratic fields), morphisms are matrices, and
//! the dagger is the Gram-twisted conjugate transpose. Alongside these sit
//! finite Hilbert semimodules over the Boolean semiring, described by
//! explicit tables.
//!
//! Everything is exact: no floating point is used anywhere. The [`laws`]
//! module binds the categorical statements (dagger kernels, factorization,
//! hom-embedding, extension of scalars, boundedness) to seeded property
//! suites that produce [`laws::AuditReport`]s.

pub mod dagcat;
pub mod error;
pub mod fixture;
pub mod functors;
pub mod hilbmod;
pub mod laws;
pub mod matrix;
pub mod scalars;

pub use dagcat::{BiproductWitness, Coherence, FactorKind, Factorization};
pub use error::{Error, Result};
pub use hilbmod::{FiniteSemimodule, FiniteSemiring, HMorphism, HObject, HomModule, Vector};
pub use matrix::{Definiteness, Matrix, Pivoting};
pub use scalars::{InvolutionKind, Scalar, ScalarRing, SemiringHom};
