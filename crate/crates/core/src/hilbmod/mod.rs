//! Concrete models: Gram-matrix Hilbert modules over involutive fields and
//! finite Hilbert semimodules given by tables.

mod finite;
mod object;

pub use finite::{find_adjoint_finite, tensor_quotient, FiniteSemimodule, FiniteSemiring, TensorQuotient};
pub use object::{basis_point, hom_module, self_inner_is_strict, HMorphism, HObject, HomModule, Vector};
