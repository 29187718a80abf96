//! Exact arithmetic for involutive commutative semirings and fields.
//!
//! Six rings ship: `Nat` and `Bool` (zerosumfree semirings), `Int`, and the
//! fields `Rat`, `GaussRat` (conjugation) and `QuadExt(d)` (trivial
//! involution, real embedding). Scalars are kept in canonical form so that
//! equality is syntactic.

mod hom;
mod order;
mod props;
mod ring;
mod scalar;
mod text;

pub use hom::SemiringHom;
pub use order::{is_positive, leq};
pub use props::{
    char_zero_check, find_cancellation_witness, find_zero_sum_witness, is_mult_cancellative, is_zerosumfree,
    small_elements, Check,
};
pub use ring::{InvolutionKind, ScalarRing};
pub use scalar::Scalar;
