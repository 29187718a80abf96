//! The embedding functors: `H(I, −)` into Hilbert modules over the scalars,
//! extension of scalars along a semiring inclusion, and boundedness.

mod bound;
mod embed;
mod extension;
mod monoid;

pub use bound::{
    bound_holds_at, find_bound, find_bound_with, is_bound, verify_bound_preserved, Bound, DEFAULT_BOUND_STEPS,
};
pub use embed::{full_preimage, hom_embed, hom_embed_mor, monoidal_witness};
pub use extension::ScalarExtension;
pub use monoid::{non_fullness_demo, CommMonoid, NonFullnessReport, Refutation};
