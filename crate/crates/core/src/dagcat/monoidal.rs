use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::Matrix;
use crate::scalars::Scalar;

/// The structural isomorphisms of the symmetric monoidal structure.
#[derive(Clone, Debug)]
pub enum Coherence {
    /// `λ: I ⊗ X → X`
    LeftUnitor(HObject),
    /// `ρ: X ⊗ I → X`
    RightUnitor(HObject),
    /// `α: (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`
    Associator(HObject, HObject, HObject),
    /// `γ: X ⊗ Y → Y ⊗ X`
    Symmetry(HObject, HObject),
}

/// Gram matrix `G_X ⊗ G_Y`, so `⟨h⊗k, h'⊗k'⟩ = ⟨h,h'⟩·⟨k,k'⟩`.
pub fn tensor(x: &HObject, y: &HObject) -> Result<HObject> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch { expected: x.ring(), found: y.ring() });
    }
    let gram = x.gram().kronecker(y.gram());
    match (x.gram_inverse(), y.gram_inverse()) {
        // Kronecker products of positive-definite matrices are
        // positive-definite, with inverse the Kronecker of the inverses.
        (Some(a), Some(b)) => Ok(HObject::from_valid_parts(gram, Some(a.kronecker(b)))),
        _ => HObject::new(x.ring(), x.dim() * y.dim(), gram),
    }
}

pub fn tensor_mor(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    let dom = tensor(f.dom(), g.dom())?;
    let cod = tensor(f.cod(), g.cod())?;
    HMorphism::new(&dom, &cod, f.mat().kronecker(g.mat()))
}

/// A scalar as an endomorphism of the unit.
pub fn scalar_morphism(s: &Scalar) -> Result<HMorphism> {
    let unit = HObject::unit(s.ring());
    HMorphism::new(&unit, &unit, Matrix::from_vec(s.ring(), 1, 1, vec![s.clone()])?)
}

pub fn coherence_iso(kind: &Coherence) -> Result<HMorphism> {
    match kind {
        Coherence::LeftUnitor(x) => {
            let dom = tensor(&HObject::unit(x.ring()), x)?;
            HMorphism::new(&dom, x, Matrix::identity(x.ring(), x.dim()))
        }
        Coherence::RightUnitor(x) => {
            let dom = tensor(x, &HObject::unit(x.ring()))?;
            HMorphism::new(&dom, x, Matrix::identity(x.ring(), x.dim()))
        }
        Coherence::Associator(x, y, z) => {
            let dom = tensor(&tensor(x, y)?, z)?;
            let cod = tensor(x, &tensor(y, z)?)?;
            HMorphism::new(&dom, &cod, Matrix::identity(x.ring(), dom.dim()))
        }
        Coherence::Symmetry(x, y) => {
            let (n, m) = (x.dim(), y.dim());
            let dom = tensor(x, y)?;
            let cod = tensor(y, x)?;
            // e_i ⊗ f_j sits at i·m + j in X⊗Y and at j·n + i in Y⊗X.
            let ring = x.ring();
            let mat = Matrix::from_fn(ring, n * m, n * m, |r, c| {
                let (i, j) = (c / m.max(1), c % m.max(1));
                if r == j * n + i {
                    Scalar::one(ring)
                } else {
                    Scalar::zero(ring)
                }
            });
            HMorphism::new(&dom, &cod, mat)
        }
    }
}
