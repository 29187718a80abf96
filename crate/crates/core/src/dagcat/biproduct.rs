use super::{compose, identity, monoidal};
use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::Matrix;
use crate::scalars::Scalar;

/// `X ⊕ Y` with its injections and projections.
#[derive(Clone, Debug)]
pub struct BiproductWitness {
    pub object: HObject,
    pub injections: [HMorphism; 2],
    pub projections: [HMorphism; 2],
}

fn same_ring(x: &HObject, y: &HObject) -> Result<()> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch { expected: x.ring(), found: y.ring() });
    }
    Ok(())
}

/// The Gram matrix of `X ⊕ Y` is block-diagonal: inner products add up.
pub fn biproduct(x: &HObject, y: &HObject) -> Result<BiproductWitness> {
    same_ring(x, y)?;
    let ring = x.ring();
    let (n, m) = (x.dim(), y.dim());
    // Block-diagonal sums of valid Grams are valid, with block inverses.
    let inv = match (x.gram_inverse(), y.gram_inverse()) {
        (Some(a), Some(b)) => Some(a.block_diag(b)),
        _ => None,
    };
    let object = HObject::from_valid_parts(x.gram().block_diag(y.gram()), inv);
    let k1 = Matrix::identity(ring, n).vstack(&Matrix::zeros(ring, m, n));
    let k2 = Matrix::zeros(ring, n, m).vstack(&Matrix::identity(ring, m));
    let injections = [HMorphism::new(x, &object, k1.clone())?, HMorphism::new(y, &object, k2.clone())?];
    let projections =
        [HMorphism::new(&object, x, k1.transpose())?, HMorphism::new(&object, y, k2.transpose())?];
    Ok(BiproductWitness { object, injections, projections })
}

pub fn biproduct_mor(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    let dom = biproduct(f.dom(), g.dom())?.object;
    let cod = biproduct(f.cod(), g.cod())?.object;
    HMorphism::new(&dom, &cod, f.mat().block_diag(g.mat()))
}

/// `Δ = ⟨id, id⟩: X → X ⊕ X`.
pub fn diagonal(x: &HObject) -> Result<HMorphism> {
    let w = biproduct(x, x)?;
    let id = Matrix::identity(x.ring(), x.dim());
    HMorphism::new(x, &w.object, id.vstack(&id))
}

/// `∇ = [id, id]: X ⊕ X → X`.
pub fn codiagonal(x: &HObject) -> Result<HMorphism> {
    let w = biproduct(x, x)?;
    let id = Matrix::identity(x.ring(), x.dim());
    HMorphism::new(&w.object, x, id.hstack(&id))
}

/// `X ⊕ (X ⊕ (⋯ ⊕ X))` with `n ≥ 1` summands.
pub fn direct_sum_n(x: &HObject, n: usize) -> Result<HObject> {
    if n == 0 {
        return Err(Error::Precondition("n-fold sums need n ≥ 1".into()));
    }
    let mut acc = x.clone();
    for _ in 1..n {
        acc = biproduct(x, &acc)?.object;
    }
    Ok(acc)
}

/// `Δⁿ = (id ⊕ Δⁿ⁻¹) ∘ Δ`, with `Δ¹ = id`.
pub fn diagonal_n(x: &HObject, n: usize) -> Result<HMorphism> {
    if n == 0 {
        return Err(Error::Precondition("n-fold diagonals need n ≥ 1".into()));
    }
    if n == 1 {
        return Ok(identity(x));
    }
    let rest = diagonal_n(x, n - 1)?;
    compose(&biproduct_mor(&identity(x), &rest)?, &diagonal(x)?)
}

/// `∇ⁿ = ∇ ∘ (id ⊕ ∇ⁿ⁻¹)`, with `∇¹ = id`.
pub fn codiagonal_n(x: &HObject, n: usize) -> Result<HMorphism> {
    if n == 0 {
        return Err(Error::Precondition("n-fold codiagonals need n ≥ 1".into()));
    }
    if n == 1 {
        return Ok(identity(x));
    }
    let rest = codiagonal_n(x, n - 1)?;
    compose(&codiagonal(x)?, &biproduct_mor(&identity(x), &rest)?)
}

fn parallel(f: &HMorphism, g: &HMorphism) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::ObjectMismatch("morphisms are not parallel".into()));
    }
    Ok(())
}

/// Entrywise sum.
pub fn add(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    parallel(f, g)?;
    HMorphism::new(f.dom(), f.cod(), f.mat().add(g.mat()))
}

/// `∇ ∘ (f ⊕ g) ∘ Δ`.
pub fn add_via_biproduct(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    parallel(f, g)?;
    let sum = biproduct_mor(f, g)?;
    compose(&codiagonal(f.cod())?, &compose(&sum, &diagonal(f.dom())?)?)
}

/// Entrywise scaling.
pub fn scalar_mul(s: &Scalar, f: &HMorphism) -> Result<HMorphism> {
    if s.ring() != f.ring() {
        return Err(Error::RingMismatch { expected: f.ring(), found: s.ring() });
    }
    HMorphism::new(f.dom(), f.cod(), f.mat().scale(s))
}

/// `λ ∘ (s ⊗ f) ∘ λ⁻¹` where `s: I → I`.
pub fn scalar_mul_via_unitors(s: &Scalar, f: &HMorphism) -> Result<HMorphism> {
    let s = monoidal::scalar_morphism(s)?;
    if s.ring() != f.ring() {
        return Err(Error::RingMismatch { expected: f.ring(), found: s.ring() });
    }
    let lam_dom = monoidal::coherence_iso(&monoidal::Coherence::LeftUnitor(f.dom().clone()))?;
    let lam_cod = monoidal::coherence_iso(&monoidal::Coherence::LeftUnitor(f.cod().clone()))?;
    let lam_dom_inv = lam_dom.adjoint().or_else(|_| {
        // λ is the identity matrix, so its inverse is too, over any ring.
        HMorphism::new(lam_dom.cod(), lam_dom.dom(), lam_dom.mat().clone())
    })?;
    let sf = monoidal::tensor_mor(&s, f)?;
    compose(&lam_cod, &compose(&sf, &lam_dom_inv)?)
}
