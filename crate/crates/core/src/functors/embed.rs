use crate::dagcat::{coherence_iso, compose, tensor, tensor_mor, Coherence};
use crate::error::{Error, Result};
use crate::hilbmod::{basis_point, hom_module, HMorphism, HObject, HomModule, Vector};
use crate::matrix::Matrix;

/// Object part of `H(I, −)`.
pub fn hom_embed(x: &HObject) -> Result<HomModule> {
    hom_module(x)
}

/// `H(I, f) = f ∘ (−)`: column `i` holds `f ∘ pᵢ` in the basis of points of
/// the codomain.
pub fn hom_embed_mor(f: &HMorphism) -> Result<HMorphism> {
    let dom = hom_module(f.dom())?.object;
    let cod = hom_module(f.cod())?.object;
    let ring = f.ring();
    let columns = (0..f.dom().dim())
        .map(|i| Ok(compose(f, &basis_point(f.dom(), i))?.mat().column(0)))
        .collect::<Result<Vec<_>>>()?;
    let mat = Matrix::from_fn(ring, f.cod().dim(), f.dom().dim(), |r, c| columns[c][r].clone());
    HMorphism::new(&dom, &cod, mat)
}

/// `φ: H(I,X) ⊗ H(I,Y) → H(I, X⊗Y)`, sending `x ⊗ y` to
/// `(x ⊗ y) ∘ λ⁻¹ : I → I⊗I → X⊗Y`.
pub fn monoidal_witness(x: &HObject, y: &HObject) -> Result<HMorphism> {
    let ring = x.ring();
    let hx = hom_module(x)?.object;
    let hy = hom_module(y)?.object;
    let dom = tensor(&hx, &hy)?;
    let cod = hom_module(&tensor(x, y)?)?.object;
    let unit = HObject::unit(ring);
    let lam = coherence_iso(&Coherence::LeftUnitor(unit))?;
    let lam_inv = lam.adjoint()?;
    let mut columns = Vec::with_capacity(dom.dim());
    for i in 0..x.dim() {
        for j in 0..y.dim() {
            let pair = tensor_mor(&basis_point(x, i), &basis_point(y, j))?;
            columns.push(compose(&pair, &lam_inv)?.mat().column(0));
        }
    }
    let mat = Matrix::from_fn(ring, cod.dim(), dom.dim(), |r, c| columns[c][r].clone());
    HMorphism::new(&dom, &cod, mat)
}

/// Reads off `φ: X → Y` from a module map `Φ: H(I,X) → H(I,Y)` via
/// `φ ∘ eᵢ = Φ(eᵢ)`, and checks `H(I, φ) = Φ`.
pub fn full_preimage(x: &HObject, y: &HObject, big_phi: &HMorphism) -> Result<HMorphism> {
    let hx = hom_module(x)?.object;
    let hy = hom_module(y)?.object;
    if big_phi.dom() != &hx || big_phi.cod() != &hy {
        return Err(Error::ObjectMismatch("map is not between the hom modules".into()));
    }
    let ring = x.ring();
    let columns = (0..x.dim())
        .map(|i| Ok(big_phi.apply(&Vector::basis(&hx, i))?.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let mat = Matrix::from_fn(ring, y.dim(), x.dim(), |r, c| columns[c][r].clone());
    let phi = HMorphism::new(x, y, mat)?;
    if hom_embed_mor(&phi)? != *big_phi {
        return Err(Error::Precondition("preimage does not map back".into()));
    }
    Ok(phi)
}
