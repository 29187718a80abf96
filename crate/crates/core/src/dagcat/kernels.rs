use super::{dagger, subtract};
use crate::error::Result;
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::{Matrix, Pivoting};

/// Inclusion of the span of `basis`'s columns, with the induced Gram
/// `B‡ᵀ G B`; isometric by construction.
fn inclusion(x: &HObject, basis: Matrix) -> Result<HMorphism> {
    let gram = basis.conj_transpose().mul(x.gram()).mul(&basis);
    let sub = HObject::new(x.ring(), basis.cols(), gram)?;
    HMorphism::new(&sub, x, basis)
}

pub fn kernel(f: &HMorphism) -> Result<HMorphism> {
    kernel_with(f, Pivoting::default())
}

pub fn kernel_with(f: &HMorphism, pivoting: Pivoting) -> Result<HMorphism> {
    inclusion(f.dom(), f.mat().nullspace(pivoting)?)
}

/// `coker f = (ker f†)†`, the projection onto `(im f)⊥`.
pub fn cokernel(f: &HMorphism) -> Result<HMorphism> {
    cokernel_with(f, Pivoting::default())
}

pub fn cokernel_with(f: &HMorphism, pivoting: Pivoting) -> Result<HMorphism> {
    dagger(&kernel_with(&dagger(f)?, pivoting)?)
}

/// `eq(f, g) = ker(f − g)`.
pub fn equalizer(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    kernel(&subtract(f, g)?)
}

/// Inclusion of the column space with its induced Gram.
pub fn image(f: &HMorphism) -> Result<HMorphism> {
    image_with(f, Pivoting::default())
}

pub fn image_with(f: &HMorphism, pivoting: Pivoting) -> Result<HMorphism> {
    inclusion(f.cod(), f.mat().column_space(pivoting)?)
}
