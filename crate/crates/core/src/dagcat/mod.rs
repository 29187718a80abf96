//! Categorical structure on Gram-matrix modules: dagger, biproducts,
//! enrichment, tensor products, dagger kernels and the factorization system.

mod biproduct;
mod factor;
mod kernels;
mod monoidal;

pub use crate::hilbmod::tensor_quotient as fsm_tensor_quotient;
pub use biproduct::{
    add, add_via_biproduct, biproduct, biproduct_mor, codiagonal, codiagonal_n, diagonal, diagonal_n,
    direct_sum_n, scalar_mul, scalar_mul_via_unitors, BiproductWitness,
};
pub use factor::{connecting_iso, dagger_kernel_iso, factor, factor_with, FactorKind, Factorization};
pub use kernels::{cokernel, cokernel_with, equalizer, image, image_with, kernel, kernel_with};
pub use monoidal::{coherence_iso, scalar_morphism, tensor, tensor_mor, Coherence};

use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::{Matrix, Pivoting};

/// `g ∘ f`.
pub fn compose(g: &HMorphism, f: &HMorphism) -> Result<HMorphism> {
    if g.dom() != f.cod() {
        return Err(Error::ObjectMismatch(format!(
            "cannot compose: codomain of dimension {} does not match domain of dimension {}",
            f.cod().dim(),
            g.dom().dim()
        )));
    }
    HMorphism::new(f.dom(), g.cod(), g.mat().mul(f.mat()))
}

pub fn dagger(f: &HMorphism) -> Result<HMorphism> {
    f.adjoint()
}

pub fn identity(x: &HObject) -> HMorphism {
    HMorphism::new(x, x, Matrix::identity(x.ring(), x.dim())).expect("square identity")
}

pub fn zero(x: &HObject, y: &HObject) -> Result<HMorphism> {
    HMorphism::new(x, y, Matrix::zeros(x.ring(), y.dim(), x.dim()))
}

fn is_identity(m: &Matrix) -> bool {
    *m == Matrix::identity(m.ring(), m.rows())
}

/// `f† ∘ f = id`.
pub fn is_dagger_mono(f: &HMorphism) -> Result<bool> {
    Ok(is_identity(compose(&dagger(f)?, f)?.mat()))
}

/// `f ∘ f† = id`.
pub fn is_dagger_epi(f: &HMorphism) -> Result<bool> {
    Ok(is_identity(compose(f, &dagger(f)?)?.mat()))
}

pub fn is_dagger_iso(f: &HMorphism) -> Result<bool> {
    Ok(is_dagger_mono(f)? && is_dagger_epi(f)?)
}

/// Injectivity: the nullspace is trivial.
pub fn is_mono(f: &HMorphism) -> Result<bool> {
    Ok(f.mat().nullspace(Pivoting::default())?.cols() == 0)
}

/// `f` is epic exactly when `f†` is monic.
pub fn is_epi(f: &HMorphism) -> Result<bool> {
    is_mono(&dagger(f)?)
}

/// `f − g` for parallel morphisms over a ring with negation.
pub fn subtract(f: &HMorphism, g: &HMorphism) -> Result<HMorphism> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::ObjectMismatch("morphisms are not parallel".into()));
    }
    if !f.ring().has_negation() {
        return Err(Error::NotAField(f.ring()));
    }
    HMorphism::new(f.dom(), f.cod(), f.mat().sub(g.mat()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Scalar, ScalarRing};

    const Q: ScalarRing = ScalarRing::Rat;

    fn std(n: usize) -> HObject {
        HObject::standard(Q, n)
    }

    fn obj(rows: &[&[i64]]) -> HObject {
        HObject::new(Q, rows.len(), Matrix::from_ints(Q, rows)).unwrap()
    }

    fn mor(x: &HObject, y: &HObject, rows: &[&[i64]]) -> HMorphism {
        HMorphism::new(x, y, Matrix::from_ints(Q, rows)).unwrap()
    }

    #[test]
    fn predicates() {
        let m = mor(&obj(&[&[2]]), &std(2), &[&[1], &[1]]);
        assert!(is_dagger_mono(&m).unwrap());
        assert!(!is_dagger_epi(&m).unwrap());
        let two = mor(&std(1), &std(1), &[&[2]]);
        assert!(is_mono(&two).unwrap() && is_epi(&two).unwrap());
        assert!(!is_dagger_iso(&two).unwrap());
        let id = identity(&obj(&[&[1, 0], &[0, 2]]));
        for p in [is_dagger_mono, is_dagger_epi, is_dagger_iso, is_mono, is_epi] {
            assert!(p(&id).unwrap());
        }
    }

    #[test]
    fn dagger_basics() {
        let x = obj(&[&[1, 0], &[0, 2]]);
        let f = mor(&x, &std(2), &[&[1, 1], &[0, 1]]);
        assert_eq!(dagger(&dagger(&f).unwrap()).unwrap(), f);
        assert_eq!(compose(&identity(&std(2)), &f).unwrap(), f);
        let z = zero(&x, &std(3)).unwrap();
        assert_eq!(dagger(&z).unwrap(), zero(&std(3), &x).unwrap());
        assert!(compose(&f, &f).is_err());
    }

    #[test]
    fn scalar_one_and_zero() {
        let f = mor(&std(2), &std(2), &[&[1, 2], &[3, 4]]);
        assert_eq!(scalar_mul(&Scalar::one(Q), &f).unwrap(), f);
        assert_eq!(scalar_mul(&Scalar::zero(Q), &f).unwrap(), zero(&std(2), &std(2)).unwrap());
    }
}
