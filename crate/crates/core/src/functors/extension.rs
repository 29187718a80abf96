use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, HObject};
use crate::scalars::{Scalar, SemiringHom};

/// Extension of scalars `f*` along an injective, involution-preserving
/// semiring inclusion. On free modules it maps Gram and matrix entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalarExtension {
    hom: SemiringHom,
}

impl ScalarExtension {
    pub fn new(hom: SemiringHom) -> ScalarExtension {
        ScalarExtension { hom }
    }

    pub fn by_name(name: &str) -> Result<ScalarExtension> {
        SemiringHom::by_name(name).map(ScalarExtension::new)
    }

    pub fn hom(&self) -> SemiringHom {
        self.hom
    }

    pub fn apply(&self, s: &Scalar) -> Result<Scalar> {
        self.hom.apply(s)
    }

    fn check_source(&self, x: &HObject) -> Result<()> {
        if x.ring() != self.hom.source() {
            return Err(Error::RingMismatch { expected: self.hom.source(), found: x.ring() });
        }
        Ok(())
    }

    pub fn extend_object(&self, x: &HObject) -> Result<HObject> {
        self.check_source(x)?;
        let target = self.hom.target();
        let gram = x.gram().map(target, |s| self.hom.apply(s))?;
        HObject::new(target, x.dim(), gram)
    }

    pub fn extend_mor(&self, f: &HMorphism) -> Result<HMorphism> {
        self.check_source(f.dom())?;
        let dom = self.extend_object(f.dom())?;
        let cod = self.extend_object(f.cod())?;
        let mat = f.mat().map(self.hom.target(), |s| self.hom.apply(s))?;
        HMorphism::new(&dom, &cod, mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dagcat::{biproduct, dagger};
    use crate::matrix::Matrix;
    use crate::scalars::ScalarRing;

    const Q: ScalarRing = ScalarRing::Rat;

    #[test]
    fn gaussian_extension() {
        let ext = ScalarExtension::by_name("q-to-qi").unwrap();
        let x = HObject::new(Q, 2, Matrix::from_ints(Q, &[&[1, 0], &[0, 2]])).unwrap();
        let ex = ext.extend_object(&x).unwrap();
        let g = ScalarRing::GaussRat;
        assert_eq!(ex.gram(), &Matrix::from_ints(g, &[&[1, 0], &[0, 2]]));
        let y = HObject::standard(Q, 1);
        let f = HMorphism::new(&x, &y, Matrix::from_ints(Q, &[&[3, -1]])).unwrap();
        let lhs = dagger(&ext.extend_mor(&f).unwrap()).unwrap();
        let rhs = ext.extend_mor(&dagger(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let sum = biproduct(&x, &y).unwrap().object;
        let esum =
            biproduct(&ext.extend_object(&x).unwrap(), &ext.extend_object(&y).unwrap()).unwrap().object;
        assert_eq!(ext.extend_object(&sum).unwrap(), esum);
        assert!(ext.extend_object(&ex).is_err());
    }
}
