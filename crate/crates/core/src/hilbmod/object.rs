use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{is_positive, Scalar, ScalarRing};

/// A finitely generated free Hilbert module: a dimension and a Hermitian
/// Gram matrix. Over fields the Gram matrix is positive-definite, which
/// makes the inner product strict and nondegenerate.
#[derive(Clone)]
pub struct HObject(Arc<ObjectData>);

struct ObjectData {
    gram: Matrix,
    gram_inv: Option<Matrix>,
}

impl PartialEq for HObject {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.gram == other.0.gram
    }
}

impl Eq for HObject {}

impl fmt::Debug for HObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HObject({}, {})", self.ring(), self.0.gram)
    }
}

/// Nondegeneracy over `Bool`: `x ↦ G x` must be injective on `𝔹^n`.
fn bool_gram_injective(gram: &Matrix) -> Result<bool> {
    let n = gram.rows();
    if n > 16 {
        return Err(Error::Dimension(
            "boolean gram matrices are checked exhaustively up to dimension 16".into(),
        ));
    }
    let image = |x: u32| -> u32 {
        let mut out = 0u32;
        for i in 0..n {
            let hit = (0..n).any(|j| x >> j & 1 == 1 && !gram.get(i, j).is_zero());
            if hit {
                out |= 1 << i;
            }
        }
        out
    };
    let mut seen = std::collections::HashSet::new();
    Ok((0..1u32 << n).all(|x| seen.insert(image(x))))
}

impl HObject {
    /// Validating constructor.
    pub fn new(ring: ScalarRing, dim: usize, gram: Matrix) -> Result<HObject> {
        if gram.ring() != ring {
            return Err(Error::RingMismatch { expected: ring, found: gram.ring() });
        }
        if gram.rows() != dim || gram.cols() != dim {
            return Err(Error::Dimension(format!(
                "gram of a {dim}-dimensional object must be {dim}x{dim}, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let gram_inv = if ring.is_field() {
            if !gram.is_positive_definite()? {
                return Err(Error::NotPositiveDefinite);
            }
            Some(gram.inverse().map_err(|_| Error::SingularGram)?)
        } else {
            // Strictness: over the zerosumfree rings <x,x> = 0 forces the
            // diagonal terms to vanish; over Int it is positive-definiteness.
            let strict = match ring {
                ScalarRing::Int => gram.to_rational().is_positive_definite()?,
                _ => (0..dim).all(|i| !gram.get(i, i).is_zero()),
            };
            if !strict {
                return Err(Error::NotPositiveDefinite);
            }
            let nondegenerate = match ring {
                ScalarRing::Bool => bool_gram_injective(&gram)?,
                _ => !gram.to_rational().determinant()?.is_zero(),
            };
            if !nondegenerate {
                return Err(Error::SingularGram);
            }
            None
        };
        Ok(HObject(Arc::new(ObjectData { gram, gram_inv })))
    }

    /// Skips validation; the caller guarantees that `gram` is valid and
    /// that `gram_inv` is its inverse (present exactly over fields).
    pub(crate) fn from_valid_parts(gram: Matrix, gram_inv: Option<Matrix>) -> HObject {
        debug_assert_eq!(gram_inv.is_some(), gram.ring().is_field());
        HObject(Arc::new(ObjectData { gram, gram_inv }))
    }

    /// `S^n` with the standard inner product.
    pub fn standard(ring: ScalarRing, dim: usize) -> HObject {
        let id = Matrix::identity(ring, dim);
        let inv = ring.is_field().then(|| id.clone());
        HObject::from_valid_parts(id, inv)
    }

    /// The monoidal unit `I = S`.
    pub fn unit(ring: ScalarRing) -> HObject {
        HObject::standard(ring, 1)
    }

    /// The zero object.
    pub fn zero(ring: ScalarRing) -> HObject {
        HObject::standard(ring, 0)
    }

    pub fn ring(&self) -> ScalarRing {
        self.0.gram.ring()
    }

    pub fn dim(&self) -> usize {
        self.0.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.0.gram
    }

    pub fn gram_inverse(&self) -> Option<&Matrix> {
        self.0.gram_inv.as_ref()
    }

    pub fn is_zero_object(&self) -> bool {
        self.dim() == 0
    }

    /// `⟨x, y⟩ = x‡ᵀ G y`.
    pub fn inner_product(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        for v in [x, y] {
            if v.object != *self {
                return Err(Error::ObjectMismatch("vector does not live in this object".into()));
            }
        }
        let g = self.gram();
        let mut acc = Scalar::zero(self.ring());
        for i in 0..self.dim() {
            let xi = x.coords[i].involute();
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                let t = g.get(i, j) * &y.coords[j];
                acc = &acc + &(&xi * &t);
            }
        }
        Ok(acc)
    }
}

/// An element of an object, in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    object: HObject,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(object: &HObject, coords: Vec<Scalar>) -> Result<Vector> {
        if coords.len() != object.dim() {
            return Err(Error::Dimension(format!(
                "vector of length {} in a {}-dimensional object",
                coords.len(),
                object.dim()
            )));
        }
        if let Some(bad) = coords.iter().find(|c| c.ring() != object.ring()) {
            return Err(Error::RingMismatch { expected: object.ring(), found: bad.ring() });
        }
        Ok(Vector { object: object.clone(), coords })
    }

    pub fn basis(object: &HObject, i: usize) -> Vector {
        let ring = object.ring();
        let coords =
            (0..object.dim()).map(|j| if i == j { Scalar::one(ring) } else { Scalar::zero(ring) }).collect();
        Vector { object: object.clone(), coords }
    }

    pub fn object(&self) -> &HObject {
        &self.object
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// As a column matrix, i.e. a morphism out of the unit.
    pub fn as_column(&self) -> Matrix {
        Matrix::from_vec(self.object.ring(), self.coords.len(), 1, self.coords.clone())
            .expect("length checked")
    }
}

/// An adjointable map, represented by its matrix (`cod.dim x dom.dim`).
#[derive(Clone, PartialEq, Eq)]
pub struct HMorphism {
    dom: HObject,
    cod: HObject,
    mat: Matrix,
}

impl fmt::Debug for HMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HMorphism {{ dom: {}, cod: {}, mat: {} }}", self.dom.gram(), self.cod.gram(), self.mat)
    }
}

impl HMorphism {
    pub fn new(dom: &HObject, cod: &HObject, mat: Matrix) -> Result<HMorphism> {
        if dom.ring() != cod.ring() || mat.ring() != dom.ring() {
            return Err(Error::RingMismatch {
                expected: dom.ring(),
                found: if cod.ring() != dom.ring() { cod.ring() } else { mat.ring() },
            });
        }
        if mat.rows() != cod.dim() || mat.cols() != dom.dim() {
            return Err(Error::Dimension(format!(
                "morphism {}→{} needs a {}x{} matrix, got {}x{}",
                dom.dim(),
                cod.dim(),
                cod.dim(),
                dom.dim(),
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(HMorphism { dom: dom.clone(), cod: cod.clone(), mat })
    }

    pub fn dom(&self) -> &HObject {
        &self.dom
    }

    pub fn cod(&self) -> &HObject {
        &self.cod
    }

    pub fn mat(&self) -> &Matrix {
        &self.mat
    }

    pub fn ring(&self) -> ScalarRing {
        self.dom.ring()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.object != self.dom {
            return Err(Error::ObjectMismatch("argument is not in the domain".into()));
        }
        let y = self.mat.mul(&x.as_column());
        Vector::new(&self.cod, y.column(0))
    }

    /// The unique adjoint `f†` with `⟨f x, y⟩ = ⟨x, f† y⟩`:
    /// `G_dom⁻¹ F‡ᵀ G_cod`.
    pub fn adjoint(&self) -> Result<HMorphism> {
        let inv = self.dom.gram_inverse().ok_or(Error::NotAField(self.ring()))?;
        let mat = inv.mul(&self.mat.conj_transpose()).mul(self.cod.gram());
        HMorphism::new(&self.cod, &self.dom, mat)
    }
}

/// `H(S, X)` together with the dagger isomorphism `X ≅ H(S, X)`.
#[derive(Clone, Debug)]
pub struct HomModule {
    /// `H(S, X)` in the basis of points `e_i: S → X`.
    pub object: HObject,
    /// `x ↦ x·(−)`
    pub to_hom: HMorphism,
    /// `φ ↦ φ(1)`
    pub from_hom: HMorphism,
}

/// The point `S → X` picking out the `i`-th basis vector.
pub fn basis_point(x: &HObject, i: usize) -> HMorphism {
    let col = Vector::basis(x, i).as_column();
    HMorphism::new(&HObject::unit(x.ring()), x, col).expect("column shape")
}

/// Builds `H(S, X)` with `⟨φ, ψ⟩ = φ† ∘ ψ (1)`, computing each Gram entry
/// through adjoints of basis points.
pub fn hom_module(x: &HObject) -> Result<HomModule> {
    let ring = x.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    let n = x.dim();
    let points: Vec<HMorphism> = (0..n).map(|i| basis_point(x, i)).collect();
    let daggers = points.iter().map(HMorphism::adjoint).collect::<Result<Vec<_>>>()?;
    let gram = Matrix::from_fn(ring, n, n, |i, j| daggers[i].mat().mul(points[j].mat()).get(0, 0).clone());
    let object = HObject::new(ring, n, gram)?;
    // f(x) = x·(−) sends basis vector i to point i, g(φ) = φ(1) reads it back.
    let to_hom = HMorphism::new(x, &object, Matrix::identity(ring, n))?;
    let from_hom = HMorphism::new(&object, x, Matrix::identity(ring, n))?;
    Ok(HomModule { object, to_hom, from_hom })
}

/// Positivity and strictness of `⟨x, x⟩` for one vector.
pub fn self_inner_is_strict(x: &Vector) -> Result<bool> {
    let n = x.object().inner_product(x, x)?;
    Ok(is_positive(&n) && (n.is_zero() == x.is_zero()))
}
