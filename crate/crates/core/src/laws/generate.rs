//! Seeded random instances.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dagcat::{compose, dagger, image, kernel};
use crate::error::Result;
use crate::hilbmod::{HMorphism, HObject, Vector};
use crate::matrix::Matrix;
use crate::scalars::{Scalar, ScalarRing};

/// Draws objects, morphisms, vectors and scalars over one ring.
pub struct Gen<'a> {
    pub rng: &'a mut ChaCha8Rng,
    pub ring: ScalarRing,
    pub max_dim: usize,
    pub height: i64,
}

impl Gen<'_> {
    fn rational(&mut self, positive: bool) -> BigRational {
        let h = self.height.max(1);
        let num = if positive { self.rng.gen_range(1..=h) } else { self.rng.gen_range(-h..=h) };
        let den = self.rng.gen_range(1..=h);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn scalar(&mut self) -> Scalar {
        let h = self.height.max(1);
        match self.ring {
            ScalarRing::Nat => Scalar::Nat(BigUint::from(self.rng.gen_range(0..=h) as u64)),
            ScalarRing::Bool => Scalar::Bool(self.rng.gen_bool(0.5)),
            ScalarRing::Int => Scalar::Int(BigInt::from(self.rng.gen_range(-h..=h))),
            ScalarRing::Rat => Scalar::Rat(self.rational(false)),
            ScalarRing::GaussRat => {
                let re = self.rational(false);
                let im = self.rational(false);
                Scalar::Gauss(re, im)
            }
            ScalarRing::QuadExt(d) => {
                let rational = self.rational(false);
                let surd = self.rational(false);
                Scalar::Quad { d, rational, surd }
            }
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A positive rational embedded in the ring.
    pub fn positive_scalar(&mut self) -> Scalar {
        let q = self.rational(true);
        Scalar::from_rational(self.ring, q).expect("field ring")
    }

    /// `0` with probability 5%, otherwise `1..=max_dim`.
    pub fn dim(&mut self) -> usize {
        if self.max_dim == 0 || self.rng.gen_bool(0.05) {
            0
        } else {
            self.rng.gen_range(1..=self.max_dim)
        }
    }

    pub fn object(&mut self) -> Result<HObject> {
        let n = self.dim();
        self.object_of_dim(n)
    }

    /// Gram matrices: 25% identity, 25% positive diagonal, 50% `B‡ᵀ D B`
    /// with `B` unit upper triangular and `D` positive diagonal.
    pub fn object_of_dim(&mut self, n: usize) -> Result<HObject> {
        let ring = self.ring;
        let roll = self.rng.gen_range(0..4);
        let gram = match roll {
            0 => Matrix::identity(ring, n),
            1 => {
                let d = (0..n).map(|_| self.positive_scalar()).collect();
                Matrix::diagonal(ring, d)
            }
            _ => {
                let d: Vec<Scalar> = (0..n).map(|_| self.positive_scalar()).collect();
                let mut b = Matrix::identity(ring, n);
                for i in 0..n {
                    for j in i + 1..n {
                        let s = self.scalar();
                        b.set(i, j, s);
                    }
                }
                b.conj_transpose().mul(&Matrix::diagonal(ring, d)).mul(&b)
            }
        };
        HObject::new(ring, n, gram)
    }

    pub fn dense_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let ring = self.ring;
        let mut m = Matrix::zeros(ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.rng.gen_bool(0.85) {
                    let s = self.scalar();
                    m.set(i, j, s);
                }
            }
        }
        m
    }

    pub fn dense(&mut self, x: &HObject, y: &HObject) -> Result<HMorphism> {
        let m = self.dense_matrix(y.dim(), x.dim());
        HMorphism::new(x, y, m)
    }

    /// Morphisms: 30% dense, 30% products through dagger epis and monos,
    /// 20% rank-deficient, 20% diagonal or permutation-like.
    pub fn morphism(&mut self, x: &HObject, y: &HObject) -> Result<HMorphism> {
        let roll = self.rng.gen_range(0..10);
        match roll {
            0..=2 => self.dense(x, y),
            3..=5 => {
                let e = dagger(&self.dagger_mono_into(x)?)?;
                let m = self.dagger_mono_into(y)?;
                let r = self.dense(e.cod(), m.dom())?;
                compose(&m, &compose(&r, &e)?)
            }
            6 | 7 => {
                let cap = x.dim().min(y.dim());
                let r = if cap == 0 { 0 } else { self.rng.gen_range(0..cap) };
                let z = HObject::standard(self.ring, r);
                let a = self.dense(x, &z)?;
                let b = self.dense(&z, y)?;
                compose(&b, &a)
            }
            _ => {
                let ring = self.ring;
                let mut m = Matrix::zeros(ring, y.dim(), x.dim());
                let diagonal = self.rng.gen_bool(0.5);
                for j in 0..x.dim() {
                    if y.dim() == 0 {
                        break;
                    }
                    let i = if diagonal {
                        if j >= y.dim() {
                            continue;
                        }
                        j
                    } else {
                        self.rng.gen_range(0..y.dim())
                    };
                    let s = if self.rng.gen_bool(0.5) { Scalar::one(ring) } else { self.nonzero_scalar() };
                    m.set(i, j, s);
                }
                HMorphism::new(x, y, m)
            }
        }
    }

    /// A morphism between freshly drawn objects.
    pub fn any_morphism(&mut self) -> Result<HMorphism> {
        let x = self.object()?;
        let y = self.object()?;
        self.morphism(&x, &y)
    }

    /// Dagger monos into `y`: kernels, image inclusions, or composites.
    pub fn dagger_mono_into(&mut self, y: &HObject) -> Result<HMorphism> {
        match self.rng.gen_range(0..3) {
            0 => {
                let v = self.object()?;
                let a = self.dense(y, &v)?;
                kernel(&a)
            }
            1 => {
                let w = self.object()?;
                let a = self.dense(&w, y)?;
                image(&a)
            }
            _ => {
                let v = self.object()?;
                let outer = kernel(&self.dense(y, &v)?)?;
                let u = self.object()?;
                let inner = kernel(&self.dense(outer.dom(), &u)?)?;
                compose(&outer, &inner)
            }
        }
    }

    pub fn dagger_mono(&mut self) -> Result<HMorphism> {
        let y = self.object()?;
        self.dagger_mono_into(&y)
    }

    pub fn vector(&mut self, x: &HObject) -> Result<Vector> {
        let coords = (0..x.dim()).map(|_| self.scalar()).collect();
        Vector::new(x, coords)
    }

    pub fn usize_below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}
