//! Seeded inputs for the benchmarks.

use hilbcat::{HMorphism, HObject, Matrix, Scalar, ScalarRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn entry(rng: &mut ChaCha8Rng, ring: ScalarRing, height: i64) -> Scalar {
    let mut q = || {
        BigRational::new(
            BigInt::from(rng.gen_range(-height..=height)),
            BigInt::from(rng.gen_range(1..=height)),
        )
    };
    match ring {
        ScalarRing::GaussRat => Scalar::Gauss(q(), q()),
        ScalarRing::QuadExt(d) => Scalar::Quad { d, rational: q(), surd: q() },
        _ => Scalar::Rat(q()),
    }
}

/// A dense `rows × cols` matrix with entries of height at most `height`.
pub fn dense(rng: &mut ChaCha8Rng, ring: ScalarRing, rows: usize, cols: usize, height: i64) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |_, _| entry(rng, ring, height))
}

/// A matrix of the given rank, as a product of two dense factors.
pub fn low_rank(rng: &mut ChaCha8Rng, ring: ScalarRing, n: usize, rank: usize) -> Matrix {
    dense(rng, ring, n, rank, 3).mul(&dense(rng, ring, rank, n, 3))
}

/// An object with Gram `A‡A + I`.
pub fn object(rng: &mut ChaCha8Rng, ring: ScalarRing, n: usize) -> HObject {
    let a = dense(rng, ring, n, n, 3);
    let gram = a.conj_transpose().mul(&a).add(&Matrix::identity(ring, n));
    HObject::new(ring, n, gram).expect("A‡A + I is positive definite")
}

/// A rank-deficient endomorphism of a random object.
pub fn morphism(rng: &mut ChaCha8Rng, ring: ScalarRing, n: usize) -> HMorphism {
    let x = object(rng, ring, n);
    let m = low_rank(rng, ring, n, n.saturating_sub(1).max(1));
    HMorphism::new(&x, &x, m).expect("square matrix on one object")
}
