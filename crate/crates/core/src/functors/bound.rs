use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::ScalarExtension;
use crate::error::{Error, Result};
use crate::hilbmod::{HMorphism, Vector};
use crate::matrix::Matrix;
use crate::scalars::{leq, Scalar};

/// A scalar `M` with `⟨gx, gx⟩ ≤ M‡M ⟨x, x⟩` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Scalar,
}

/// Binary-search steps used by [`find_bound`] unless told otherwise.
pub const DEFAULT_BOUND_STEPS: u32 = 24;

/// `F‡ᵀ G_Y F`, the Gram form of `x ↦ ⟨gx, gx⟩`.
fn pulled_back_gram(g: &HMorphism) -> Matrix {
    g.mat().conj_transpose().mul(g.cod().gram()).mul(g.mat())
}

/// Decides the bound exactly: `M‡M·G_X − F‡ᵀ G_Y F` must be positive
/// semidefinite.
pub fn is_bound(bound: &Bound, g: &HMorphism) -> Result<bool> {
    if bound.value.ring() != g.ring() {
        return Err(Error::RingMismatch { expected: g.ring(), found: bound.value.ring() });
    }
    let m2 = &bound.value.involute() * &bound.value;
    let diff = g.dom().gram().scale(&m2).sub(&pulled_back_gram(g));
    diff.is_positive_semidefinite()
}

fn rational_scalar(g: &HMorphism, q: BigRational) -> Scalar {
    Scalar::from_rational(g.ring(), q).expect("field rings contain the rationals")
}

/// `⌈√n⌉`.
fn ceil_isqrt(n: &BigUint) -> BigUint {
    let r = n.sqrt();
    if &(&r * &r) < n {
        r + 1u32
    } else {
        r
    }
}

/// A rational `M ≥ √t` within `2⁻ᵏ` of it.
fn rational_sqrt_above(t: &BigRational, k: u32) -> BigRational {
    let scale = BigInt::from(4u32).pow(k);
    let scaled = (t * BigRational::from_integer(scale)).ceil().to_integer();
    let root = ceil_isqrt(&scaled.to_biguint().expect("nonnegative"));
    BigRational::new(BigInt::from(root), BigInt::from(2u32).pow(k))
}

/// Finds a bound: the Gershgorin radius of `G_X⁻¹ F‡ᵀ G_Y F` bounds its
/// eigenvalues, binary search then tightens the squared bound `t` using the
/// exact PSD test, and `M` is a rational square root of `t` rounded up.
pub fn find_bound(g: &HMorphism) -> Result<Bound> {
    find_bound_with(g, DEFAULT_BOUND_STEPS)
}

pub fn find_bound_with(g: &HMorphism, steps: u32) -> Result<Bound> {
    let inv = g.dom().gram_inverse().ok_or(Error::NotAField(g.ring()))?;
    let a = inv.mul(&pulled_back_gram(g));
    let radius = (0..a.rows())
        .map(|i| a.row(i).iter().fold(BigRational::zero(), |acc, s| acc + s.abs_upper_bound()))
        .max()
        .unwrap_or_else(BigRational::zero);
    let passes = |t: &BigRational| -> Result<bool> {
        let s = rational_scalar(g, t.clone());
        let diff = g.dom().gram().scale(&s).sub(&pulled_back_gram(g));
        diff.is_positive_semidefinite()
    };
    let mut lo = BigRational::zero();
    let mut hi = radius;
    if passes(&lo)? {
        hi = lo.clone();
    }
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..steps {
        if hi <= lo {
            break;
        }
        let mid = (&lo + &hi) / &two;
        if passes(&mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let m = rational_sqrt_above(&hi, steps.min(40));
    Ok(Bound { value: rational_scalar(g, m) })
}

/// Pushes a bound along an extension of scalars and re-checks it.
pub fn verify_bound_preserved(ext: &ScalarExtension, bound: &Bound, g: &HMorphism) -> Result<bool> {
    if !is_bound(bound, g)? {
        return Err(Error::Precondition("the scalar does not bound the morphism".into()));
    }
    let image = Bound { value: ext.apply(&bound.value)? };
    is_bound(&image, &ext.extend_mor(g)?)
}

/// Sampling form of the bound at one vector:
/// `⟨gx, gx⟩ ≤ M‡M ⟨x, x⟩` in the scalar order.
pub fn bound_holds_at(bound: &Bound, g: &HMorphism, x: &Vector) -> Result<bool> {
    let gx = g.apply(x)?;
    let lhs = g.cod().inner_product(&gx, &gx)?;
    let m2 = &bound.value.involute() * &bound.value;
    let rhs = &m2 * &g.dom().inner_product(x, x)?;
    leq(&lhs, &rhs)
}
