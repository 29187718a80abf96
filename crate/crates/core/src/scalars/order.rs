//! Positivity and the canonical order `r ≤ s iff r + p = s` for a positive `p`.
//!
//! Positives are the additive closure of `{ t‡t }`. Over `Rat` and `Int`
//! these are the nonnegative numbers, over `GaussRat` the nonnegative
//! rationals, and over `Q(sqrt d)` the totally nonnegative elements (every
//! totally positive element of a number field is a sum of squares).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Sign test for `a + b·sqrt(d)` with `d > 0`.
fn quad_nonnegative(d: i64, a: &BigRational, b: &BigRational) -> bool {
    let dq = BigRational::from_integer(BigInt::from(d));
    match (a.is_negative(), b.is_negative()) {
        (false, false) => true,
        (true, true) => false,
        (false, true) => a * a >= dq * b * b,
        (true, false) => dq * b * b >= a * a,
    }
}

/// True iff `s` is a finite sum of elements `t‡t`.
pub fn is_positive(s: &Scalar) -> bool {
    match s {
        Scalar::Nat(_) | Scalar::Bool(_) => true,
        Scalar::Int(v) => !v.is_negative(),
        Scalar::Rat(v) => !v.is_negative(),
        Scalar::Gauss(a, b) => b.is_zero() && !a.is_negative(),
        Scalar::Quad { d, rational, surd } => {
            quad_nonnegative(*d, rational, surd) && quad_nonnegative(*d, rational, &-surd)
        }
    }
}

/// The canonical order of the ring.
pub fn leq(r: &Scalar, s: &Scalar) -> Result<bool> {
    if r.ring() != s.ring() {
        return Err(Error::RingMismatch { expected: r.ring(), found: s.ring() });
    }
    Ok(match (r, s) {
        (Scalar::Nat(a), Scalar::Nat(b)) => a <= b,
        // 0 + p = s always solvable; 1 + p = 1 only.
        (Scalar::Bool(a), Scalar::Bool(b)) => !a || *b,
        _ => {
            debug_assert!(r.ring().has_negation());
            is_positive(&(s - r))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::scalar::rat;
    use num_bigint::BigUint;

    #[test]
    fn positivity_examples() {
        // 1/2 = (1/2)² + (1/2)²
        let half = Scalar::Rat(rat(1, 2));
        assert_eq!(&(&half * &half) + &(&half * &half), half);
        assert!(is_positive(&half));
        assert!(!is_positive(&Scalar::Rat(rat(-1, 1))));
        assert!(!is_positive(&Scalar::Gauss(rat(0, 1), rat(1, 1))));
    }

    #[test]
    fn gauss_norm_forms_are_nonnegative_rationals() {
        // t‡t = a² + b² with zero imaginary part, for a brute-force box of t.
        for a in -4..=4 {
            for b in -4..=4 {
                let t = Scalar::Gauss(rat(a, 2), rat(b, 3));
                let n = &t.involute() * &t;
                assert!(matches!(&n, Scalar::Gauss(_, im) if im.is_zero()));
                assert!(is_positive(&n));
            }
        }
    }

    #[test]
    fn quadratic_positivity_is_total() {
        let q = |a: i64, b: i64| Scalar::Quad { d: 2, rational: rat(a, 1), surd: rat(b, 1) };
        assert!(is_positive(&q(3, 2))); // 3 ± 2√2 > 0
        assert!(!is_positive(&q(1, 1))); // 1 − √2 < 0
        assert!(!is_positive(&q(-1, 1)));
        assert!(is_positive(&q(0, 0)));
        // (1+√2)² = 3 + 2√2
        assert_eq!(&q(1, 1) * &q(1, 1), q(3, 2));
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&Scalar::Rat(rat(1, 2)), &Scalar::Rat(rat(1, 1))).unwrap());
        assert!(!leq(&Scalar::Nat(BigUint::from(2u8)), &Scalar::Nat(BigUint::from(1u8))).unwrap());
        assert!(leq(&Scalar::Bool(false), &Scalar::Bool(true)).unwrap());
        assert!(!leq(&Scalar::Bool(true), &Scalar::Bool(false)).unwrap());
        assert!(leq(&Scalar::Rat(rat(1, 1)), &Scalar::Gauss(rat(1, 1), rat(0, 1))).is_err());
    }
}
