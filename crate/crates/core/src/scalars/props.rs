//! Searches for counterexamples to ring-level properties over a
//! deterministic enumeration of small elements.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;

use super::ring::ScalarRing;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Outcome of a bounded search: no counterexample, or the first one found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<W> {
    Pass,
    Witness(W),
}

impl<W> Check<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

/// Canonical rationals ordered by height `max(|p|, q)`, then denominator,
/// then `|p|` with the positive sign first.
fn rationals(count: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::from_integer(BigInt::from(0))];
    let mut h: i64 = 1;
    while out.len() < count {
        for q in 1..=h {
            for a in 1..=h {
                if a.max(q) == h && a.gcd(&q) == 1 {
                    for p in [a, -a] {
                        out.push(BigRational::new(BigInt::from(p), BigInt::from(q)));
                    }
                }
            }
        }
        h += 1;
    }
    out.truncate(count);
    out
}

/// The first `count` elements of `ring` in a fixed enumeration
/// (`0, 1, -1, 2, -2, 1/2, ...`; pairs enumerated diagonally for the
/// two-coordinate rings).
pub fn small_elements(ring: ScalarRing, count: usize) -> Vec<Scalar> {
    match ring {
        ScalarRing::Bool => [false, true].into_iter().take(count).map(Scalar::Bool).collect(),
        ScalarRing::Nat => (0..count as u64).map(|n| Scalar::Nat(BigUint::from(n))).collect(),
        ScalarRing::Int => (0..count as i64)
            .map(|k| {
                let v = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
                Scalar::Int(BigInt::from(v))
            })
            .collect(),
        ScalarRing::Rat => rationals(count).into_iter().map(Scalar::Rat).collect(),
        ScalarRing::GaussRat | ScalarRing::QuadExt(_) => {
            let side = (count as f64).sqrt().ceil() as usize + 1;
            let base = rationals(side);
            let mut out = Vec::with_capacity(count);
            'diag: for total in 0..(2 * side) {
                for i in 0..=total.min(side - 1) {
                    let j = total - i;
                    if j >= side {
                        continue;
                    }
                    let (a, b) = (base[i].clone(), base[j].clone());
                    out.push(match ring {
                        ScalarRing::QuadExt(d) => Scalar::Quad { d, rational: a, surd: b },
                        _ => Scalar::Gauss(a, b),
                    });
                    if out.len() == count {
                        break 'diag;
                    }
                }
            }
            out
        }
    }
}

/// First pair `(s, t)` with `s + t = 0` and `(s, t) != (0, 0)`.
pub fn find_zero_sum_witness<T, A>(elements: &[T], zero: &T, add: A) -> Option<(T, T)>
where
    T: Clone + PartialEq,
    A: Fn(&T, &T) -> T,
{
    for s in elements {
        for t in elements {
            if (s != zero || t != zero) && add(s, t) == *zero {
                return Some((s.clone(), t.clone()));
            }
        }
    }
    None
}

/// First triple `(s, r, t)` with `s != 0`, `r != t` and `s·r = s·t`.
pub fn find_cancellation_witness<T, M>(elements: &[T], zero: &T, mul: M) -> Option<(T, T, T)>
where
    T: Clone + PartialEq,
    M: Fn(&T, &T) -> T,
{
    for s in elements.iter().filter(|s| *s != zero) {
        for r in elements {
            for t in elements {
                if r != t && mul(s, r) == mul(s, t) {
                    return Some((s.clone(), r.clone(), t.clone()));
                }
            }
        }
    }
    None
}

fn elements_for_pairs(ring: ScalarRing, budget: usize) -> Vec<Scalar> {
    let n = ((budget as f64).sqrt().ceil() as usize).max(2);
    small_elements(ring, n)
}

/// Zerosumfree check over roughly `budget` pairs (exhaustive for `Bool`).
pub fn is_zerosumfree(ring: ScalarRing, budget: usize) -> Check<(Scalar, Scalar)> {
    let elems = elements_for_pairs(ring, budget);
    match find_zero_sum_witness(&elems, &Scalar::zero(ring), |a, b| a + b) {
        Some(w) => Check::Witness(w),
        None => Check::Pass,
    }
}

/// Multiplicative cancellativity over roughly `budget` triples.
pub fn is_mult_cancellative(ring: ScalarRing, budget: usize) -> Check<(Scalar, Scalar, Scalar)> {
    let n = ((budget as f64).cbrt().ceil() as usize).max(2);
    let elems = small_elements(ring, n);
    match find_cancellation_witness(&elems, &Scalar::zero(ring), |a, b| a * b) {
        Some(w) => Check::Witness(w),
        None => Check::Pass,
    }
}

/// Verifies `n·1 != 0` for `1 <= n <= n_max`, returning the first `n` that fails.
pub fn char_zero_check(ring: ScalarRing, n_max: u64) -> Result<Check<u64>> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    let one = Scalar::one(ring);
    let mut acc = Scalar::zero(ring);
    for n in 1..=n_max {
        acc = &acc + &one;
        if acc.is_zero() {
            return Ok(Check::Witness(n));
        }
    }
    Ok(Check::Pass)
}
