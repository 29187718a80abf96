use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::ScalarRing;
use crate::error::{Error, Result};

/// An exact element of one of the shipped rings.
///
/// Rationals are always reduced with a positive denominator (guaranteed by
/// `BigRational`), so derived equality is equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Nat(BigUint),
    Bool(bool),
    Int(BigInt),
    Rat(BigRational),
    /// `re + im * i`
    Gauss(BigRational, BigRational),
    /// `rational + surd * sqrt(d)`
    Quad {
        d: i64,
        rational: BigRational,
        surd: BigRational,
    },
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn ring(&self) -> ScalarRing {
        match self {
            Scalar::Nat(_) => ScalarRing::Nat,
            Scalar::Bool(_) => ScalarRing::Bool,
            Scalar::Int(_) => ScalarRing::Int,
            Scalar::Rat(_) => ScalarRing::Rat,
            Scalar::Gauss(..) => ScalarRing::GaussRat,
            Scalar::Quad { d, .. } => ScalarRing::QuadExt(*d),
        }
    }

    pub fn zero(ring: ScalarRing) -> Scalar {
        match ring {
            ScalarRing::Nat => Scalar::Nat(BigUint::zero()),
            ScalarRing::Bool => Scalar::Bool(false),
            ScalarRing::Int => Scalar::Int(BigInt::zero()),
            ScalarRing::Rat => Scalar::Rat(BigRational::zero()),
            ScalarRing::GaussRat => Scalar::Gauss(BigRational::zero(), BigRational::zero()),
            ScalarRing::QuadExt(d) => {
                Scalar::Quad { d, rational: BigRational::zero(), surd: BigRational::zero() }
            }
        }
    }

    pub fn one(ring: ScalarRing) -> Scalar {
        match ring {
            ScalarRing::Nat => Scalar::Nat(BigUint::one()),
            ScalarRing::Bool => Scalar::Bool(true),
            ScalarRing::Int => Scalar::Int(BigInt::one()),
            ScalarRing::Rat => Scalar::Rat(BigRational::one()),
            ScalarRing::GaussRat => Scalar::Gauss(BigRational::one(), BigRational::zero()),
            ScalarRing::QuadExt(d) => {
                Scalar::Quad { d, rational: BigRational::one(), surd: BigRational::zero() }
            }
        }
    }

    /// Embeds a rational number. Fails for `Nat`/`Int`/`Bool` unless the
    /// value lies in the ring.
    pub fn from_rational(ring: ScalarRing, q: BigRational) -> Result<Scalar> {
        let not_in = || Error::Precondition(format!("{q} is not an element of {ring}"));
        match ring {
            ScalarRing::Rat => Ok(Scalar::Rat(q)),
            ScalarRing::GaussRat => Ok(Scalar::Gauss(q, BigRational::zero())),
            ScalarRing::QuadExt(d) => Ok(Scalar::Quad { d, rational: q, surd: BigRational::zero() }),
            ScalarRing::Int if q.is_integer() => Ok(Scalar::Int(q.to_integer())),
            ScalarRing::Nat if q.is_integer() && !q.is_negative() => {
                Ok(Scalar::Nat(q.to_integer().to_biguint().expect("nonnegative")))
            }
            ScalarRing::Bool if q.is_zero() || q.is_one() => Ok(Scalar::Bool(q.is_one())),
            _ => Err(not_in()),
        }
    }

    /// `n` as an element of `ring`; negative values need a ring with negation.
    pub fn from_int(ring: ScalarRing, n: i64) -> Result<Scalar> {
        match ring {
            ScalarRing::Bool => Ok(Scalar::Bool(n != 0)),
            _ => Scalar::from_rational(ring, rat(n, 1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Nat(v) => v.is_zero(),
            Scalar::Bool(b) => !b,
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Gauss(a, b) => a.is_zero() && b.is_zero(),
            Scalar::Quad { rational, surd, .. } => rational.is_zero() && surd.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.ring())
    }

    /// The involution `‡`: complex conjugation on `GaussRat`, identity elsewhere.
    pub fn involute(&self) -> Scalar {
        match self {
            Scalar::Gauss(a, b) => Scalar::Gauss(a.clone(), -b),
            other => other.clone(),
        }
    }

    fn same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch { expected: self.ring(), found: other.ring() })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Nat(a), Scalar::Nat(b)) => Scalar::Nat(a + b),
            (Scalar::Bool(a), Scalar::Bool(b)) => Scalar::Bool(*a || *b),
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Gauss(a, b), Scalar::Gauss(c, e)) => Scalar::Gauss(a + c, b + e),
            (Scalar::Quad { d, rational: a, surd: b }, Scalar::Quad { rational: c, surd: e, .. }) => {
                Scalar::Quad { d: *d, rational: a + c, surd: b + e }
            }
            _ => unreachable!("rings checked"),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Nat(a), Scalar::Nat(b)) => Scalar::Nat(a * b),
            (Scalar::Bool(a), Scalar::Bool(b)) => Scalar::Bool(*a && *b),
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Gauss(a, b), Scalar::Gauss(c, e)) => Scalar::Gauss(a * c - b * e, a * e + b * c),
            (Scalar::Quad { d, rational: a, surd: b }, Scalar::Quad { rational: c, surd: e, .. }) => {
                let dq = BigRational::from_integer(BigInt::from(*d));
                Scalar::Quad { d: *d, rational: a * c + dq * b * e, surd: a * e + b * c }
            }
            _ => unreachable!("rings checked"),
        })
    }

    pub fn checked_neg(&self) -> Result<Scalar> {
        match self {
            Scalar::Nat(_) | Scalar::Bool(_) if self.is_zero() => Ok(self.clone()),
            Scalar::Nat(_) | Scalar::Bool(_) => {
                Err(Error::NoInverse(format!("{self} has no additive inverse in {}", self.ring())))
            }
            Scalar::Int(a) => Ok(Scalar::Int(-a)),
            Scalar::Rat(a) => Ok(Scalar::Rat(-a)),
            Scalar::Gauss(a, b) => Ok(Scalar::Gauss(-a, -b)),
            Scalar::Quad { d, rational, surd } => {
                Ok(Scalar::Quad { d: *d, rational: -rational, surd: -surd })
            }
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        self.checked_add(&other.checked_neg()?)
    }

    /// Multiplicative inverse. Errors on zero and on non-units of `Nat`/`Int`.
    pub fn invert(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NoInverse("zero has no inverse".into()));
        }
        match self {
            Scalar::Bool(_) => Ok(self.clone()),
            Scalar::Nat(_) | Scalar::Int(_) if self.is_one() => Ok(self.clone()),
            Scalar::Int(v) if (-v).is_one() => Ok(self.clone()),
            Scalar::Nat(_) | Scalar::Int(_) => {
                Err(Error::NoInverse(format!("{self} has no inverse in {}", self.ring())))
            }
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip())),
            Scalar::Gauss(a, b) => {
                let norm = a * a + b * b;
                Ok(Scalar::Gauss(a / &norm, -b / &norm))
            }
            Scalar::Quad { d, rational, surd } => {
                let dq = BigRational::from_integer(BigInt::from(*d));
                let norm = rational * rational - dq * surd * surd;
                Ok(Scalar::Quad { d: *d, rational: rational / &norm, surd: -surd / &norm })
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        self.checked_mul(&other.invert()?)
    }

    /// `n · self`, computed by repeated doubling of additions.
    pub fn times(&self, n: u64) -> Scalar {
        let mut acc = Scalar::zero(self.ring());
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc + &base;
            }
            base = &base + &base;
            k >>= 1;
        }
        acc
    }

    /// Magnitude used to rank elimination pivots: the largest absolute
    /// numerator among the rational coordinates.
    pub fn pivot_weight(&self) -> BigInt {
        match self {
            Scalar::Nat(v) => BigInt::from(v.clone()),
            Scalar::Bool(b) => BigInt::from(*b as u8),
            Scalar::Int(v) => v.abs(),
            Scalar::Rat(v) => v.numer().abs(),
            Scalar::Gauss(a, b) => a.numer().abs().max(b.numer().abs()),
            Scalar::Quad { rational, surd, .. } => rational.numer().abs().max(surd.numer().abs()),
        }
    }

    /// A rational upper bound on the absolute value under every embedding
    /// into the complex numbers.
    pub fn abs_upper_bound(&self) -> BigRational {
        match self {
            Scalar::Nat(v) => BigRational::from_integer(BigInt::from(v.clone())),
            Scalar::Bool(b) => BigRational::from_integer(BigInt::from(*b as u8)),
            Scalar::Int(v) => BigRational::from_integer(v.abs()),
            Scalar::Rat(v) => v.abs(),
            Scalar::Gauss(a, b) => a.abs() + b.abs(),
            Scalar::Quad { d, rational, surd } => {
                let root = num_integer::Roots::sqrt(d) + 1;
                rational.abs() + surd.abs() * BigRational::from_integer(BigInt::from(root))
            }
        }
    }

    /// The rational value, if the scalar lies in the prime field / integers.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Nat(v) => Some(BigRational::from_integer(BigInt::from(v.clone()))),
            Scalar::Bool(b) => Some(BigRational::from_integer(BigInt::from(*b as u8))),
            Scalar::Int(v) => Some(BigRational::from_integer(v.clone())),
            Scalar::Rat(v) => Some(v.clone()),
            Scalar::Gauss(a, b) if b.is_zero() => Some(a.clone()),
            Scalar::Quad { rational, surd, .. } if surd.is_zero() => Some(rational.clone()),
            _ => None,
        }
    }
}

fn expect<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
}

// Operator forms panic on ring mismatch or missing negation; the checked
// methods are the fallible API. Matrices and morphisms validate rings at
// construction, so internal arithmetic goes through these.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        expect(self.checked_add(rhs))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        expect(self.checked_sub(rhs))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        expect(self.checked_mul(rhs))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        expect(self.checked_neg())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
