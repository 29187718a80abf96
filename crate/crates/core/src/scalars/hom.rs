use num_bigint::BigInt;

use super::ring::ScalarRing;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// An injective, involution-preserving homomorphism between shipped rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemiringHom {
    source: ScalarRing,
    target: ScalarRing,
}

impl SemiringHom {
    /// Names accepted: `q-to-qi`, `q-to-qsqrt2`, `nat-to-int`.
    pub fn by_name(name: &str) -> Result<Self> {
        let (source, target) = match name {
            "q-to-qi" => (ScalarRing::Rat, ScalarRing::GaussRat),
            "q-to-qsqrt2" => (ScalarRing::Rat, ScalarRing::QuadExt(2)),
            "nat-to-int" => (ScalarRing::Nat, ScalarRing::Int),
            other => return Err(Error::UnknownExtension(other.to_string())),
        };
        Ok(SemiringHom { source, target })
    }

    /// The inclusion of `source` into `target`, when one is available.
    pub fn inclusion(source: ScalarRing, target: ScalarRing) -> Result<Self> {
        let ok = source == target
            || matches!(
                (source, target),
                (ScalarRing::Rat, ScalarRing::GaussRat)
                    | (ScalarRing::Rat, ScalarRing::QuadExt(_))
                    | (ScalarRing::Nat, ScalarRing::Int)
                    | (ScalarRing::Nat, ScalarRing::Rat)
                    | (ScalarRing::Int, ScalarRing::Rat)
            );
        if ok {
            Ok(SemiringHom { source, target })
        } else {
            Err(Error::UnknownExtension(format!("{source}-to-{target}")))
        }
    }

    pub fn name(&self) -> String {
        match (self.source, self.target) {
            (ScalarRing::Rat, ScalarRing::GaussRat) => "q-to-qi".into(),
            (ScalarRing::Rat, ScalarRing::QuadExt(2)) => "q-to-qsqrt2".into(),
            (ScalarRing::Nat, ScalarRing::Int) => "nat-to-int".into(),
            (s, t) => format!("{s}-to-{t}"),
        }
    }

    pub fn source(&self) -> ScalarRing {
        self.source
    }

    pub fn target(&self) -> ScalarRing {
        self.target
    }

    pub fn apply(&self, s: &Scalar) -> Result<Scalar> {
        if s.ring() != self.source {
            return Err(Error::RingMismatch { expected: self.source, found: s.ring() });
        }
        match s {
            Scalar::Nat(v) if self.target == ScalarRing::Int => Ok(Scalar::Int(BigInt::from(v.clone()))),
            _ => {
                let q = s.as_rational().expect("inclusions start from a rational subring");
                Scalar::from_rational(self.target, q)
            }
        }
    }
}
