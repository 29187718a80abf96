use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the involution `‡` acts on a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    Trivial,
    Conjugation,
}

/// Tag describing an involutive commutative semiring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ScalarRing {
    Nat,
    Bool,
    Int,
    Rat,
    GaussRat,
    /// `Q(sqrt d)` for a square-free `d >= 2`, with the trivial involution.
    QuadExt(i64),
}

impl ScalarRing {
    /// The six rings exercised by the audit suites.
    pub const SHIPPED: [ScalarRing; 6] = [
        ScalarRing::Nat,
        ScalarRing::Bool,
        ScalarRing::Int,
        ScalarRing::Rat,
        ScalarRing::GaussRat,
        ScalarRing::QuadExt(2),
    ];

    /// Validated constructor for `Q(sqrt d)`.
    pub fn quad(d: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidRing(format!(
                "quadratic extension needs d >= 2 (real embedding), got {d}"
            )));
        }
        let mut p = 2i64;
        while p * p <= d {
            if d % (p * p) == 0 {
                return Err(Error::InvalidRing(format!("{d} is not square-free")));
            }
            p += 1;
        }
        Ok(ScalarRing::QuadExt(d))
    }

    pub fn involution_kind(self) -> InvolutionKind {
        match self {
            ScalarRing::GaussRat => InvolutionKind::Conjugation,
            _ => InvolutionKind::Trivial,
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, ScalarRing::Rat | ScalarRing::GaussRat | ScalarRing::QuadExt(_))
    }

    /// Every nonzero element is invertible.
    pub fn is_semifield(self) -> bool {
        self.is_field() || self == ScalarRing::Bool
    }

    /// Every element has an additive inverse.
    pub fn has_negation(self) -> bool {
        !matches!(self, ScalarRing::Nat | ScalarRing::Bool)
    }

    pub fn is_zerosumfree(self) -> bool {
        !self.has_negation()
    }

    /// All shipped rings are multiplicatively cancellative.
    pub fn is_mult_cancellative(self) -> bool {
        true
    }

    pub fn tag(self) -> String {
        match self {
            ScalarRing::Nat => "nat".into(),
            ScalarRing::Bool => "bool".into(),
            ScalarRing::Int => "int".into(),
            ScalarRing::Rat => "rat".into(),
            ScalarRing::GaussRat => "gauss".into(),
            ScalarRing::QuadExt(d) => format!("qsqrt{d}"),
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for ScalarRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nat" => Ok(ScalarRing::Nat),
            "bool" => Ok(ScalarRing::Bool),
            "int" => Ok(ScalarRing::Int),
            "rat" => Ok(ScalarRing::Rat),
            "gauss" => Ok(ScalarRing::GaussRat),
            other => match other.strip_prefix("qsqrt") {
                Some(d) => {
                    let d: i64 =
                        d.parse().map_err(|_| Error::InvalidRing(format!("unknown ring `{other}`")))?;
                    ScalarRing::quad(d)
                }
                None => Err(Error::InvalidRing(format!("unknown ring `{other}`"))),
            },
        }
    }
}

impl TryFrom<String> for ScalarRing {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ScalarRing> for String {
    fn from(r: ScalarRing) -> String {
        r.tag()
    }
}
