//! String forms: `p/q` for rationals, `a+b*i` for Gaussian rationals,
//! `a+b*sqrt(d)` for quadratic extensions, plain digits for `Nat`/`Int`/`Bool`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ring::ScalarRing;
use super::scalar::Scalar;
use crate::error::{Error, Result};

fn write_with_part(
    f: &mut fmt::Formatter<'_>,
    rational: &BigRational,
    part: &BigRational,
    unit: &str,
) -> fmt::Result {
    if part.is_negative() {
        write!(f, "{rational}-{}*{unit}", -part)
    } else {
        write!(f, "{rational}+{part}*{unit}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Nat(v) => write!(f, "{v}"),
            Scalar::Bool(b) => write!(f, "{}", *b as u8),
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => write!(f, "{v}"),
            Scalar::Gauss(a, b) => write_with_part(f, a, b, "i"),
            Scalar::Quad { d, rational, surd } => write_with_part(f, rational, surd, &format!("sqrt({d})")),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    if s.is_empty() || s.starts_with('+') || s.contains(char::is_whitespace) {
        return Err(Error::Parse(format!("invalid rational `{s}`")));
    }
    s.parse::<BigRational>().map_err(|e| Error::Parse(format!("invalid rational `{s}`: {e}")))
}

/// Splits `a+b*unit` / `a-b*unit` / `b*unit` / `a` into rational parts.
fn parse_with_part(s: &str, unit: &str) -> Result<(BigRational, BigRational)> {
    let suffix = format!("*{unit}");
    let Some(body) = s.strip_suffix(suffix.as_str()) else {
        return Ok((parse_rational(s)?, BigRational::zero()));
    };
    let split =
        body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
    match split {
        Some(i) => {
            let (re, im) = body.split_at(i);
            let im = im.strip_prefix('+').unwrap_or(im);
            Ok((parse_rational(re)?, parse_rational(im)?))
        }
        None => Ok((BigRational::zero(), parse_rational(body)?)),
    }
}

impl Scalar {
    /// Parses the canonical string form of an element of `ring`.
    pub fn parse(ring: ScalarRing, text: &str) -> Result<Scalar> {
        let s = text.trim();
        let bad = |what: &str| Error::Parse(format!("invalid {what} `{s}`"));
        match ring {
            ScalarRing::Nat => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("natural number"));
                }
                s.parse::<BigUint>().map(Scalar::Nat).map_err(|_| bad("natural number"))
            }
            ScalarRing::Bool => match s {
                "0" => Ok(Scalar::Bool(false)),
                "1" => Ok(Scalar::Bool(true)),
                _ => Err(bad("boolean")),
            },
            ScalarRing::Int => {
                let digits = s.strip_prefix('-').unwrap_or(s);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("integer"));
                }
                s.parse::<BigInt>().map(Scalar::Int).map_err(|_| bad("integer"))
            }
            ScalarRing::Rat => parse_rational(s).map(Scalar::Rat),
            ScalarRing::GaussRat => {
                let (a, b) = parse_with_part(s, "i")?;
                Ok(Scalar::Gauss(a, b))
            }
            ScalarRing::QuadExt(d) => {
                if let Some(pos) = s.find("*sqrt(") {
                    let tail = &s[pos + 6..];
                    let given = tail
                        .strip_suffix(')')
                        .and_then(|t| t.parse::<i64>().ok())
                        .ok_or_else(|| bad("quadratic surd"))?;
                    if given != d {
                        return Err(Error::Parse(format!("`{s}` uses sqrt({given}) but the ring is {ring}")));
                    }
                }
                let (rational, surd) = parse_with_part(s, &format!("sqrt({d})"))?;
                Ok(Scalar::Quad { d, rational, surd })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::scalar::rat;

    #[test]
    fn canonical_strings() {
        assert_eq!(Scalar::Rat(rat(6, 4)).to_string(), "3/2");
        assert_eq!(Scalar::Rat(rat(-4, 1)).to_string(), "-4");
        assert_eq!(Scalar::Gauss(rat(3, 2), rat(0, 1)).to_string(), "3/2+0*i");
        assert_eq!(Scalar::Gauss(rat(1, 1), rat(-1, 2)).to_string(), "1-1/2*i");
        let q = Scalar::Quad { d: 2, rational: rat(1, 1), surd: rat(-3, 4) };
        assert_eq!(q.to_string(), "1-3/4*sqrt(2)");
        assert_eq!(Scalar::Bool(true).to_string(), "1");
    }

    #[test]
    fn parses_loose_forms() {
        let g = Scalar::parse(ScalarRing::GaussRat, "-1/2*i").unwrap();
        assert_eq!(g, Scalar::Gauss(rat(0, 1), rat(-1, 2)));
        let g = Scalar::parse(ScalarRing::GaussRat, "-1-2*i").unwrap();
        assert_eq!(g, Scalar::Gauss(rat(-1, 1), rat(-2, 1)));
        let g = Scalar::parse(ScalarRing::GaussRat, "7").unwrap();
        assert_eq!(g, Scalar::Gauss(rat(7, 1), rat(0, 1)));
        let q = Scalar::parse(ScalarRing::QuadExt(2), "1/3+2*sqrt(2)").unwrap();
        assert_eq!(q, Scalar::Quad { d: 2, rational: rat(1, 3), surd: rat(2, 1) });
    }

    #[test]
    fn rejects_malformed_input() {
        for (ring, s) in [
            (ScalarRing::Rat, "1/0"),
            (ScalarRing::Rat, "abc"),
            (ScalarRing::Rat, ""),
            (ScalarRing::Nat, "-1"),
            (ScalarRing::Bool, "2"),
            (ScalarRing::Int, "1.5"),
            (ScalarRing::GaussRat, "1+*i"),
            (ScalarRing::QuadExt(2), "1+1*sqrt(3)"),
        ] {
            assert!(Scalar::parse(ring, s).is_err(), "{ring} accepted `{s}`");
        }
    }
}
