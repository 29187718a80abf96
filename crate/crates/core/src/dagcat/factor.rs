use std::fmt;
use std::str::FromStr;

use super::{compose, dagger, is_dagger_epi, is_dagger_iso, is_dagger_mono, kernel_with};
use crate::error::{Error, Result};
use crate::hilbmod::HMorphism;
use crate::matrix::Pivoting;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `f = m ∘ e` with `e` a dagger epi.
    DaggerEpiThenMono,
    /// `f = m ∘ e` with `m` a dagger mono.
    EpiThenDaggerMono,
    /// `f = i ∘ u ∘ e` with `e` a dagger epi, `u` an iso and `i` a dagger mono.
    PolarTriple,
}

impl FactorKind {
    pub const ALL: [FactorKind; 3] =
        [FactorKind::DaggerEpiThenMono, FactorKind::EpiThenDaggerMono, FactorKind::PolarTriple];

    pub fn tag(self) -> &'static str {
        match self {
            FactorKind::DaggerEpiThenMono => "dagger-epi-then-mono",
            FactorKind::EpiThenDaggerMono => "epi-then-dagger-mono",
            FactorKind::PolarTriple => "polar-triple",
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FactorKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown factorization kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub kind: FactorKind,
    pub epi: HMorphism,
    /// Only present for [`FactorKind::PolarTriple`].
    pub middle: Option<HMorphism>,
    pub mono: HMorphism,
}

impl Factorization {
    /// `mono ∘ middle ∘ epi`.
    pub fn composite(&self) -> Result<HMorphism> {
        let left = match &self.middle {
            Some(u) => compose(u, &self.epi)?,
            None => self.epi.clone(),
        };
        compose(&self.mono, &left)
    }

    /// Checks the composite and the dagger property of the flagged factors.
    pub fn verify(&self, f: &HMorphism) -> Result<bool> {
        if self.composite()? != *f {
            return Ok(false);
        }
        Ok(match self.kind {
            FactorKind::DaggerEpiThenMono => is_dagger_epi(&self.epi)?,
            FactorKind::EpiThenDaggerMono => is_dagger_mono(&self.mono)?,
            FactorKind::PolarTriple => {
                let middle_iso = match &self.middle {
                    Some(u) => u.mat().is_square() && u.mat().rank()? == u.dom().dim(),
                    None => false,
                };
                is_dagger_epi(&self.epi)? && middle_iso && is_dagger_mono(&self.mono)?
            }
        })
    }
}

pub fn factor(f: &HMorphism, kind: FactorKind) -> Result<Factorization> {
    factor_with(f, kind, Pivoting::default())
}

/// Dagger epi onto the coimage `(ker f)⊥`, then `f` restricted to it.
fn dagger_epi_mono(f: &HMorphism, pivoting: Pivoting) -> Result<(HMorphism, HMorphism)> {
    let k = kernel_with(f, pivoting)?;
    // e = coker(ker f) = (ker (ker f)†)†
    let e = dagger(&kernel_with(&dagger(&k)?, pivoting)?)?;
    let m = compose(f, &dagger(&e)?)?;
    Ok((e, m))
}

pub fn factor_with(f: &HMorphism, kind: FactorKind, pivoting: Pivoting) -> Result<Factorization> {
    match kind {
        FactorKind::DaggerEpiThenMono => {
            let (epi, mono) = dagger_epi_mono(f, pivoting)?;
            Ok(Factorization { kind, epi, middle: None, mono })
        }
        FactorKind::EpiThenDaggerMono => {
            let (e, m) = dagger_epi_mono(&dagger(f)?, pivoting)?;
            Ok(Factorization { kind, epi: dagger(&m)?, middle: None, mono: dagger(&e)? })
        }
        FactorKind::PolarTriple => {
            let (epi, m) = dagger_epi_mono(f, pivoting)?;
            let i = super::image_with(f, pivoting)?;
            let u = compose(&dagger(&i)?, &m)?;
            Ok(Factorization { kind, epi, middle: Some(u), mono: i })
        }
    }
}

fn unitary_or_err(phi: &HMorphism, what: &str) -> Result<()> {
    if is_dagger_iso(phi)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not a dagger isomorphism")))
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(format!("connecting map fails: {what}")))
    }
}

/// The dagger isomorphism between the middle objects of two factorizations
/// of the same morphism and kind. For the dagger-epi kinds it is
/// `e₂ ∘ e₁†` on the coimage side; for the dagger-mono kind `m₂† ∘ m₁`.
pub fn connecting_iso(first: &Factorization, second: &Factorization) -> Result<HMorphism> {
    if first.kind != second.kind {
        return Err(Error::Precondition("factorizations of different kinds".into()));
    }
    if first.composite()? != second.composite()? {
        return Err(Error::DifferentMorphisms);
    }
    match first.kind {
        FactorKind::DaggerEpiThenMono | FactorKind::PolarTriple => {
            let phi = compose(&second.epi, &dagger(&first.epi)?)?;
            unitary_or_err(&phi, "e₂ ∘ e₁†")?;
            require(compose(&phi, &first.epi)? == second.epi, "φ ∘ e₁ = e₂")?;
            if first.kind == FactorKind::PolarTriple {
                let (u1, u2) = match (&first.middle, &second.middle) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(Error::Precondition("polar factorization without middle".into())),
                };
                let psi = compose(&dagger(&second.mono)?, &first.mono)?;
                unitary_or_err(&psi, "i₂† ∘ i₁")?;
                require(compose(&second.mono, &psi)? == first.mono, "i₂ ∘ ψ = i₁")?;
                require(compose(u2, &phi)? == compose(&psi, u1)?, "u₂ ∘ φ = ψ ∘ u₁")?;
            } else {
                require(compose(&second.mono, &phi)? == first.mono, "m₂ ∘ φ = m₁")?;
            }
            Ok(phi)
        }
        FactorKind::EpiThenDaggerMono => {
            let phi = compose(&dagger(&second.mono)?, &first.mono)?;
            unitary_or_err(&phi, "m₂† ∘ m₁")?;
            require(compose(&second.mono, &phi)? == first.mono, "m₂ ∘ φ = m₁")?;
            require(compose(&phi, &first.epi)? == second.epi, "φ ∘ e₁ = e₂")?;
            Ok(phi)
        }
    }
}

/// Exhibits a dagger mono `m` as the kernel of its cokernel: returns the
/// dagger iso `φ = k† ∘ m` with `k ∘ φ = m`, where `k = ker(coker m)`.
pub fn dagger_kernel_iso(m: &HMorphism) -> Result<HMorphism> {
    if !is_dagger_mono(m)? {
        return Err(Error::Precondition("not a dagger mono".into()));
    }
    let k = super::kernel(&super::cokernel(m)?)?;
    let phi = compose(&dagger(&k)?, m)?;
    unitary_or_err(&phi, "k† ∘ m")?;
    require(compose(&k, &phi)? == *m, "k ∘ φ = m")?;
    Ok(phi)
}
