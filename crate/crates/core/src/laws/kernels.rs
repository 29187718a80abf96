//! Suites about kernels, dagger monos and epis, and factorizations.

use super::{require_field, witness, Ctx, Gen};
use crate::dagcat::{
    cokernel, compose, connecting_iso, dagger, dagger_kernel_iso, equalizer, factor, factor_with, identity,
    image, is_dagger_epi, is_dagger_iso, is_dagger_mono, is_epi, is_mono, kernel, FactorKind, Factorization,
};
use crate::error::Result;
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::Pivoting;

/// Every dagger mono is the kernel of its cokernel, and kernels, cokernels
/// and equalizers have their defining properties.
pub(super) fn dagger_kernels(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            (|| {
                let m = g.dagger_mono()?;
                let f = g.any_morphism()?;
                let h = g.morphism(f.dom(), f.cod())?;
                Ok((m, f, h))
            })()
        };
        let Some((m, f, h)) = ctx.draw(drawn) else { continue };
        ctx.case();
        let wm = || witness(&[("m", &m)]);
        ctx.check("generated m is a dagger mono", is_dagger_mono(&m), wm);
        ctx.check(
            "m ≅ ker(coker m) by a dagger iso",
            dagger_kernel_iso(&m).and_then(|phi| is_dagger_iso(&phi)),
            wm,
        );
        let w = || witness(&[("f", &f), ("h", &h)]);
        let ker = (|| {
            let k = kernel(&f)?;
            Ok(is_dagger_mono(&k)? && compose(&f, &k)?.mat().is_zero())
        })();
        ctx.check("ker f is a dagger mono with f∘k = 0", ker, w);
        let coker = (|| {
            let q = cokernel(&f)?;
            Ok(is_dagger_epi(&q)? && compose(&q, &f)?.mat().is_zero())
        })();
        ctx.check("coker f is a dagger epi with q∘f = 0", coker, w);
        // Anything killed by f factors through ker f as k∘k†∘t.
        let universal = (|| {
            let k = kernel(&f)?;
            let t = compose(&k, &dagger(&k)?)?;
            Ok(compose(&f, &t)?.mat().is_zero() && compose(&k, &compose(&dagger(&k)?, &t)?)? == t)
        })();
        ctx.check("maps killed by f factor through ker f", universal, w);
        let eq = (|| {
            let e = equalizer(&f, &h)?;
            Ok(is_dagger_mono(&e)? && compose(&f, &e)? == compose(&h, &e)?)
        })();
        ctx.check("f∘eq = h∘eq", eq, w);
    }
}

/// An invertible image inclusion: a dagger mono that is also epic.
fn epic_dagger_mono(g: &mut Gen<'_>) -> Result<HMorphism> {
    let x = g.object()?;
    let a = g.dense(&x, &x)?;
    image(&a)
}

/// Epic dagger monos are dagger isos, and dagger epis cancel on the right.
pub(super) fn dagger_mono_epi(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    let mut exercised = 0usize;
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            (|| {
                let m = if g.coin() { epic_dagger_mono(&mut g)? } else { g.dagger_mono()? };
                let f = dagger(&g.dagger_mono()?)?;
                let gm = if g.coin() {
                    dagger(&g.dagger_mono_into(f.cod())?)?
                } else {
                    let z = g.object()?;
                    g.morphism(f.cod(), &z)?
                };
                Ok((m, f, gm))
            })()
        };
        let Some((m, f, g)) = ctx.draw(drawn) else { continue };
        ctx.case();
        let wm = || witness(&[("m", &m)]);
        ctx.check("dagger monos are monic", is_mono(&m), wm);
        let epic_iso = (|| Ok(!is_epi(&m)? || is_dagger_iso(&m)?))();
        ctx.check("an epic dagger mono is a dagger iso", epic_iso, wm);
        let w = || witness(&[("f", &f), ("g", &g)]);
        ctx.check("dagger epis are epic", is_epi(&f), w);
        let cancel = (|| {
            let gf = compose(&g, &f)?;
            if is_dagger_epi(&gf)? {
                exercised += 1;
                is_dagger_epi(&g)
            } else {
                Ok(true)
            }
        })();
        ctx.check("g∘f and f dagger epi ⇒ g dagger epi", cancel, w);
    }
    ctx.note(format!("{exercised} cases met the cancellation hypothesis"));
}

/// `is_mono ⇔ ker = 0 ⇔ full column rank`, and dually for epis.
pub(super) fn mono_kernel(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = ctx.gen().any_morphism();
        let Some(f) = ctx.draw(drawn) else { continue };
        ctx.case();
        let w = || witness(&[("f", &f)]);
        let mono = (|| {
            let rank = f.mat().rank()?;
            let by_kernel = kernel(&f)?.dom().dim() == 0;
            let m = is_mono(&f)?;
            Ok(m == by_kernel && m == (rank == f.dom().dim()))
        })();
        ctx.check("mono ⇔ ker f = 0 ⇔ full column rank", mono, w);
        let epi = (|| {
            let rank = f.mat().rank()?;
            let e = is_epi(&f)?;
            Ok(e == (cokernel(&f)?.cod().dim() == 0) && e == (rank == f.cod().dim()))
        })();
        ctx.check("epi ⇔ coker f = 0 ⇔ full row rank", epi, w);
    }
}

fn factorization_witness(f: &HMorphism, fac: &Factorization) -> String {
    let mut named = vec![("f", f), ("e", &fac.epi), ("m", &fac.mono)];
    if let Some(u) = &fac.middle {
        named.push(("u", u));
    }
    witness(&named)
}

/// The clauses specific to each kind.
fn kind_clauses(fac: &Factorization) -> Result<bool> {
    Ok(match fac.kind {
        FactorKind::DaggerEpiThenMono => {
            compose(&fac.epi, &dagger(&fac.epi)?)? == identity(fac.epi.cod()) && is_mono(&fac.mono)?
        }
        FactorKind::EpiThenDaggerMono => {
            compose(&dagger(&fac.mono)?, &fac.mono)? == identity(fac.mono.dom()) && is_epi(&fac.epi)?
        }
        FactorKind::PolarTriple => {
            let u = fac.middle.as_ref().expect("polar factorizations have a middle");
            is_dagger_epi(&fac.epi)? && is_mono(u)? && is_epi(u)? && is_dagger_mono(&fac.mono)?
        }
    })
}

/// All three factorizations recompose exactly and have the required
/// dagger properties; two pivot orders are connected by a dagger iso.
pub(super) fn factorization(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = ctx.gen().any_morphism();
        let Some(f) = ctx.draw(drawn) else { continue };
        ctx.case();
        for kind in FactorKind::ALL {
            let first = factor(&f, kind);
            let second = factor_with(&f, kind, Pivoting::ReverseColumns);
            let (first, second) = match (first, second) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    ctx.fail(&format!("{kind}: factor"), format!("{} (error: {e})", witness(&[("f", &f)])));
                    continue;
                }
            };
            for fac in [&first, &second] {
                let w = || factorization_witness(&f, fac);
                ctx.check(&format!("{kind}: composite and flags"), fac.verify(&f), w);
                ctx.check(&format!("{kind}: kind clauses"), kind_clauses(fac), w);
            }
            ctx.check(
                &format!("{kind}: pivot orders connected by a dagger iso"),
                connecting_iso(&first, &second).and_then(|phi| is_dagger_iso(&phi)),
                || witness(&[("f", &f)]),
            );
        }
    }
}

/// A dagger iso out of `c` onto a fresh object: an invertible `A` is
/// unitary from `c` to the object with Gram `A⁻‡ G A⁻¹`.
fn random_unitary(g: &mut Gen<'_>, c: &HObject) -> Result<Option<HMorphism>> {
    for _ in 0..8 {
        let a = g.dense_matrix(c.dim(), c.dim());
        let Ok(inv) = a.inverse() else { continue };
        let gram = inv.conj_transpose().mul(c.gram()).mul(&inv);
        let target = HObject::new(c.ring(), c.dim(), gram)?;
        return HMorphism::new(c, &target, a).map(Some);
    }
    Ok(None)
}

/// Replaces the middle object(s) of a factorization through dagger isos.
fn twist(g: &mut Gen<'_>, fac: &Factorization) -> Result<Option<(Factorization, HMorphism)>> {
    let phi = match random_unitary(g, fac.epi.cod())? {
        Some(p) => p,
        None => return Ok(None),
    };
    let phi_inv = dagger(&phi)?;
    let twisted = match &fac.middle {
        None => Factorization {
            kind: fac.kind,
            epi: compose(&phi, &fac.epi)?,
            middle: None,
            mono: compose(&fac.mono, &phi_inv)?,
        },
        Some(u) => {
            let Some(psi) = random_unitary(g, fac.mono.dom())? else { return Ok(None) };
            Factorization {
                kind: fac.kind,
                epi: compose(&phi, &fac.epi)?,
                middle: Some(compose(&psi, &compose(u, &phi_inv)?)?),
                mono: compose(&fac.mono, &dagger(&psi)?)?,
            }
        }
    };
    Ok(Some((twisted, phi)))
}

/// Factorizations are unique up to a unique dagger iso: the connecting map
/// between two pivot orders exists, and a deliberately twisted
/// factorization is connected by exactly the twist.
pub(super) fn factorization_uniqueness(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    let mut isos = 0usize;
    for _ in 0..ctx.samples {
        let drawn = ctx.gen().any_morphism();
        let Some(f) = ctx.draw(drawn) else { continue };
        ctx.case();
        for kind in FactorKind::ALL {
            let w = || witness(&[("f", &f)]);
            let pair =
                factor(&f, kind).and_then(|a| Ok((a, factor_with(&f, kind, Pivoting::ReverseColumns)?)));
            let Some((first, second)) = ctx.draw(pair) else { continue };
            let outcome = connecting_iso(&first, &second).and_then(|phi| is_dagger_iso(&phi));
            if matches!(outcome, Ok(true)) {
                isos += 1;
            }
            ctx.check(&format!("{kind}: pivot orders connected"), outcome, w);
            let self_iso = connecting_iso(&first, &first).map(|phi| phi == identity(first.epi.cod()));
            ctx.check(&format!("{kind}: self-connection is the identity"), self_iso, w);
            let twisted = {
                let mut g = ctx.gen();
                twist(&mut g, &first)
            };
            match twisted {
                Ok(Some((t, phi))) => {
                    let found = connecting_iso(&first, &t).map(|p| p == phi);
                    if matches!(found, Ok(true)) {
                        isos += 1;
                    }
                    ctx.check(&format!("{kind}: twist recovered exactly"), found, || {
                        witness(&[("f", &f), ("phi", &phi)])
                    });
                }
                Ok(None) => {}
                Err(e) => ctx.fail("generator", e.to_string()),
            }
        }
    }
    ctx.note(format!("{isos} connecting isos verified"));
}
