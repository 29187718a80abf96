//! Suites about the scalars themselves.

use std::collections::HashSet;

use num_traits::Signed;

use super::{witness, Ctx};
use crate::dagcat::{compose, image, kernel, scalar_morphism};
use crate::hilbmod::basis_point;
use crate::scalars::{
    char_zero_check, is_mult_cancellative, is_zerosumfree, leq, small_elements, Check, Scalar, ScalarRing,
    SemiringHom,
};

/// Semiring equations, involution laws, order laws, text round trips and
/// the shipped inclusions out of the ring.
pub(super) fn scalars(ctx: &mut Ctx) {
    let ring = ctx.ring;
    let homs: Vec<SemiringHom> = ScalarRing::SHIPPED
        .iter()
        .filter(|t| **t != ring)
        .filter_map(|t| SemiringHom::inclusion(ring, *t).ok())
        .collect();
    for _ in 0..ctx.samples {
        let (a, b, c) = {
            let mut g = ctx.gen();
            (g.scalar(), g.scalar(), g.scalar())
        };
        ctx.case();
        let w = || format!("a={a}, b={b}, c={c}");
        let zero = Scalar::zero(ring);
        let one = Scalar::one(ring);
        ctx.check("additive associativity", Ok(&(&a + &b) + &c == &a + &(&b + &c)), w);
        ctx.check("additive commutativity", Ok(&a + &b == &b + &a), w);
        ctx.check("multiplicative associativity", Ok(&(&a * &b) * &c == &a * &(&b * &c)), w);
        ctx.check("multiplicative commutativity", Ok(&a * &b == &b * &a), w);
        ctx.check("distributivity", Ok(&a * &(&b + &c) == &(&a * &b) + &(&a * &c)), w);
        ctx.check("additive unit", Ok(&zero + &a == a), w);
        ctx.check("multiplicative unit", Ok(&one * &a == a), w);
        ctx.check("zero annihilates", Ok((&zero * &a).is_zero()), w);
        ctx.check("involution is involutive", Ok(a.involute().involute() == a), w);
        ctx.check("involution is additive", Ok((&a + &b).involute() == &a.involute() + &b.involute()), w);
        ctx.check(
            "involution is multiplicative",
            Ok((&a * &b).involute() == &a.involute() * &b.involute()),
            w,
        );
        ctx.check("text round trip", Scalar::parse(ring, &a.to_string()).map(|p| p == a), w);
        ctx.check("leq reflexive", leq(&a, &a), w);
        // A chain a ≤ a + c‡c ≤ a + c‡c + b‡b.
        let b2 = &a + &(&c.involute() * &c);
        let c2 = &b2 + &(&b.involute() * &b);
        let chain = leq(&a, &b2).and_then(|x| Ok(x && leq(&b2, &c2)? && leq(&a, &c2)?));
        ctx.check("leq along positive steps", chain, w);
        let random_chain = leq(&a, &b).and_then(|ab| if ab && leq(&b, &c)? { leq(&a, &c) } else { Ok(true) });
        ctx.check("leq transitive", random_chain, w);
        if let Some(expected) = reference_leq(&a, &b) {
            ctx.check("leq matches the standard order", leq(&a, &b).map(|v| v == expected), w);
        }
        for h in &homs {
            let name = h.name();
            let preserved = (|| {
                Ok(h.apply(&(&a + &b))? == &h.apply(&a)? + &h.apply(&b)?
                    && h.apply(&(&a * &b))? == &h.apply(&a)? * &h.apply(&b)?
                    && h.apply(&a.involute())? == h.apply(&a)?.involute()
                    && h.apply(&zero)?.is_zero()
                    && h.apply(&one)?.is_one()
                    && ((a == b) == (h.apply(&a)? == h.apply(&b)?)))
            })();
            ctx.check(&format!("{name} is an injective *-homomorphism"), preserved, w);
            let monotone = leq(&a, &b2).and_then(|x| Ok(!x || leq(&h.apply(&a)?, &h.apply(&b2)?)?));
            ctx.check(&format!("{name} preserves the order"), monotone, w);
        }
    }
}

/// The order computed independently of the positivity cone, where the
/// ring has an obvious one.
fn reference_leq(a: &Scalar, b: &Scalar) -> Option<bool> {
    match (a, b) {
        (Scalar::Nat(x), Scalar::Nat(y)) => Some(x <= y),
        (Scalar::Bool(x), Scalar::Bool(y)) => Some(!x || *y),
        (Scalar::Int(x), Scalar::Int(y)) => Some(x <= y),
        (Scalar::Rat(x), Scalar::Rat(y)) => {
            // sign of y − x with positive denominators
            let diff = y.numer() * x.denom() - x.numer() * y.denom();
            Some(!diff.is_negative())
        }
        (Scalar::Gauss(xr, xi), Scalar::Gauss(yr, yi)) => Some(xi == yi && xr <= yr),
        _ => None,
    }
}

fn candidates(ctx: &mut Ctx) -> Vec<Scalar> {
    let mut out = small_elements(ctx.ring, 12);
    let extra = ctx.samples;
    let mut g = ctx.gen();
    out.extend((0..extra).map(|_| g.scalar()));
    let mut seen = HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}

/// Every nonzero scalar is invertible.
pub(super) fn semifield(ctx: &mut Ctx) {
    if !ctx.ring.is_semifield() {
        ctx.expect_failure("not a semifield: nonzero scalars without inverses are expected");
    }
    for s in candidates(ctx) {
        if s.is_zero() {
            continue;
        }
        ctx.case();
        match s.invert() {
            Ok(inv) => ctx.check("s·s⁻¹ = 1", Ok((&s * &inv).is_one()), || s.to_string()),
            Err(_) => ctx.fail("invertible", s.to_string()),
        }
    }
}

/// Semifield with additive inverses.
pub(super) fn field(ctx: &mut Ctx) {
    if !ctx.ring.is_field() {
        ctx.expect_failure("not a field: missing additive or multiplicative inverses are expected");
    }
    for s in candidates(ctx) {
        if s.is_zero() {
            continue;
        }
        ctx.case();
        match s.checked_neg() {
            Ok(n) => ctx.check("s + (−s) = 0", Ok((&s + &n).is_zero()), || s.to_string()),
            Err(_) => ctx.fail("additive inverse", s.to_string()),
        }
        match s.invert() {
            Ok(inv) => ctx.check("s·s⁻¹ = 1", Ok((&s * &inv).is_one()), || s.to_string()),
            Err(_) => ctx.fail("invertible", s.to_string()),
        }
    }
}

/// Witness searches for zerosumfreeness and cancellativity agree with the
/// known truth table.
pub(super) fn ring_flags(ctx: &mut Ctx) {
    let ring = ctx.ring;
    ctx.case();
    let zsf = is_zerosumfree(ring, 10_000);
    let w = match &zsf {
        Check::Pass => "no witness".to_string(),
        Check::Witness((s, t)) => format!("{s} + {t} = 0"),
    };
    ctx.check("zerosumfree flag", Ok(zsf.is_pass() == ring.is_zerosumfree()), || w);
    ctx.case();
    let canc = is_mult_cancellative(ring, 8_000);
    let w = match &canc {
        Check::Pass => "no witness".to_string(),
        Check::Witness((s, r, t)) => format!("{s}·{r} = {s}·{t}"),
    };
    ctx.check("cancellative flag", Ok(canc.is_pass() == ring.is_mult_cancellative()), || w);
}

pub(super) fn char_zero(ctx: &mut Ctx) {
    const N_MAX: u64 = 1000;
    if ctx.ring == ScalarRing::Bool {
        ctx.note("1 + 1 = 1 in bool, so n·1 never vanishes");
    }
    let outcome = char_zero_check(ctx.ring, N_MAX);
    ctx.cases = N_MAX as usize;
    match outcome {
        Ok(Check::Pass) => {}
        Ok(Check::Witness(n)) => ctx.fail("n·1 ≠ 0", n.to_string()),
        Err(e) => ctx.fail("n·1 ≠ 0", e.to_string()),
    }
}

/// Scalars are zero or invertible, so `I` has no proper subobjects; and
/// morphisms are separated by points.
pub(super) fn simple_generator(ctx: &mut Ctx) {
    let ring = ctx.ring;
    ctx.note("the cardinality clause of simplicity is assumed, not tested");
    if !ring.is_semifield() {
        ctx.expect_failure("scalars outside the semifield dichotomy are expected");
    }
    for s in candidates(ctx) {
        ctx.case();
        if !s.is_zero() && s.invert().is_err() {
            ctx.fail("zero or invertible", s.to_string());
        }
    }
    if !ring.is_field() {
        ctx.note("generator check needs the Gram-matrix model and was skipped");
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            let s = g.scalar();
            let fg = g.any_morphism().and_then(|f| {
                let other = g.morphism(f.dom(), f.cod())?;
                Ok((f, other))
            });
            (s, fg)
        };
        let (s, fg) = drawn;
        let Some((f, g)) = ctx.draw(fg) else { continue };
        ctx.case();
        let sub = scalar_morphism(&s).and_then(|m| {
            let k = kernel(&m)?.dom().dim();
            let i = image(&m)?.dom().dim();
            Ok(if s.is_zero() { (k, i) == (1, 0) } else { (k, i) == (0, 1) })
        });
        ctx.check("subobjects of I are 0 or I", sub, || s.to_string());
        let x = f.dom();
        let separated = (|| {
            let mut differ = false;
            for i in 0..x.dim() {
                let p = basis_point(x, i);
                differ |= compose(&f, &p)? != compose(&g, &p)?;
            }
            Ok(differ == (f != g))
        })();
        ctx.check("points separate morphisms", separated, || witness(&[("f", &f), ("g", &g)]));
    }
}
