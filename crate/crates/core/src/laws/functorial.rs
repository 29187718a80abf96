//! Suites about the hom-embedding, extension of scalars and bounds.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{require_field, witness, Ctx};
use crate::dagcat::{
    biproduct, biproduct_mor, codiagonal, compose, dagger, equalizer, identity, is_dagger_iso,
    is_dagger_mono, kernel, tensor_mor,
};
use crate::error::Result;
use crate::functors::{
    bound_holds_at, find_bound, full_preimage, hom_embed, hom_embed_mor, is_bound, monoidal_witness,
    non_fullness_demo, verify_bound_preserved, Bound, CommMonoid, ScalarExtension,
};
use crate::hilbmod::{HMorphism, HObject};
use crate::matrix::Matrix;
use crate::scalars::{leq, Scalar, ScalarRing};

/// Connects two dagger monos into the same object: `φ = n† ∘ m` must be a
/// dagger iso with `n ∘ φ = m`.
fn same_subobject(m: &HMorphism, n: &HMorphism) -> Result<bool> {
    if m.cod() != n.cod() || m.dom().dim() != n.dom().dim() {
        return Ok(false);
    }
    let phi = compose(&dagger(n)?, m)?;
    Ok(is_dagger_iso(&phi)? && compose(n, &phi)? == *m)
}

/// `[Φκ₁ Φκ₂]: Φ(X) ⊕ Φ(Y) → Φ(X ⊕ Y)`.
fn sum_comparison(x: &HObject, y: &HObject) -> Result<HMorphism> {
    let b = biproduct(x, y)?;
    let pair = biproduct_mor(&hom_embed_mor(&b.injections[0])?, &hom_embed_mor(&b.injections[1])?)?;
    compose(&codiagonal(&hom_embed(&b.object)?.object)?, &pair)
}

/// `H(I, −)` is a functor preserving †, ⊕, kernels and equalizers, with
/// the canonical witnesses being dagger isos.
pub(super) fn hom_embedding(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            (|| {
                let f = g.any_morphism()?;
                let h = g.morphism(f.dom(), f.cod())?;
                let z = g.object()?;
                let k = g.morphism(f.cod(), &z)?;
                let y = g.object()?;
                Ok((f, h, k, y))
            })()
        };
        let Some((f, h, k, y)) = ctx.draw(drawn) else { continue };
        // Keeps the tensor objects in the monoidal check small.
        let small = ctx.gen_capped(2).object();
        let Some(small) = ctx.draw(small) else { continue };
        ctx.case();
        let w = || witness(&[("f", &f), ("h", &h), ("k", &k)]);
        let x = f.dom();
        let phi = hom_embed_mor;
        let lemma = hom_embed(x).and_then(|hm| {
            Ok(compose(&hm.to_hom, &hm.from_hom)? == identity(&hm.object)
                && compose(&hm.from_hom, &hm.to_hom)? == identity(x)
                && dagger(&hm.to_hom)? == hm.from_hom)
        });
        ctx.check("X ≅ H(I,X) witness equations", lemma, w);
        ctx.check("Φ(id) = id", (|| Ok(phi(&identity(x))? == identity(&hom_embed(x)?.object)))(), w);
        ctx.check(
            "Φ(k∘f) = Φ(k)∘Φ(f)",
            (|| Ok(phi(&compose(&k, &f)?)? == compose(&phi(&k)?, &phi(&f)?)?))(),
            w,
        );
        ctx.check("Φ(f†) = Φ(f)†", (|| Ok(phi(&dagger(&f)?)? == dagger(&phi(&f)?)?))(), w);
        let sums = (|| {
            let glue = sum_comparison(x, &y)?;
            let hx = hom_embed(x)?.object;
            let hy = hom_embed(&y)?.object;
            let iso = is_dagger_iso(&glue)? && glue.dom() == &biproduct(&hx, &hy)?.object;
            let fy = identity(&y);
            let lhs = compose(&phi(&biproduct_mor(&f, &fy)?)?, &glue)?;
            let rhs = compose(&sum_comparison(f.cod(), &y)?, &biproduct_mor(&phi(&f)?, &phi(&fy)?)?)?;
            Ok(iso && lhs == rhs)
        })();
        ctx.check("Φ(X⊕Y) ≅ Φ(X)⊕Φ(Y) naturally", sums, w);
        let kernels = (|| {
            let a = phi(&kernel(&f)?)?;
            Ok(is_dagger_mono(&a)? && same_subobject(&a, &kernel(&phi(&f)?)?)?)
        })();
        ctx.check("Φ(ker f) ≅ ker Φ(f)", kernels, w);
        let equalizers = (|| {
            let a = phi(&equalizer(&f, &h)?)?;
            same_subobject(&a, &equalizer(&phi(&f)?, &phi(&h)?)?)
        })();
        ctx.check("Φ(eq(f,h)) ≅ eq(Φf, Φh)", equalizers, w);
        let monoidal = (|| {
            let m = monoidal_witness(x, &small)?;
            let fy = identity(&small);
            let lhs = compose(&phi(&tensor_mor(&f, &fy)?)?, &m)?;
            let rhs = compose(&monoidal_witness(f.cod(), &small)?, &tensor_mor(&phi(&f)?, &phi(&fy)?)?)?;
            Ok(is_dagger_iso(&m)? && lhs == rhs)
        })();
        ctx.check("φ_{X,Y} is a natural dagger iso", monoidal, w);
    }
}

/// Every module map between hom modules comes from a morphism, and
/// distinct morphisms have distinct images.
pub(super) fn fullness(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            (|| {
                let x = g.object()?;
                let y = g.object()?;
                let hx = hom_embed(&x)?.object;
                let hy = hom_embed(&y)?.object;
                let big = g.morphism(&hx, &hy)?;
                let f = g.morphism(&x, &y)?;
                let h = g.morphism(&x, &y)?;
                Ok((x, y, big, f, h))
            })()
        };
        let Some((x, y, big, f, h)) = ctx.draw(drawn) else { continue };
        ctx.case();
        ctx.check(
            "Φ has a preimage",
            full_preimage(&x, &y, &big).and_then(|p| Ok(hom_embed_mor(&p)? == big)),
            || witness(&[("Phi", &big)]),
        );
        ctx.check(
            "faithful on pairs",
            (|| Ok((f == h) == (hom_embed_mor(&f)? == hom_embed_mor(&h)?)))(),
            || witness(&[("f", &f), ("h", &h)]),
        );
    }
}

fn extensions() -> Vec<ScalarExtension> {
    ["q-to-qi", "q-to-qsqrt2"]
        .into_iter()
        .map(|n| ScalarExtension::by_name(n).expect("shipped extension"))
        .collect()
}

/// Extension of scalars out of the rationals: faithful, strong monoidal,
/// preserves †, ⊕, the order and bounds; and is not full at table level.
pub(super) fn extension(ctx: &mut Ctx) {
    if ctx.ring != ScalarRing::Rat {
        ctx.skip("extensions start from rat");
        return;
    }
    let exts = extensions();
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            (|| {
                let f = g.any_morphism()?;
                let same = g.morphism(f.dom(), f.cod())?;
                let z = g.object()?;
                let k = g.morphism(f.cod(), &z)?;
                let other = g.any_morphism()?;
                let (a, c) = (g.scalar(), g.scalar());
                Ok((f, same, k, other, a, c))
            })()
        };
        let Some((f, h, k, o, a, c)) = ctx.draw(drawn) else { continue };
        ctx.case();
        let w = || witness(&[("f", &f), ("h", &h), ("k", &k), ("o", &o)]);
        for ext in &exts {
            let name = ext.hom().name();
            let e = |m: &HMorphism| ext.extend_mor(m);
            ctx.check(&format!("{name}: preserves †"), (|| Ok(e(&dagger(&f)?)? == dagger(&e(&f)?)?))(), w);
            ctx.check(
                &format!("{name}: preserves composition"),
                (|| Ok(e(&compose(&k, &f)?)? == compose(&e(&k)?, &e(&f)?)?))(),
                w,
            );
            ctx.check(
                &format!("{name}: preserves ⊗"),
                (|| Ok(e(&tensor_mor(&f, &o)?)? == tensor_mor(&e(&f)?, &e(&o)?)?))(),
                w,
            );
            ctx.check(
                &format!("{name}: preserves ⊕"),
                (|| Ok(e(&biproduct_mor(&f, &o)?)? == biproduct_mor(&e(&f)?, &e(&o)?)?))(),
                w,
            );
            ctx.check(&format!("{name}: faithful on pairs"), (|| Ok((f == h) == (e(&f)? == e(&h)?)))(), w);
            let b = &a + &(&c * &c);
            let order = (|| Ok(!leq(&a, &b)? || leq(&ext.apply(&a)?, &ext.apply(&b)?)?))();
            ctx.check(&format!("{name}: preserves ≤"), order, || format!("a={a} b={b}"));
            let bound = find_bound(&f).and_then(|m| verify_bound_preserved(ext, &m, &f));
            ctx.check(&format!("{name}: bounds are preserved"), bound, w);
        }
    }
    ctx.case();
    let demo = non_fullness_demo(&CommMonoid::boolean());
    ctx.check(
        "the swap on X∐X has no preimage",
        demo.map(|r| r.witness.is_some_and(|w| w.len() == r.candidates_checked)),
        || "bool".into(),
    );
}

fn half(s: &Scalar) -> Scalar {
    let q = BigRational::new(BigInt::from(1), BigInt::from(2));
    s * &Scalar::from_rational(s.ring(), q).expect("field ring")
}

/// Independent PSD oracle: every principal minor is nonnegative.
fn principal_minors_nonnegative(m: &Matrix) -> Result<bool> {
    let n = m.rows();
    let zero = Scalar::zero(m.ring());
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = Matrix::from_fn(m.ring(), idx.len(), idx.len(), |i, j| m.get(idx[i], idx[j]).clone());
        if !leq(&zero, &sub.determinant()?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bound_oracle_matrix(b: &Bound, g: &HMorphism) -> Matrix {
    let m2 = &b.value.involute() * &b.value;
    let pulled = g.mat().conj_transpose().mul(g.cod().gram()).mul(g.mat());
    g.dom().gram().scale(&m2).sub(&pulled)
}

/// Found bounds pass the exact test, and the test agrees with a principal
/// minor oracle on the found bound and smaller candidates.
pub(super) fn boundedness(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    let ring = ctx.ring;
    for _ in 0..ctx.samples {
        let drawn = ctx.gen().any_morphism();
        let Some(f) = ctx.draw(drawn) else { continue };
        ctx.case();
        let w = || witness(&[("f", &f)]);
        let Some(found) = ctx.draw(find_bound(&f)) else { continue };
        ctx.check("found bound passes", is_bound(&found, &f), || format!("M={} {}", found.value, w()));
        let doubled = Bound { value: &found.value + &found.value };
        ctx.check("2M is a bound", is_bound(&doubled, &f), w);
        let candidates = [found.value.clone(), half(&found.value), half(&half(&found.value))];
        for value in candidates {
            let b = Bound { value };
            let agree =
                (|| Ok(is_bound(&b, &f)? == principal_minors_nonnegative(&bound_oracle_matrix(&b, &f))?))();
            ctx.check("PSD test agrees with principal minors", agree, || format!("M={} {}", b.value, w()));
        }
        let zero = crate::dagcat::zero(f.dom(), f.cod());
        ctx.check(
            "0 bounds the zero morphism",
            zero.and_then(|z| is_bound(&Bound { value: Scalar::zero(ring) }, &z)),
            w,
        );
        ctx.check(
            "1 bounds the identity",
            is_bound(&Bound { value: Scalar::one(ring) }, &identity(f.dom())),
            w,
        );
    }
}

const VECTORS_PER_MORPHISM: usize = 10;

/// Sampled vectors never contradict the exact decision, for the found
/// bound and for half of it.
pub(super) fn bound_oracle(ctx: &mut Ctx) {
    if !require_field(ctx) {
        return;
    }
    let mut contradicted_half = 0usize;
    for _ in 0..ctx.samples {
        let drawn = {
            let mut g = ctx.gen();
            g.any_morphism().and_then(|f| {
                let xs = (0..VECTORS_PER_MORPHISM).map(|_| g.vector(f.dom())).collect::<Result<Vec<_>>>()?;
                Ok((f, xs))
            })
        };
        let Some((f, xs)) = ctx.draw(drawn) else { continue };
        let Some(found) = ctx.draw(find_bound(&f)) else { continue };
        ctx.case();
        let smaller = Bound { value: half(&found.value) };
        for b in [&found, &smaller] {
            let Some(exact) = ctx.draw(is_bound(b, &f)) else { continue };
            for x in &xs {
                let sampled = bound_holds_at(b, &f, x);
                if b == &smaller && matches!(sampled, Ok(false)) {
                    contradicted_half += 1;
                }
                // A bound must hold at every sample; a failing sample
                // refutes the bound.
                ctx.check(
                    "sampling never contradicts the PSD decision",
                    sampled.map(|s| s || !exact),
                    || {
                        let coords: Vec<String> = x.coords().iter().map(Scalar::to_string).collect();
                        format!("M={} x=({}) {}", b.value, coords.join(", "), witness(&[("f", &f)]))
                    },
                );
            }
        }
    }
    ctx.note(format!(
        "{} vectors per morphism; {contradicted_half} samples refuted M/2",
        VECTORS_PER_MORPHISM
    ));
}

/// Exhaustive table-level search: `f*(g)` never equals the swap for the
/// shipped monoids with more than one element.
pub(super) fn non_fullness(ctx: &mut Ctx) {
    ctx.note("ring-independent; runs on finite monoids");
    let cases = [
        (CommMonoid::boolean(), true, 4),
        (CommMonoid::threshold(2), true, 27),
        (CommMonoid::trivial(), false, 1),
    ];
    for (monoid, expect_witness, candidates) in &cases {
        ctx.case();
        let name = monoid.name().to_string();
        let Some(report) = ctx.draw(non_fullness_demo(monoid)) else { continue };
        ctx.check("witness presence", Ok(report.witness.is_some() == *expect_witness), || name.clone());
        ctx.check("every endofunction checked", Ok(report.candidates_checked == *candidates), || {
            format!("{name}: {} candidates", report.candidates_checked)
        });
        if let Some(refutations) = &report.witness {
            let n = monoid.size();
            // Re-check each refutation independently.
            let valid = refutations.iter().all(|r| {
                let (x, y) = r.at;
                x < n && y < n && (r.candidate[x], r.candidate[y]) != (y, x)
            });
            ctx.check("refutations are genuine", Ok(valid), || name.clone());
        }
    }
    ctx.case();
    let homs = non_fullness_demo(&CommMonoid::boolean()).map(|r| r.homomorphisms == 2);
    ctx.check("bool has exactly two monoid endomorphisms", homs, || "bool".into());
}
