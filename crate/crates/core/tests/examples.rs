//! Worked examples, each checked against a value computed by hand or by an
//! independent evaluation in the test itself.

use hilbcat::dagcat::{
    biproduct, cokernel, compose, dagger, equalizer, factor, identity, is_dagger_iso, is_dagger_mono, is_epi,
    is_mono, kernel, tensor, zero, FactorKind,
};
use hilbcat::functors::{
    find_bound, hom_embed, hom_embed_mor, is_bound, non_fullness_demo, verify_bound_preserved, Bound,
    CommMonoid, ScalarExtension,
};
use hilbcat::hilbmod::{find_adjoint_finite, tensor_quotient, FiniteSemimodule, FiniteSemiring};
use hilbcat::scalars::{
    char_zero_check, find_cancellation_witness, is_mult_cancellative, is_positive, is_zerosumfree, leq, Check,
};
use hilbcat::{Error, HMorphism, HObject, Matrix, Scalar, ScalarRing, SemiringHom, Vector};

const Q: ScalarRing = ScalarRing::Rat;
const G: ScalarRing = ScalarRing::GaussRat;
const Q2: ScalarRing = ScalarRing::QuadExt(2);

fn s(ring: ScalarRing, text: &str) -> Scalar {
    Scalar::parse(ring, text).unwrap()
}

fn mat(ring: ScalarRing, rows: &[&[&str]]) -> Matrix {
    let rows = rows.iter().map(|r| r.iter().map(|t| s(ring, t)).collect()).collect();
    Matrix::from_rows(ring, rows).unwrap()
}

fn obj(ring: ScalarRing, rows: &[&[&str]]) -> HObject {
    HObject::new(ring, rows.len(), mat(ring, rows)).unwrap()
}

fn std_obj(n: usize) -> HObject {
    HObject::standard(Q, n)
}

fn mor(dom: &HObject, cod: &HObject, rows: &[&[&str]]) -> HMorphism {
    HMorphism::new(dom, cod, mat(dom.ring(), rows)).unwrap()
}

#[test]
fn involution_examples() {
    assert_eq!(s(G, "1+1*i").involute(), s(G, "1-1*i"));
    assert_eq!(s(Q, "3/2").involute(), s(Q, "3/2"));
    assert_eq!(s(Q2, "1+1*sqrt(2)").involute(), s(Q2, "1+1*sqrt(2)"));
}

#[test]
fn positivity_examples() {
    // 1/2 = (1/2)² + (1/2)²
    let half = s(Q, "1/2");
    assert_eq!(&(&half * &half) + &(&half * &half), half);
    assert!(is_positive(&half));
    assert!(!is_positive(&s(Q, "-1")));
    // t‡t = |t|² has zero imaginary part, so i is not a sum of them.
    assert!(!is_positive(&s(G, "1*i")));
    assert!(is_positive(&(&s(G, "1-2*i") * &s(G, "1+2*i"))));
}

#[test]
fn order_examples() {
    assert!(leq(&s(Q, "1/2"), &s(Q, "1")).unwrap());
    assert!(!leq(
        &Scalar::parse(ScalarRing::Nat, "2").unwrap(),
        &Scalar::parse(ScalarRing::Nat, "1").unwrap()
    )
    .unwrap());
    assert!(leq(&Scalar::Bool(false), &Scalar::Bool(true)).unwrap());
    assert!(matches!(leq(&s(Q, "1"), &s(G, "1")), Err(Error::RingMismatch { .. })));
}

#[test]
fn zerosumfree_examples() {
    assert!(is_zerosumfree(ScalarRing::Bool, 10).is_pass());
    match is_zerosumfree(Q, 100) {
        Check::Witness((a, b)) => assert!((&a + &b).is_zero() && !a.is_zero()),
        Check::Pass => panic!("rationals have additive inverses"),
    }
    assert!(is_zerosumfree(ScalarRing::Nat, 10_000).is_pass());
}

#[test]
fn cancellation_examples() {
    assert!(is_mult_cancellative(Q, 1000).is_pass());
    assert!(is_mult_cancellative(ScalarRing::Bool, 8).is_pass());
    // ℚ × ℚ with componentwise operations has zero divisors.
    type P = (i64, i64);
    let elements: Vec<P> = vec![(1, 0), (0, 1), (0, 2)];
    let mul = |a: &P, b: &P| (a.0 * b.0, a.1 * b.1);
    let w = find_cancellation_witness(&elements, &(0, 0), mul).unwrap();
    assert_eq!(w, ((1, 0), (0, 1), (0, 2)));
}

#[test]
fn characteristic_examples() {
    assert!(char_zero_check(Q, 1000).unwrap().is_pass());
    assert!(char_zero_check(G, 1000).unwrap().is_pass());
    assert!(char_zero_check(ScalarRing::Bool, 2).unwrap().is_pass());
    let one = Scalar::Bool(true);
    assert_eq!(&one + &one, one);
}

#[test]
fn inversion_examples() {
    let z = s(G, "1+1*i");
    let inv = z.invert().unwrap();
    assert_eq!(inv, s(G, "1/2-1/2*i"));
    assert!((&z * &inv).is_one());
    assert_eq!(s(Q, "2").invert().unwrap(), s(Q, "1/2"));
    let err = Scalar::parse(ScalarRing::Nat, "2").unwrap().invert().unwrap_err();
    assert!(err.to_string().contains("no inverse"), "{err}");
}

#[test]
fn homomorphism_examples() {
    let qi = SemiringHom::by_name("q-to-qi").unwrap();
    assert_eq!(qi.apply(&s(Q, "3/2")).unwrap(), s(G, "3/2+0*i"));
    let ni = SemiringHom::by_name("nat-to-int").unwrap();
    let four = Scalar::parse(ScalarRing::Nat, "4").unwrap();
    assert_eq!(ni.apply(&four).unwrap(), Scalar::parse(ScalarRing::Int, "4").unwrap());
    let qr = SemiringHom::by_name("q-to-qsqrt2").unwrap();
    assert!(qr.apply(&Scalar::one(Q)).unwrap().is_one());
    assert!(qi.apply(&s(G, "1")).is_err());
}

#[test]
fn object_examples() {
    let x = obj(Q, &[&["1", "0"], &["0", "2"]]);
    assert_eq!(x.gram().leading_principal_minors().unwrap(), vec![s(Q, "1"), s(Q, "2")]);
    let bad = mat(Q, &[&["1", "2"], &["2", "1"]]);
    assert_eq!(bad.determinant().unwrap(), s(Q, "-3"));
    assert_eq!(HObject::new(Q, 2, bad).unwrap_err(), Error::NotPositiveDefinite);
    let z = HObject::new(Q, 0, Matrix::zeros(Q, 0, 0)).unwrap();
    assert!(z.is_zero_object());
    let skew = mat(Q, &[&["1", "1"], &["0", "1"]]);
    assert_eq!(HObject::new(Q, 2, skew).unwrap_err(), Error::NotHermitian);
}

#[test]
fn inner_product_examples() {
    let x = obj(Q, &[&["1", "0"], &["0", "2"]]);
    let ones = Vector::new(&x, vec![s(Q, "1"), s(Q, "1")]).unwrap();
    // 1·1·1 + 1·2·1
    assert_eq!(x.inner_product(&ones, &ones).unwrap(), s(Q, "3"));
    assert!(x.inner_product(&Vector::basis(&x, 0), &Vector::basis(&x, 1)).unwrap().is_zero());
    let c = HObject::standard(G, 2);
    let a = Vector::new(&c, vec![s(G, "1*i"), s(G, "0")]).unwrap();
    let b = Vector::new(&c, vec![s(G, "1"), s(G, "0")]).unwrap();
    assert_eq!(c.inner_product(&a, &b).unwrap(), s(G, "-1*i"));
    let other = Vector::basis(&std_obj(2), 0);
    assert!(matches!(x.inner_product(&other, &ones), Err(Error::ObjectMismatch(_))));
}

#[test]
fn adjoint_examples() {
    let x = obj(Q, &[&["1", "0"], &["0", "2"]]);
    let y = std_obj(2);
    let f = mor(&x, &y, &[&["1", "1"], &["0", "1"]]);
    let fd = f.adjoint().unwrap();
    assert_eq!(fd.mat(), &mat(Q, &[&["1", "0"], &["1/2", "1/2"]]));
    for i in 0..2 {
        for j in 0..2 {
            let (u, v) = (Vector::basis(&x, i), Vector::basis(&y, j));
            let lhs = y.inner_product(&f.apply(&u).unwrap(), &v).unwrap();
            let rhs = x.inner_product(&u, &fd.apply(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    assert_eq!(identity(&x).adjoint().unwrap(), identity(&x));
    let c = HObject::standard(G, 2);
    let g = HMorphism::new(&c, &c, mat(G, &[&["1+1*i", "2"], &["0", "-1*i"]])).unwrap();
    assert_eq!(g.adjoint().unwrap().mat(), &g.mat().conj_transpose());
}

#[test]
fn finite_adjoint_examples() {
    let b = FiniteSemimodule::line(FiniteSemiring::Bool);
    assert_eq!(find_adjoint_finite(&b, &b, &[0, 1]).unwrap(), Some(vec![0, 1]));
    let bb = b.biproduct(&b).unwrap();
    // Elements of 𝔹⊕𝔹 are m·2 + n; the join sends (m, n) to m ∨ n.
    let join = [0, 1, 1, 1];
    let adj = find_adjoint_finite(&bb, &b, &join).unwrap().unwrap();
    assert_eq!(adj, vec![0, 3]);
    let not_additive = [0, 1, 1, 0];
    assert!(matches!(find_adjoint_finite(&bb, &b, &not_additive), Err(Error::NotAHomomorphism(_))));
}

#[test]
fn dagger_mono_examples() {
    // span{(1, 1)} ⊂ ℚ² with the induced Gram [[2]]: m†m = ½·(1 + 1) = 1
    let line = obj(Q, &[&["2"]]);
    let m = mor(&line, &std_obj(2), &[&["1"], &["1"]]);
    assert_eq!(compose(&dagger(&m).unwrap(), &m).unwrap(), identity(&line));
    assert!(is_dagger_mono(&m).unwrap());
    // The same inclusion from the standard line has m†m = 2.
    let m = mor(&std_obj(1), &std_obj(2), &[&["1"], &["1"]]);
    assert!(is_mono(&m).unwrap());
    assert!(!is_dagger_mono(&m).unwrap());

    let two = mor(&std_obj(1), &std_obj(1), &[&["2"]]);
    assert!(is_mono(&two).unwrap() && is_epi(&two).unwrap());
    assert!(!is_dagger_iso(&two).unwrap());
    let id = identity(&std_obj(3));
    assert!(is_mono(&id).unwrap() && is_epi(&id).unwrap() && is_dagger_iso(&id).unwrap());
}

#[test]
fn kernel_examples() {
    let f = mor(&std_obj(2), &std_obj(1), &[&["1", "1"]]);
    let k = kernel(&f).unwrap();
    assert_eq!(k.mat(), &mat(Q, &[&["-1"], &["1"]]));
    assert_eq!(k.dom().gram(), &mat(Q, &[&["2"]]));
    assert!(compose(&f, &k).unwrap().mat().is_zero());
    assert!(is_dagger_mono(&k).unwrap());
    let q = cokernel(&dagger(&f).unwrap()).unwrap();
    assert!(compose(&q, &dagger(&f).unwrap()).unwrap().mat().is_zero());
    assert!(kernel(&identity(&std_obj(2))).unwrap().dom().is_zero_object());
    let e = equalizer(&f, &f).unwrap();
    assert_eq!(e.dom().dim(), 2);
}

#[test]
fn factorization_examples() {
    let f = mor(&std_obj(2), &std_obj(2), &[&["1", "0"], &["0", "0"]]);
    let fac = factor(&f, FactorKind::DaggerEpiThenMono).unwrap();
    assert_eq!(fac.epi.mat(), &mat(Q, &[&["1", "0"]]));
    assert_eq!(fac.epi.cod().gram(), &mat(Q, &[&["1"]]));
    assert_eq!(fac.mono.mat(), &mat(Q, &[&["1"], &["0"]]));
    assert_eq!(compose(&fac.epi, &dagger(&fac.epi).unwrap()).unwrap(), identity(fac.epi.cod()));
    assert_eq!(compose(&fac.mono, &fac.epi).unwrap(), f);

    let z = zero(&std_obj(2), &std_obj(3)).unwrap();
    for kind in FactorKind::ALL {
        let fac = factor(&z, kind).unwrap();
        assert!(fac.epi.cod().is_zero_object(), "{kind}");
        assert!(fac.verify(&z).unwrap());
    }
}

#[test]
fn biproduct_and_tensor_examples() {
    let a = obj(Q, &[&["1", "0"], &["0", "2"]]);
    let b = obj(Q, &[&["3"]]);
    let sum = biproduct(&a, &b).unwrap();
    assert_eq!(sum.object.gram(), &Matrix::diagonal(Q, vec![s(Q, "1"), s(Q, "2"), s(Q, "3")]));
    let with_zero = biproduct(&a, &HObject::zero(Q)).unwrap();
    assert!(is_dagger_iso(&with_zero.injections[0]).unwrap());

    let c = obj(Q, &[&["1", "0"], &["0", "3"]]);
    let t = tensor(&a, &c).unwrap();
    let expected = ["1", "3", "2", "6"].map(|e| s(Q, e)).to_vec();
    assert_eq!(t.gram(), &Matrix::diagonal(Q, expected));
}

#[test]
fn finite_tensor_examples() {
    let b = FiniteSemimodule::line(FiniteSemiring::Bool);
    let b2 = FiniteSemimodule::boolean_power(2).unwrap();
    assert!(tensor_quotient(&b, &b).unwrap().module.is_isomorphic(&b));
    assert!(tensor_quotient(&b2, &b).unwrap().module.is_isomorphic(&b2));
    let z = FiniteSemimodule::zero(FiniteSemiring::Bool);
    assert_eq!(tensor_quotient(&b2, &z).unwrap().module.size(), 1);
}

#[test]
fn hom_embedding_examples() {
    let x = obj(Q, &[&["2"]]);
    let h = hom_embed(&x).unwrap();
    assert_eq!(h.object.gram(), &mat(Q, &[&["2"]]));
    assert_eq!(h.to_hom.mat(), &Matrix::identity(Q, 1));
    let x = obj(Q, &[&["1", "0"], &["0", "2"]]);
    let h = hom_embed(&x).unwrap();
    assert_eq!(h.object.gram(), x.gram());
    assert_eq!(compose(&h.to_hom, &h.from_hom).unwrap(), identity(&h.object));
    assert_eq!(dagger(&h.to_hom).unwrap(), h.from_hom);
    assert!(hom_embed(&HObject::zero(Q)).unwrap().object.is_zero_object());
    assert_eq!(hom_embed_mor(&identity(&x)).unwrap(), identity(&h.object));
}

#[test]
fn extension_examples() {
    let ext = ScalarExtension::by_name("q-to-qi").unwrap();
    let x = obj(Q, &[&["1", "0"], &["0", "2"]]);
    let ex = ext.extend_object(&x).unwrap();
    assert_eq!(ex.ring(), G);
    assert_eq!(ex.gram(), &Matrix::diagonal(G, vec![s(G, "1"), s(G, "2")]));
    let f = mor(&x, &x, &[&["1", "2"], &["-1", "1/3"]]);
    assert_eq!(ext.extend_mor(&dagger(&f).unwrap()).unwrap(), dagger(&ext.extend_mor(&f).unwrap()).unwrap());
    let sum = biproduct(&x, &x).unwrap().object;
    let ex_sum = biproduct(&ex, &ex).unwrap().object;
    assert_eq!(ext.extend_object(&sum).unwrap(), ex_sum);
    assert!(matches!(ext.extend_object(&ex), Err(Error::RingMismatch { .. })));
}

#[test]
fn non_fullness_examples() {
    let r = non_fullness_demo(&CommMonoid::boolean()).unwrap();
    assert_eq!((r.candidates_checked, r.homomorphisms), (4, 2));
    let witness = r.witness.unwrap();
    assert_eq!(witness.len(), 4);
    for refutation in &witness {
        let (x, y) = refutation.at;
        assert_ne!((refutation.candidate[x], refutation.candidate[y]), (y, x));
    }
    assert!(non_fullness_demo(&CommMonoid::trivial()).unwrap().witness.is_none());
    let r = non_fullness_demo(&CommMonoid::threshold(2)).unwrap();
    assert_eq!(r.size, 3);
    assert!(r.witness.is_some());
}

#[test]
fn bound_examples() {
    let one = std_obj(1);
    let g = mor(&one, &one, &[&["2"]]);
    assert!(is_bound(&Bound { value: s(Q, "2") }, &g).unwrap());
    assert!(!is_bound(&Bound { value: s(Q, "1") }, &g).unwrap());
    let z = zero(&std_obj(2), &std_obj(2)).unwrap();
    assert!(is_bound(&Bound { value: s(Q, "0") }, &z).unwrap());

    assert_eq!(find_bound(&identity(&std_obj(2))).unwrap().value, s(Q, "1"));
    let d = mor(&std_obj(2), &std_obj(2), &[&["2", "0"], &["0", "3"]]);
    let b = find_bound(&d).unwrap();
    assert!(leq(&s(Q, "9"), &(&b.value * &b.value)).unwrap());
    assert_eq!(b.value, s(Q, "3"));
    let shear = mor(&std_obj(2), &std_obj(2), &[&["1", "1"], &["0", "1"]]);
    assert!(is_bound(&find_bound(&shear).unwrap(), &shear).unwrap());

    let qi = ScalarExtension::by_name("q-to-qi").unwrap();
    assert!(verify_bound_preserved(&qi, &Bound { value: s(Q, "2") }, &g).unwrap());
    let qr = ScalarExtension::by_name("q-to-qsqrt2").unwrap();
    assert!(verify_bound_preserved(&qr, &Bound { value: s(Q, "1") }, &identity(&std_obj(2))).unwrap());
    assert!(matches!(
        verify_bound_preserved(&qi, &Bound { value: s(Q, "1") }, &g),
        Err(Error::Precondition(_))
    ));
}
