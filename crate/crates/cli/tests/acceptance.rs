//! Acceptance criteria, one line per criterion with its time budget.
//! Runs without the libtest harness so the lines always reach the output.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hilbcat::dagcat::{biproduct, tensor};
use hilbcat::functors::{find_bound, is_bound, Bound};
use hilbcat::hilbmod::tensor_quotient;
use hilbcat::laws::{run_suite, AuditReport, InstanceGenerator, Status};
use hilbcat::scalars::{char_zero_check, is_mult_cancellative, is_zerosumfree};
use hilbcat::{FiniteSemimodule, FiniteSemiring, HMorphism, HObject, Matrix, Scalar, ScalarRing, Vector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [ScalarRing; 3] = [ScalarRing::Rat, ScalarRing::GaussRat, ScalarRing::QuadExt(2)];

type Q = BigRational;
type Outcome = Result<String, String>;

fn suite(name: &str, ring: ScalarRing, samples: usize) -> Result<AuditReport, String> {
    let report = run_suite(name, ring, &InstanceGenerator::default(), samples).map_err(|e| e.to_string())?;
    if report.status != Status::Pass {
        return Err(report.to_text());
    }
    Ok(report)
}

/// Runs suites and requires each to pass with at least `min_cases` cases.
fn suites(names: &[&str], rings: &[ScalarRing], samples: usize, min_cases: usize) -> Outcome {
    let mut cases = 0;
    for ring in rings {
        for name in names {
            let r = suite(name, *ring, samples)?;
            if r.cases_run < min_cases {
                return Err(format!("{name} [{ring}] ran only {} cases", r.cases_run));
            }
            cases += r.cases_run;
        }
    }
    Ok(format!("{cases} cases, 0 failures"))
}

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn random_q(rng: &mut ChaCha8Rng, h: i64) -> Q {
    q(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

type Mat = Vec<Vec<Q>>;

fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat {
    (0..rows).map(|_| (0..cols).map(|_| random_q(rng, 4)).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

fn transpose(a: &Mat, cols: usize) -> Mat {
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// `AᵀA + I`: symmetric positive definite.
fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let a = random_mat(rng, n, n);
    let mut g = mat_mul(&transpose(&a, n), &a);
    for (i, row) in g.iter_mut().enumerate() {
        row[i] += Q::one();
    }
    g
}

fn to_lib(a: &Mat, cols: usize) -> Matrix {
    let rows =
        a.iter().map(|r| r.iter().map(|x| Scalar::Rat(x.clone())).collect()).collect::<Vec<Vec<Scalar>>>();
    if rows.is_empty() {
        return Matrix::zeros(ScalarRing::Rat, 0, cols);
    }
    Matrix::from_rows(ScalarRing::Rat, rows).unwrap()
}

fn from_lib(m: &Matrix) -> Mat {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).as_rational().unwrap()).collect()).collect()
}

fn quad_form(g: &Mat, x: &[Q], y: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += xi * &g[i][j] * yj;
        }
    }
    acc
}

fn det(m: &Mat) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut total = Q::zero();
    for j in 0..n {
        let minor: Mat = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

/// A symmetric matrix is PSD iff every principal minor is nonnegative.
fn psd_by_minors(m: &Mat) -> bool {
    let n = m.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Mat = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect();
        !det(&sub).is_negative()
    })
}

fn c1() -> Outcome {
    suites(&["dagger-laws", "enrichment"], &FIELDS, 500, 500)
}

fn c2() -> Outcome {
    suites(&["dagger-kernels"], &FIELDS, 100, 100)
}

fn c3() -> Outcome {
    let mut isos = 0;
    let base = suites(&["factorization"], &FIELDS, 100, 100)?;
    for ring in FIELDS {
        let r = suite("factorization-uniqueness", ring, 100)?;
        isos += r
            .note
            .split_whitespace()
            .next()
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| format!("no iso count in `{}`", r.note))?;
    }
    Ok(format!("{base}; {isos} connecting dagger isos verified"))
}

fn c4() -> Outcome {
    suites(&["hom-embedding"], &FIELDS, 100, 100)
}

fn c5() -> Outcome {
    let ext = suites(&["extension"], &[ScalarRing::Rat], 200, 200)?;
    let demo = suites(&["non-fullness"], &[ScalarRing::Rat], 1, 1)?;
    Ok(format!("extension {ext}; non-fullness {demo}"))
}

fn c6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut inverted = 0;
    for ring in FIELDS {
        let mut n = 0;
        while n < 500 {
            let (a, b) = (random_q(&mut rng, 9), random_q(&mut rng, 9));
            let s = match ring {
                ScalarRing::Rat => Scalar::Rat(a),
                ScalarRing::GaussRat => Scalar::Gauss(a, b),
                ScalarRing::QuadExt(d) => Scalar::Quad { d, rational: a, surd: b },
                _ => unreachable!(),
            };
            if s.is_zero() {
                continue;
            }
            let inv = s.invert().map_err(|e| format!("{s}: {e}"))?;
            if !(&s * &inv).is_one() {
                return Err(format!("{s} times {inv} is not 1"));
            }
            n += 1;
        }
        inverted += n;
        if !char_zero_check(ring, 1000).map_err(|e| e.to_string())?.is_pass() {
            return Err(format!("{ring}: n·1 = 0 for some n ≤ 1000"));
        }
    }
    // Only the naturals and the booleans lack additive inverses; every
    // shipped ring is cancellative.
    let truth = |r: ScalarRing| matches!(r, ScalarRing::Nat | ScalarRing::Bool);
    for ring in ScalarRing::SHIPPED {
        if is_zerosumfree(ring, 10_000).is_pass() != truth(ring) {
            return Err(format!("{ring}: zerosumfree flag wrong"));
        }
        if !is_mult_cancellative(ring, 8_000).is_pass() {
            return Err(format!("{ring}: cancellativity flag wrong"));
        }
    }
    let laws = suites(&["semifield", "field"], &FIELDS, 500, 1)?;
    Ok(format!("{inverted} inversions exact; flags match on 6 rings; suites {laws}"))
}

fn shipped_finite() -> Vec<FiniteSemimodule> {
    let mut out = vec![
        FiniteSemimodule::zero(FiniteSemiring::Bool),
        FiniteSemimodule::line(FiniteSemiring::Bool),
        FiniteSemimodule::boolean_power(2).unwrap(),
        FiniteSemimodule::boolean_power(3).unwrap(),
        FiniteSemimodule::boolean_hyperbolic_plane(),
    ];
    out.retain(|m| m.size() <= 8);
    out
}

/// Recomputes the quotient's tables from its representatives: each class
/// is the function `(x, y) ↦ ∨ ⟨h,x⟩⟨k,y⟩` of its pure tensors.
fn check_quotient(m: &FiniteSemimodule, n: &FiniteSemimodule) -> Result<usize, String> {
    let t = tensor_quotient(m, n).map_err(|e| e.to_string())?;
    let (p, r) = (m.size(), n.size());
    let class_fn = |rep: &[(usize, usize)]| -> Vec<bool> {
        let mut f = vec![false; p * r];
        for &(h, k) in rep {
            for x in 0..p {
                for y in 0..r {
                    f[x * r + y] |= m.inner(h, x) == 1 && n.inner(k, y) == 1;
                }
            }
        }
        f
    };
    let fns: Vec<Vec<bool>> = t.representatives.iter().map(|rep| class_fn(rep)).collect();
    let index: HashMap<&Vec<bool>, usize> = fns.iter().enumerate().map(|(i, f)| (f, i)).collect();
    if index.len() != fns.len() {
        return Err("two classes have the same function".into());
    }
    for (c, rep) in t.representatives.iter().enumerate() {
        for (d, other) in t.representatives.iter().enumerate() {
            let expected = other.iter().any(|&(h, k)| fns[c][h * r + k]);
            if (t.module.inner(c, d) == 1) != expected {
                return Err(format!("inner product of classes {c}, {d} depends on representatives"));
            }
        }
        for h in 0..p {
            for k in 0..r {
                let mut joined = rep.clone();
                joined.push((h, k));
                let f = class_fn(&joined);
                let Some(&target) = index.get(&f) else {
                    return Err("quotient not closed under addition".into());
                };
                let pure = index[&class_fn(&[(h, k)])];
                if t.module.add(c, pure) != target {
                    return Err(format!("addition of class {c} and {h}⊗{k} is wrong"));
                }
            }
        }
    }
    Ok(t.module.size())
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (ga, gb) = (random_gram(&mut rng, a), random_gram(&mut rng, b));
        let x = HObject::new(ScalarRing::Rat, a, to_lib(&ga, a)).map_err(|e| e.to_string())?;
        let y = HObject::new(ScalarRing::Rat, b, to_lib(&gb, b)).map_err(|e| e.to_string())?;
        let sum = biproduct(&x, &y).map_err(|e| e.to_string())?.object;
        let prod = tensor(&x, &y).map_err(|e| e.to_string())?;
        let (gs, gp) = (from_lib(sum.gram()), from_lib(prod.gram()));
        let vec = |rng: &mut ChaCha8Rng, n: usize| (0..n).map(|_| random_q(rng, 4)).collect::<Vec<Q>>();
        let (u1, v1, u2, v2) = (vec(&mut rng, a), vec(&mut rng, b), vec(&mut rng, a), vec(&mut rng, b));
        let cat = |u: &[Q], v: &[Q]| u.iter().chain(v).cloned().collect::<Vec<Q>>();
        let kron = |u: &[Q], v: &[Q]| u.iter().flat_map(|s| v.iter().map(move |t| s * t)).collect::<Vec<Q>>();
        let lhs_sum = quad_form(&gs, &cat(&u1, &v1), &cat(&u2, &v2));
        if lhs_sum != quad_form(&ga, &u1, &u2) + quad_form(&gb, &v1, &v2) {
            return Err("biproduct inner product is not the sum".into());
        }
        let lhs_prod = quad_form(&gp, &kron(&u1, &v1), &kron(&u2, &v2));
        if lhs_prod != quad_form(&ga, &u1, &u2) * quad_form(&gb, &v1, &v2) {
            return Err("tensor inner product is not the product".into());
        }
        let lib =
            |obj: &HObject, w: Vec<Q>| Vector::new(obj, w.into_iter().map(Scalar::Rat).collect()).unwrap();
        let via_lib = sum
            .inner_product(&lib(&sum, cat(&u1, &v1)), &lib(&sum, cat(&u2, &v2)))
            .map_err(|e| e.to_string())?;
        if via_lib != Scalar::Rat(lhs_sum) {
            return Err("library inner product disagrees".into());
        }
    }
    let modules = shipped_finite();
    let mut quotients = 0;
    for m in &modules {
        for n in &modules {
            check_quotient(m, n)?;
            quotients += 1;
        }
    }
    let suite_cases = suites(&["semimodule"], &[ScalarRing::Rat], 100, 100)?;
    Ok(format!("100 object pairs exact; {quotients} tensor quotients well defined; suite {suite_cases}"))
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut bounds, mut refuted, mut non_bounds) = (0, 0, 0);
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (ga, gb) = (random_gram(&mut rng, a), random_gram(&mut rng, b));
        let f = random_mat(&mut rng, b, a);
        let x = HObject::new(ScalarRing::Rat, a, to_lib(&ga, a)).map_err(|e| e.to_string())?;
        let y = HObject::new(ScalarRing::Rat, b, to_lib(&gb, b)).map_err(|e| e.to_string())?;
        let g = HMorphism::new(&x, &y, to_lib(&f, a)).map_err(|e| e.to_string())?;
        let found = find_bound(&g).map_err(|e| e.to_string())?;
        let m = found.value.as_rational().unwrap();
        let pulled = mat_mul(&mat_mul(&transpose(&f, a), &gb), &f);
        for candidate in [m.clone(), &m / q(2, 1), &m / q(4, 1)] {
            let exact =
                is_bound(&Bound { value: Scalar::Rat(candidate.clone()) }, &g).map_err(|e| e.to_string())?;
            let m2 = &candidate * &candidate;
            let diff: Mat =
                (0..a).map(|i| (0..a).map(|j| &m2 * &ga[i][j] - &pulled[i][j]).collect()).collect();
            if exact != psd_by_minors(&diff) {
                return Err(format!("exact test and principal minors disagree at M={candidate}"));
            }
            let mut violated = false;
            for _ in 0..1000 {
                let v: Vec<Q> = (0..a).map(|_| q(rng.gen_range(-20..=20), rng.gen_range(1..=5))).collect();
                if quad_form(&diff, &v, &v).is_negative() {
                    violated = true;
                    break;
                }
            }
            if exact && violated {
                return Err(format!("a sampled vector violates the bound M={candidate}"));
            }
            if exact {
                bounds += 1;
            } else {
                non_bounds += 1;
                refuted += usize::from(violated);
            }
        }
    }
    let suite_cases = suites(&["bound-oracle"], &FIELDS, 100, 100)?;
    Ok(format!(
        "{bounds} bounds never violated by sampling; {refuted}/{non_bounds} non-bounds refuted by a sample; suite {suite_cases}"
    ))
}

/// stdout, `audit.txt` and `audit.json` of one run.
type AuditBytes = (Vec<u8>, Vec<u8>, Vec<u8>);

fn audit_once(dir: &std::path::Path) -> Result<AuditBytes, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hilbcat"))
        .args(["audit", "--suite", "all", "--seed", "42", "--out"])
        .arg(dir)
        .env_remove("HILBCAT_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("audit exited with {}", out.status));
    }
    let read = |f: &str| std::fs::read(dir.join(f)).map_err(|e| e.to_string());
    Ok((out.stdout, read("audit.txt")?, read("audit.json")?))
}

fn c9() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let first = audit_once(&tmp.path().join("first"))?;
    let second = audit_once(&tmp.path().join("second"))?;
    if first != second {
        return Err("reports differ between runs".into());
    }
    Ok(format!("stdout, audit.txt and audit.json identical ({} bytes of JSON)", first.2.len()))
}

fn main() -> ExitCode {
    // (number, description, time limit in seconds, check)
    type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (1, "dagger and enrichment laws", Some(10), c1),
        (2, "every dagger mono is a dagger kernel", Some(10), c2),
        (3, "factorizations and their uniqueness", Some(20), c3),
        (4, "hom-embedding", Some(10), c4),
        (5, "extension of scalars and non-fullness", Some(20), c5),
        (6, "scalar structure", Some(5), c6),
        (7, "sums, tensors and finite tensor quotients", Some(10), c7),
        (8, "exact bounds against sampling", Some(10), c8),
        (9, "determinism of the audit command", None, c9),
    ];
    let mut failed = 0;
    for (n, what, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|s| took < Duration::from_secs(s));
        let ok = outcome.is_ok() && in_time;
        let budget = limit.map_or("no limit".to_string(), |s| format!("limit {s}s"));
        let detail = match &outcome {
            Ok(d) if in_time => d.clone(),
            Ok(d) => format!("over time budget; {d}"),
            Err(e) => e.clone(),
        };
        println!(
            "criterion {n} {} [{:.2}s, {budget}] {what}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
        failed += usize::from(!ok);
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
