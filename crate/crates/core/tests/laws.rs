use hilbcat::laws::{render_json, resolve_suites, run_suite, InstanceGenerator, Status, SUITES};
use hilbcat::{Error, ScalarRing};

fn run(suite: &str, ring: ScalarRing, seed: u64, samples: usize) -> hilbcat::laws::AuditReport {
    let settings = InstanceGenerator { seed, ..InstanceGenerator::default() };
    run_suite(suite, ring, &settings, samples).unwrap()
}

#[test]
fn every_suite_is_ok_on_every_ring() {
    for ring in ScalarRing::SHIPPED {
        for suite in SUITES {
            let report = run(suite, ring, 42, 20);
            assert!(report.is_ok(), "{}", report.to_text());
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for suite in ["dagger-kernels", "factorization-uniqueness", "boundedness", "scalars"] {
        let a = run(suite, ScalarRing::GaussRat, 9, 10);
        let b = run(suite, ScalarRing::GaussRat, 9, 10);
        assert_eq!(a, b);
        assert_eq!(render_json(&[a]), render_json(&[b]));
    }
}

#[test]
fn seeds_change_the_instances() {
    let a = run("mono-kernel", ScalarRing::Rat, 1, 10);
    let b = run("mono-kernel", ScalarRing::Rat, 2, 10);
    assert_eq!(a.seed, 1);
    assert_eq!(b.seed, 2);
    assert_eq!(a.status, Status::Pass);
}

#[test]
fn semifield_fails_as_expected_on_naturals() {
    let report = run("semifield", ScalarRing::Nat, 42, 20);
    assert_eq!(report.status, Status::ExpectedFail);
    assert_eq!(report.failures[0].witness, "2");
}

#[test]
fn field_fails_as_expected_on_bool() {
    let report = run("field", ScalarRing::Bool, 42, 20);
    assert_eq!(report.status, Status::ExpectedFail);
    assert!(report.failures.iter().any(|f| f.property == "additive inverse"));
}

#[test]
fn bool_is_a_simple_generator() {
    assert_eq!(run("simple-generator", ScalarRing::Bool, 42, 20).status, Status::Pass);
}

#[test]
fn extension_is_skipped_off_the_rationals() {
    assert_eq!(run("extension", ScalarRing::GaussRat, 42, 5).status, Status::Skipped);
    assert_eq!(run("extension", ScalarRing::Rat, 42, 5).status, Status::Pass);
}

#[test]
fn field_suites_skip_semirings() {
    let report = run("dagger-kernels", ScalarRing::Nat, 42, 5);
    assert_eq!(report.status, Status::Skipped);
    assert_eq!(report.cases_run, 0);
}

#[test]
fn factorization_uniqueness_on_gaussian_rationals() {
    let report = run("factorization-uniqueness", ScalarRing::GaussRat, 7, 15);
    assert_eq!(report.status, Status::Pass, "{}", report.to_text());
    assert!(report.note.contains("connecting isos verified"));
}

#[test]
fn suite_names_resolve_in_canonical_order() {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    assert_eq!(resolve_suites(&names(&["all"])).unwrap(), SUITES.to_vec());
    assert_eq!(
        resolve_suites(&names(&["fullness", "scalars", "fullness"])).unwrap(),
        vec!["scalars", "fullness"]
    );
    assert_eq!(resolve_suites(&names(&["nope"])).unwrap_err(), Error::UnknownSuite("nope".into()));
    assert!(run_suite("nope", ScalarRing::Rat, &InstanceGenerator::default(), 1).is_err());
}
