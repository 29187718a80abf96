use std::path::Path;
use std::process::{Command, Output};

use hilbcat::fixture::Fixture;
use serde_json::Value;

fn hilbcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbcat")).args(args).env_remove("HILBCAT_SEED").output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const PROJECTION: &str = r#"{
  "objects": { "X": { "ring": "rat", "dim": 2, "gram": ["1", "0", "0", "1"] } },
  "morphisms": { "f": { "dom": "X", "cod": "X", "mat": ["1", "0", "0", "0"] } }
}"#;

const WEIGHTED: &str = r#"{
  "objects": {
    "X": { "ring": "rat", "dim": 2, "gram": ["1", "0", "0", "2"] },
    "Y": { "ring": "rat", "dim": 1, "gram": ["1"] }
  },
  "morphisms": { "f": { "dom": "X", "cod": "Y", "mat": ["1/2", "-3"] } }
}"#;

#[test]
fn audit_writes_reports_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("reports");
    let out = hilbcat(&[
        "audit",
        "--suite",
        "dagger-laws,mono-kernel",
        "--ring",
        "gauss",
        "--samples",
        "10",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = std::fs::read_to_string(out_dir.join("audit.txt")).unwrap();
    assert_eq!(text, stdout(&out));
    assert!(text.starts_with("dagger-laws [gauss] seed=42 cases=10 PASS"));
    let json: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("audit.json")).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
    assert_eq!(json[1]["suite"], "mono-kernel");
    assert_eq!(json[1]["status"], "pass");
}

#[test]
fn expected_failures_exit_zero() {
    let out = hilbcat(&["audit", "--suite", "semifield", "--ring", "nat", "--samples", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("EXPECTED-FAIL"));
    assert!(stdout(&out).contains("invertible: 2"));
}

#[test]
fn bad_configuration_exits_two() {
    assert_eq!(code(&hilbcat(&["audit", "--ring", "unknown"])), 2);
    assert_eq!(code(&hilbcat(&["audit", "--suite", "nope"])), 2);
    assert_eq!(code(&hilbcat(&["audit", "--max-dim", "0"])), 2);
    assert_eq!(code(&hilbcat(&["audit", "--jobs", "0"])), 2);
    assert_eq!(code(&hilbcat(&["audit", "--seed", "-1"])), 2);
}

#[test]
fn seed_falls_back_to_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hilbcat"))
        .args(["audit", "--suite", "mono-kernel", "--samples", "2"])
        .env("HILBCAT_SEED", "1234")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("seed=1234"));
    let flag = Command::new(env!("CARGO_BIN_EXE_hilbcat"))
        .args(["audit", "--suite", "mono-kernel", "--samples", "2", "--seed", "5"])
        .env("HILBCAT_SEED", "1234")
        .output()
        .unwrap();
    assert!(stdout(&flag).contains("seed=5"));
}

#[test]
fn audit_output_is_independent_of_jobs() {
    let args = ["audit", "--suite", "scalars,dagger-laws,factorization", "--samples", "5"];
    let one = hilbcat(&[&args[..], &["--jobs", "1"]].concat());
    let three = hilbcat(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn factor_projection() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", PROJECTION);
    let out = hilbcat(&["factor", &input]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entry = &json[0];
    assert_eq!(entry["source"], "f");
    let kinds: Vec<&str> =
        entry["factorizations"].as_array().unwrap().iter().map(|f| f["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["dagger-epi-then-mono", "epi-then-dagger-mono", "polar-triple"]);
    let first = &entry["factorizations"][0]["fixture"];
    assert_eq!(first["morphisms"]["e"]["mat"], serde_json::json!(["1", "0"]));
    assert_eq!(first["morphisms"]["m"]["mat"], serde_json::json!(["1", "0"]));
    let transcript = entry["transcript"].as_array().unwrap();
    assert!(transcript.iter().all(|l| l.as_str().unwrap().ends_with(": ok")));
    assert!(transcript.iter().any(|l| l == "dagger-epi-then-mono: e∘e† = id: ok"));
    // Each factor fixture is itself a valid fixture.
    let polar = serde_json::to_string(&entry["factorizations"][2]["fixture"]).unwrap();
    assert_eq!(Fixture::parse(&polar).unwrap().morphisms.len(), 3);
}

#[test]
fn factor_identity_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "id.json",
        &PROJECTION.replace(r#"["1", "0", "0", "0"]"#, r#"["1", "0", "0", "1"]"#),
    );
    let out_path = dir.path().join("out.json");
    let out = hilbcat(&["factor", &input, "--morphism", "f", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let json: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    for fac in json[0]["factorizations"].as_array().unwrap() {
        for m in fac["fixture"]["morphisms"].as_object().unwrap().values() {
            assert_eq!(m["mat"], serde_json::json!(["1", "0", "0", "1"]));
        }
    }
}

#[test]
fn factor_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let malformed =
        write(dir.path(), "bad.json", "{\n  \"objects\": {\n    \"X\": { \"ring\": rat }\n  }\n}\n");
    let out = hilbcat(&["factor", &malformed]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3 column"), "{}", stderr(&out));
    let bad_entry = write(dir.path(), "entry.json", &PROJECTION.replace("\"0\", \"0\"]", "\"0\", \"x\"]"));
    let out = hilbcat(&["factor", &bad_entry]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("morphisms.f.mat[3]"), "{}", stderr(&out));
    let over_int = write(dir.path(), "int.json", &PROJECTION.replace("\"rat\"", "\"int\""));
    assert_eq!(code(&hilbcat(&["factor", &over_int])), 2);
    let input = write(dir.path(), "f.json", PROJECTION);
    assert_eq!(code(&hilbcat(&["factor", &input, "--morphism", "g"])), 2);
    assert_eq!(code(&hilbcat(&["factor", "/nonexistent/fixture.json"])), 2);
}

#[test]
fn extend_to_gaussian_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.json", WEIGHTED);
    let out = hilbcat(&["extend", "q-to-qi", &input]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let fixture = Fixture::parse(&stdout(&out)).unwrap();
    let x = &fixture.objects["X"];
    assert_eq!(x.ring(), hilbcat::ScalarRing::GaussRat);
    assert_eq!(
        x.gram().entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
        ["1+0*i", "0+0*i", "0+0*i", "2+0*i"]
    );
    assert_eq!(fixture.morphisms["f"].mat().get(0, 1).to_string(), "-3+0*i");
    assert!(stderr(&out).contains("f: extension of the adjoint equals adjoint of the extension: ok"));
    // Writing then re-reading reproduces the same fixture.
    assert_eq!(Fixture::parse(&fixture.to_json().unwrap()).unwrap(), fixture);
}

#[test]
fn extend_to_the_quadratic_field_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.json", WEIGHTED);
    let out_path = dir.path().join("ext.json");
    let out = hilbcat(&["extend", "q-to-qsqrt2", &input, "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let fixture = Fixture::parse(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(fixture.objects["Y"].ring(), hilbcat::ScalarRing::QuadExt(2));
}

#[test]
fn extend_rejects_unsuitable_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.json", WEIGHTED);
    let out = hilbcat(&["extend", "nat-to-int", &input]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("needs fields"));
    assert_eq!(code(&hilbcat(&["extend", "q-to-nowhere", &input])), 2);
    let gauss = write(dir.path(), "g.json", &PROJECTION.replace("\"rat\"", "\"gauss\""));
    let out = hilbcat(&["extend", "q-to-qi", &gauss]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("ring mismatch"), "{}", stderr(&out));
}
