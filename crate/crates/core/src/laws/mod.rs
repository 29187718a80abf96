//! Seeded property suites. Each suite draws instances from an
//! [`InstanceGenerator`], checks a family of exact identities and returns an
//! [`AuditReport`]. Reports depend only on the suite, ring and generator
//! settings.

mod algebra;
mod functorial;
mod generate;
mod kernels;
mod report;
mod structure;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixture::Fixture;
use crate::hilbmod::HMorphism;
use crate::scalars::ScalarRing;

pub use generate::Gen;
pub use report::{render_json, render_text, AuditReport, Failure, Status};

/// Settings shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceGenerator {
    pub seed: u64,
    pub max_dim: usize,
    /// Largest numerator / denominator magnitude of generated entries.
    pub entry_height: u64,
}

impl Default for InstanceGenerator {
    fn default() -> Self {
        InstanceGenerator { seed: 42, max_dim: 4, entry_height: 4 }
    }
}

/// Every suite, in report order.
pub const SUITES: [&str; 23] = [
    "scalars",
    "semifield",
    "field",
    "ring-flags",
    "char-zero",
    "simple-generator",
    "inner-product",
    "dagger-laws",
    "enrichment",
    "biproduct",
    "monoidal",
    "semimodule",
    "dagger-kernels",
    "dagger-mono-epi",
    "mono-kernel",
    "factorization",
    "factorization-uniqueness",
    "hom-embedding",
    "fullness",
    "extension",
    "boundedness",
    "bound-oracle",
    "non-fullness",
];

const MAX_LISTED_FAILURES: usize = 20;

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Per-suite state: the random stream and the failures found so far.
pub(crate) struct Ctx {
    rng: ChaCha8Rng,
    pub ring: ScalarRing,
    pub samples: usize,
    settings: InstanceGenerator,
    cases: usize,
    failures: Vec<Failure>,
    omitted: usize,
    notes: Vec<String>,
    skipped: bool,
    expect_failure: bool,
}

impl Ctx {
    fn new(suite: &str, ring: ScalarRing, settings: InstanceGenerator, samples: usize) -> Ctx {
        let seed = settings.seed ^ fnv1a(suite) ^ fnv1a(&ring.tag()).rotate_left(17);
        Ctx {
            rng: ChaCha8Rng::seed_from_u64(seed),
            ring,
            samples,
            settings,
            cases: 0,
            failures: Vec::new(),
            omitted: 0,
            notes: Vec::new(),
            skipped: false,
            expect_failure: false,
        }
    }

    pub fn gen(&mut self) -> Gen<'_> {
        self.gen_capped(self.settings.max_dim)
    }

    /// A generator with a smaller dimension cap.
    pub fn gen_capped(&mut self, max_dim: usize) -> Gen<'_> {
        Gen {
            rng: &mut self.rng,
            ring: self.ring,
            max_dim: max_dim.min(self.settings.max_dim),
            height: i64::try_from(self.settings.entry_height).unwrap_or(i64::MAX),
        }
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn skip(&mut self, why: &str) {
        self.skipped = true;
        self.note(why);
    }

    pub fn expect_failure(&mut self, why: &str) {
        self.expect_failure = true;
        self.note(why);
    }

    pub fn fail(&mut self, property: &str, witness: String) {
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(Failure { property: property.to_string(), witness });
        } else {
            self.omitted += 1;
        }
    }

    /// Records a failure unless `outcome` is `Ok(true)`; errors count as
    /// failures and are appended to the witness.
    pub fn check(&mut self, property: &str, outcome: Result<bool>, witness: impl FnOnce() -> String) {
        match outcome {
            Ok(true) => {}
            Ok(false) => self.fail(property, witness()),
            Err(e) => self.fail(property, format!("{} (error: {e})", witness())),
        }
    }

    /// Unwraps a generated instance, recording generator errors.
    pub fn draw<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail("generator", e.to_string());
                None
            }
        }
    }

    fn finish(self, suite: &str) -> AuditReport {
        let mut failures = self.failures;
        let status = if self.skipped {
            Status::Skipped
        } else if self.expect_failure {
            if failures.is_empty() {
                failures.push(Failure {
                    property: "expected-counterexample".into(),
                    witness: "none found".into(),
                });
                Status::Fail
            } else {
                Status::ExpectedFail
            }
        } else if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        AuditReport {
            suite: suite.to_string(),
            ring: self.ring.tag(),
            seed: self.settings.seed,
            cases_run: self.cases,
            status,
            note: self.notes.join("; "),
            failures,
            failures_omitted: self.omitted,
        }
    }
}

/// Serialized morphisms for failure reports; re-parse with
/// [`Fixture::parse`].
pub(crate) fn witness(named: &[(&str, &HMorphism)]) -> String {
    Fixture::of_morphisms(named).to_json_compact().unwrap_or_else(|e| format!("<unserializable: {e}>"))
}

/// Skips suites that need the Gram-matrix model.
pub(crate) fn require_field(ctx: &mut Ctx) -> bool {
    if ctx.ring.is_field() {
        true
    } else {
        let why = format!("needs an involutive field; {} is not one", ctx.ring);
        ctx.skip(&why);
        false
    }
}

pub fn run_suite(
    name: &str,
    ring: ScalarRing,
    settings: &InstanceGenerator,
    samples: usize,
) -> Result<AuditReport> {
    let run: fn(&mut Ctx) = match name {
        "scalars" => algebra::scalars,
        "semifield" => algebra::semifield,
        "field" => algebra::field,
        "ring-flags" => algebra::ring_flags,
        "char-zero" => algebra::char_zero,
        "simple-generator" => algebra::simple_generator,
        "inner-product" => structure::inner_product,
        "dagger-laws" => structure::dagger_laws,
        "enrichment" => structure::enrichment,
        "biproduct" => structure::biproducts,
        "monoidal" => structure::monoidal,
        "semimodule" => structure::semimodule,
        "dagger-kernels" => kernels::dagger_kernels,
        "dagger-mono-epi" => kernels::dagger_mono_epi,
        "mono-kernel" => kernels::mono_kernel,
        "factorization" => kernels::factorization,
        "factorization-uniqueness" => kernels::factorization_uniqueness,
        "hom-embedding" => functorial::hom_embedding,
        "fullness" => functorial::fullness,
        "extension" => functorial::extension,
        "boundedness" => functorial::boundedness,
        "bound-oracle" => functorial::bound_oracle,
        "non-fullness" => functorial::non_fullness,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut ctx = Ctx::new(name, ring, *settings, samples);
    run(&mut ctx);
    Ok(ctx.finish(name))
}

/// Expands `all` and validates names, keeping the canonical order.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>> {
    let mut wanted = Vec::new();
    for n in names {
        if n == "all" {
            wanted.extend(SUITES);
            continue;
        }
        match SUITES.iter().find(|s| **s == n.as_str()) {
            Some(s) => wanted.push(*s),
            None => return Err(Error::UnknownSuite(n.clone())),
        }
    }
    Ok(SUITES.into_iter().filter(|s| wanted.contains(s)).collect())
}
