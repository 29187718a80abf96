use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The ring violates the hypotheses and the suite found the
    /// counterexample it should.
    ExpectedFail,
    /// The suite does not apply to the ring.
    Skipped,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "EXPECTED-FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub suite: String,
    pub ring: String,
    pub seed: u64,
    pub cases_run: usize,
    pub status: Status,
    pub note: String,
    pub failures: Vec<Failure>,
    /// Failures beyond those listed.
    pub failures_omitted: usize,
}

impl AuditReport {
    /// No recorded failures.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts toward a zero exit status.
    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} [{}] seed={} cases={} {}",
            self.suite,
            self.ring,
            self.seed,
            self.cases_run,
            self.status.tag()
        );
        if !self.note.is_empty() {
            let _ = write!(out, " ({})", self.note);
        }
        out.push('\n');
        for f in &self.failures {
            let _ = writeln!(out, "  - {}: {}", f.property, f.witness);
        }
        if self.failures_omitted > 0 {
            let _ = writeln!(out, "  - ... {} more", self.failures_omitted);
        }
        out
    }
}

pub fn render_text(reports: &[AuditReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_text());
    }
    let bad = reports.iter().filter(|r| !r.is_ok()).count();
    let _ = writeln!(out, "summary: suites={} failing={}", reports.len(), bad);
    out
}

pub fn render_json(reports: &[AuditReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}
