//! The machine-readable run report. Field order is fixed by declaration
//! order; everything except `timings` is a function of the inputs.

use std::time::Instant;

use hetcat::dsl::Diagnostic;
use hetcat::{CheckSuite, ValidationReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "hetcat.run-report";
pub const SCHEMA_VERSION: u32 = 1;

// wasm32-unknown-unknown has no clock; reports made there carry zero timings.
fn now() -> Option<Instant> {
    if cfg!(target_arch = "wasm32") {
        None
    } else {
        Some(Instant::now())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub file: Option<String>,
    pub instance: Option<String>,
    pub name: Option<String>,
    pub side: Option<String>,
    pub kind: Option<String>,
    pub max_objects: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub tag: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    pub name: String,
    pub format: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub millis: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_millis: f64,
    pub stages: Vec<Stage>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub schema_version: u32,
    pub command: String,
    pub inputs: Inputs,
    pub status: Status,
    pub checks: Vec<CheckResult>,
    pub diagnostics: Vec<Diagnostic>,
    pub errors: Vec<String>,
    pub artifacts: Vec<Artifact>,
    pub timings: Timings,
    #[serde(skip)]
    started: Option<Instant>,
    #[serde(skip)]
    stage_start: Option<Instant>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Inputs) -> RunReport {
        let now = now();
        RunReport {
            schema: SCHEMA.into(),
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs,
            status: Status::Pass,
            checks: Vec::new(),
            diagnostics: Vec::new(),
            errors: Vec::new(),
            artifacts: Vec::new(),
            timings: Timings::default(),
            started: now,
            stage_start: now,
        }
    }

    /// Close the current timing stage under `name`.
    pub fn stage(&mut self, name: &str) {
        let (now, start) = (now(), self.stage_start);
        self.stage_start = now;
        let millis = match (now, start) {
            (Some(n), Some(s)) => (n - s).as_secs_f64() * 1e3,
            _ => 0.0,
        };
        self.timings.stages.push(Stage { name: name.into(), millis });
    }

    pub fn check(&mut self, name: impl Into<String>, tag: &str, witnesses: Vec<String>) {
        let passed = witnesses.is_empty();
        if !passed && self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.checks.push(CheckResult {
            name: name.into(),
            tag: tag.into(),
            passed,
            witnesses,
        });
    }

    /// One check per listed law, named `<prefix><law>`, plus one failing
    /// check for each violation of a law not in the list.
    pub fn laws(&mut self, prefix: &str, tag: &str, laws: &[&str], report: &ValidationReport) {
        for law in laws {
            let witnesses = report
                .violations
                .iter()
                .filter(|v| v.law == *law)
                .map(|v| format!("[{}] {}", v.witness.join(", "), v.detail))
                .collect();
            self.check(format!("{prefix}{law}"), tag, witnesses);
        }
        for v in report.violations.iter().filter(|v| !laws.contains(&v.law.as_str())) {
            self.check(format!("{prefix}{}", v.law), tag, vec![format!("[{}] {}", v.witness.join(", "), v.detail)]);
        }
    }

    pub fn suite(&mut self, prefix: &str, suite: &CheckSuite) {
        for c in &suite.checks {
            self.check(format!("{prefix}{}", c.name), &c.tag, c.witnesses.clone());
        }
    }

    pub fn error(&mut self, message: impl Into<String>) {
        self.status = Status::Error;
        self.errors.push(message.into());
    }

    pub fn artifact(&mut self, name: &str, format: &str, text: impl Into<String>) {
        self.artifacts.push(Artifact {
            name: name.into(),
            format: format.into(),
            text: text.into(),
        });
    }

    pub fn finish(&mut self) {
        if let Some(s) = self.started {
            self.timings.total_millis = s.elapsed().as_secs_f64() * 1e3;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(text)
    }

    /// The report with timings cleared, for comparing two runs.
    pub fn without_timings(&self) -> RunReport {
        RunReport {
            timings: Timings::default(),
            started: None,
            stage_start: None,
            ..self.clone()
        }
    }

    /// Human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for e in &self.errors {
            out.push_str(&format!("error: {e}\n"));
        }
        for d in &self.diagnostics {
            out.push_str(&format!("{d}\n"));
        }
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("PASS {} [{}]\n", c.name, c.tag));
            } else {
                out.push_str(&format!("FAIL {} [{}]\n", c.name, c.tag));
                for w in &c.witnesses {
                    out.push_str(&format!("     {w}\n"));
                }
            }
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        };
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{}: {status} ({} checks, {failed} failed)\n",
            self.command,
            self.checks.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_checks_and_errors() {
        let mut r = RunReport::new("check", Inputs::default());
        r.check("a", "t", vec![]);
        assert_eq!(r.status, Status::Pass);
        r.check("b", "t", vec!["w".into()]);
        assert_eq!(r.status.exit_code(), 1);
        r.error("boom");
        r.check("c", "t", vec!["w".into()]);
        assert_eq!(r.status, Status::Error);
        assert!(r.summary().ends_with("check: error (3 checks, 2 failed)\n"));
    }

    #[test]
    fn json_round_trip() {
        let mut r = RunReport::new("represent", Inputs { side: Some("left".into()), ..Inputs::default() });
        r.check("x", "t", vec!["w1".into(), "w2".into()]);
        r.artifact("a", "text", "line\n");
        r.stage("s");
        r.finish();
        let back = RunReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back.without_timings(), r.without_timings());
        assert_eq!(back.to_json(), r.to_json());
        assert!(r.to_json().starts_with("{\n  \"schema\": \"hetcat.run-report\""));
    }
}
