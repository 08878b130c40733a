//! Verification reports and their text/JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::qrat::Params;

/// Result of a single identity check: a detail line either way.
pub type Outcome = std::result::Result<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "TYPO-SUSPECT")]
    TypoSuspect,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::TypoSuspect => "TYPO-SUSPECT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(rename = "ref")]
    pub reference: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        reference: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            reference: reference.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn from_outcome(name: impl Into<String>, reference: impl Into<String>, o: Outcome) -> Self {
        match o {
            Ok(d) => Check::new(name, reference, Status::Pass, d),
            Err(d) => Check::new(name, reference, Status::Fail, d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsEcho {
    pub c: String,
    pub tau: String,
    pub hbar: String,
    pub q: String,
    pub degree: usize,
}

impl ParamsEcho {
    pub fn new(p: &Params, degree: usize) -> Self {
        ParamsEcho {
            c: p.c.to_string(),
            tau: p.tau.to_string(),
            hbar: p.hbar.to_string(),
            q: if p.is_symbolic() {
                "symbolic".into()
            } else {
                p.q.to_string()
            },
            degree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: ParamsEcho,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        let _ = writeln!(out, "suite: {}", self.suite);
        let _ = writeln!(
            out,
            "params: c={} tau={} hbar={} q={} degree={}",
            p.c, p.tau, p.hbar, p.q, p.degree
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<12} {:<width$}  [{}]  {}",
                c.status.as_str(),
                c.name,
                c.reference,
                c.detail
            );
        }
        let _ = writeln!(
            out,
            "summary: {} checks, {} pass, {} fail, {} typo-suspect => {}",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::TypoSuspect),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}
