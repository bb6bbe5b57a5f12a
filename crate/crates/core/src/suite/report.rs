use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::report::GroupReport;

/// Reports describe evidence over a finite catalog, not proofs.
pub const SCOPE: &str = "desk-scale verification";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<GroupReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub scope: &'static str,
    pub groups: Vec<GroupReport>,
    pub checks: Vec<Check>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(campaign: impl Into<String>) -> Self {
        VerificationReport {
            campaign: campaign.into(),
            scope: SCOPE,
            groups: Vec::new(),
            checks: Vec::new(),
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Records a named check; a failing check also becomes a counterexample
    /// labelled `label`.
    pub fn check(&mut self, name: impl Into<String>, label: &str, passed: bool, detail: impl Into<String>) {
        let name = name.into();
        let detail = detail.into();
        if !passed {
            self.counterexamples.push(Counterexample {
                label: label.to_string(),
                reason: format!("{name}: {detail}"),
                report: None,
            });
        }
        self.checks.push(Check { name, passed, detail });
    }

    pub fn counterexample(&mut self, report: &GroupReport, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            label: report.label.clone(),
            reason: reason.into(),
            report: Some(report.clone()),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for g in other.groups {
            if !self.groups.iter().any(|h| h.label == g.label) {
                self.groups.push(g);
            }
        }
        self.checks.extend(other.checks);
        self.counterexamples.extend(other.counterexamples);
        self.elapsed += other.elapsed;
    }

    pub(crate) fn finish(mut self, start: Instant) -> Self {
        self.groups.sort_by(|a, b| a.label.cmp(&b.label));
        self.elapsed = start.elapsed();
        self
    }
}
