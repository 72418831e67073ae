//! Machine-readable check outcomes shared by all verification suites.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Which statement the check realizes.
    pub paper_anchor: String,
    /// Number of cases evaluated.
    pub cases: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub preset: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(suite: &str, preset: &str) -> Self {
        CheckReport { suite: suite.into(), preset: preset.into(), ..Default::default() }
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.insert(k.into(), v.to_string());
        self
    }

    pub fn param_mut(&mut self, k: &str, v: impl ToString) {
        self.params.insert(k.into(), v.to_string());
    }

    pub fn push(&mut self, e: CheckEntry) {
        self.checks.push(e);
    }

    /// Records a check from the first failing case, if any.
    pub fn record(&mut self, id: &str, anchor: &str, cases: usize, witness: Option<String>) {
        self.push(CheckEntry {
            id: id.into(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            paper_anchor: anchor.into(),
            cases,
        });
    }

    pub fn skip(&mut self, id: &str, anchor: &str, why: &str) {
        self.push(CheckEntry {
            id: id.into(),
            status: Status::Skipped,
            witness: Some(why.into()),
            paper_anchor: anchor.into(),
            cases: 0,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckEntry> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// Merges `other`, prefixing its ids with `prefix/`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.checks {
            e.id = format!("{}/{}", prefix, e.id);
            self.checks.push(e);
        }
    }
}

/// Runs `f` on every case in parallel; returns the first failure in input order.
pub fn first_failure<T: Sync, F>(cases: &[T], f: F) -> Option<String>
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    use rayon::prelude::*;
    cases.par_iter().find_map_first(f)
}
