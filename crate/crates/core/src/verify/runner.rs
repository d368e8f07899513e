use std::panic::{catch_unwind, AssertUnwindSafe};

use rayon::prelude::*;
use serde::Serialize;

use super::{run_check, Check, CheckRecord, GroupContext, Status};
use crate::error::{Error, Result};
use crate::zoo::CorpusEntry;

pub const REPORT_SCHEMA: &str = "codegree-report/1";

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub seed: u64,
    /// Largest order for which the Lemma 2.1 checks run over the lattice.
    pub lemma21_max_order: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            checks: Check::ALL.to_vec(),
            jobs: 1,
            seed: 0,
            lemma21_max_order: 200,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub label: String,
    pub recipe: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cod_set: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub records: Vec<CheckRecord>,
}

impl GroupReport {
    pub fn failed(&self) -> bool {
        self.error.is_some() || self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn records_for(&self, check: Check) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(move |r| r.check == check.name())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub seed: u64,
    pub checks: Vec<&'static str>,
    pub summary: Summary,
    pub groups: Vec<GroupReport>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.summary.failed > 0 || self.summary.errors > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn group(&self, label: &str) -> Option<&GroupReport> {
        self.groups.iter().find(|g| g.label == label)
    }
}

pub fn run_group(entry: &CorpusEntry, opts: &RunOptions) -> GroupReport {
    let mut report = GroupReport {
        label: entry.label.clone(),
        recipe: entry.recipe.to_string(),
        order: None,
        cod_set: None,
        k_value: None,
        error: None,
        records: Vec::new(),
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| -> Result<()> {
        let (group, parts) = entry.recipe.build_with_parts()?;
        report.order = Some(group.order() as u64);
        let ctx = GroupContext::new(group, parts, opts.seed)?;
        report.cod_set = Some(ctx.profile.cod_set.clone());
        report.k_value = Some(ctx.profile.k_value);
        for &check in &opts.checks {
            report
                .records
                .extend(run_check(&ctx, check, opts.lemma21_max_order)?);
        }
        Ok(())
    }));
    match outcome {
        Ok(Ok(())) => {}
        Ok(Err(e)) => report.error = Some(e.to_string()),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            report.error = Some(format!("internal error: {msg}"));
        }
    }
    report
}

/// Runs the selected checks on every entry with `jobs` worker threads.
/// Reports keep corpus order whatever the worker count.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
    let groups: Vec<GroupReport> =
        pool.install(|| entries.par_iter().map(|e| run_group(e, opts)).collect());
    let mut summary = Summary {
        groups: groups.len(),
        ..Summary::default()
    };
    for g in &groups {
        if g.error.is_some() {
            summary.errors += 1;
        }
        for r in &g.records {
            summary.records += 1;
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
    }
    Ok(Report {
        schema: REPORT_SCHEMA,
        seed: opts.seed,
        checks: opts.checks.iter().map(|c| c.name()).collect(),
        summary,
        groups,
    })
}
