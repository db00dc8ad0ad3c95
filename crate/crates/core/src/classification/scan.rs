//! Exhaustive scans over all types in a bounded range.
//!
//! Types are enumerated by ambient dimension, then codimension, then
//! lexicographically by sorted degree list. Work is split across a rayon
//! pool but records are collected in enumeration order, so the report does
//! not depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::{lemma_classify, theorem_verdict, ClassificationError};
use crate::ci_topology::{join_degrees, CIType, InvariantReport};
use crate::exact_arith::{GaussianInteger, Integer};

/// Sorted multisets of size `len` with entries in `1..=max_degree`, in
/// lexicographic order.
pub(crate) fn multisets(len: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, min: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for d in min..=max {
            prefix.push(d);
            go(len, d, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, max_degree, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every type with `1 ≤ n ≤ max_n`, `0 ≤ l ≤ n`, degrees in `1..=max_degree`.
pub fn enumerate_types(max_n: u32, max_degree: u32) -> Vec<CIType> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for l in 0..=n as usize {
            for degrees in multisets(l, max_degree) {
                out.push(CIType::new(n, degrees).expect("enumerated types are valid"));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    Theorem,
    Lemma,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::Theorem => "theorem",
            ScanKind::Lemma => "lemma",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    /// Worker count; `None` uses rayon's default.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub ci: CIType,
    pub dimension: u32,
    pub total_degree: u64,
    pub middle_betti: Integer,
    pub x_at_i: GaussianInteger,
    pub f_at_i: Option<GaussianInteger>,
    /// Verdict name for theorem scans, case name for lemma scans.
    pub outcome: &'static str,
}

impl ScanRecord {
    fn base(ci: &CIType) -> Self {
        let report = InvariantReport::compute(ci);
        Self {
            ci: ci.clone(),
            dimension: ci.dimension(),
            total_degree: ci.total_degree(),
            middle_betti: report.middle_betti,
            x_at_i: report.value_at_i,
            f_at_i: None,
            outcome: "Error",
        }
    }

    pub fn to_line(&self) -> String {
        let f = self
            .f_at_i
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        format!(
            "n={} type=({}) k={} d={} b_k={} p_X(i)={} p_F(i)={} outcome={}",
            self.ci.ambient_dim(),
            join_degrees(self.ci.degrees()),
            self.dimension,
            self.total_degree,
            self.middle_betti,
            self.x_at_i,
            f,
            self.outcome
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub max_n: u32,
    pub max_degree: u32,
    pub records: Vec<ScanRecord>,
    pub violations: Vec<String>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        let mut counts = BTreeMap::new();
        for r in &self.records {
            *counts.entry(r.outcome).or_insert(0) += 1;
        }
        counts
    }

    /// One record per line followed by a `#`-prefixed summary block.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {} scan max_n={} max_degree={}",
            self.kind.name(),
            self.max_n,
            self.max_degree
        );
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out.push_str(&self.summary());
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# summary");
        let _ = writeln!(out, "# types {}", self.records.len());
        for (name, count) in self.counts() {
            let _ = writeln!(out, "# count {name} {count}");
        }
        let _ = writeln!(out, "# violations {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(out, "# violation {v}");
        }
        out
    }
}

fn run_parallel<F>(
    types: &[CIType],
    options: &ScanOptions,
    eval: F,
) -> Result<Vec<(ScanRecord, Vec<String>)>, ClassificationError>
where
    F: Fn(&CIType) -> (ScanRecord, Vec<String>) + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads.unwrap_or(0))
        .build()
        .map_err(|e| ClassificationError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| types.par_iter().map(&eval).collect()))
}

fn assemble(
    kind: ScanKind,
    max_n: u32,
    max_degree: u32,
    results: Vec<(ScanRecord, Vec<String>)>,
) -> ScanReport {
    let mut records = Vec::with_capacity(results.len());
    let mut violations = Vec::new();
    for (record, v) in results {
        records.push(record);
        violations.extend(v);
    }
    ScanReport {
        kind,
        max_n,
        max_degree,
        records,
        violations,
    }
}

fn theorem_record(ci: &CIType) -> (ScanRecord, Vec<String>) {
    let mut record = ScanRecord::base(ci);
    let mut violations = Vec::new();
    match theorem_verdict(ci) {
        Ok(v) => {
            record.outcome = v.kind.name();
            record.f_at_i = v.reason.f_at_i;
            let homogeneous_type = ci.is_linear() || ci.is_quadric();
            let rc = ci.total_degree() <= ci.ambient_dim() as u64;
            if rc && v.kind.is_homogeneous() != homogeneous_type {
                violations.push(format!("{ci}: rationally connected, verdict {}", v.kind));
            }
            if !rc && v.kind != super::VerdictKind::NotRationallyConnected {
                violations.push(format!("{ci}: d > n but verdict {}", v.kind));
            }
        }
        Err(e) => violations.push(format!("{ci}: {e}")),
    }
    (record, violations)
}

fn lemma_record(ci: &CIType) -> (ScanRecord, Vec<String>) {
    let mut record = ScanRecord::base(ci);
    let mut violations = Vec::new();
    match lemma_classify(ci) {
        Ok(case) => record.outcome = case.name(),
        Err(e) => violations.push(format!("{ci}: {e}")),
    }
    let essential = ci.essential_degrees();
    let large = essential.iter().any(|&d| d >= 3) || essential.len() >= 2;
    if large && record.x_at_i.is_zero() {
        violations.push(format!(
            "{ci}: vanishes at i despite a degree >= 3 or two degrees >= 2"
        ));
    }
    (record, violations)
}

pub fn scan_theorem(max_n: u32, max_degree: u32) -> Result<ScanReport, ClassificationError> {
    scan_theorem_with(max_n, max_degree, &ScanOptions::default())
}

/// Verdict for every type in range; a violation is any rationally connected
/// type whose verdict disagrees with being of type `(1,…,1)` or
/// `(1,…,1,2)`, or any pipeline error.
pub fn scan_theorem_with(
    max_n: u32,
    max_degree: u32,
    options: &ScanOptions,
) -> Result<ScanReport, ClassificationError> {
    let types = enumerate_types(max_n, max_degree);
    let results = run_parallel(&types, options, theorem_record)?;
    Ok(assemble(ScanKind::Theorem, max_n, max_degree, results))
}

pub fn scan_lemma(max_n: u32, max_degree: u32) -> Result<ScanReport, ClassificationError> {
    scan_lemma_with(max_n, max_degree, &ScanOptions::default())
}

/// Lemma case for every type in range, checking the vanishing
/// biconditional and the large-degree exclusions.
pub fn scan_lemma_with(
    max_n: u32,
    max_degree: u32,
    options: &ScanOptions,
) -> Result<ScanReport, ClassificationError> {
    let types = enumerate_types(max_n, max_degree);
    let results = run_parallel(&types, options, lemma_record)?;
    Ok(assemble(ScanKind::Lemma, max_n, max_degree, results))
}
