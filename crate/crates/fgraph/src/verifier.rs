//! Parameter-sweep verifier: compares direct computation on generated
//! graphs against the registered closed forms and degree profiles, and
//! assembles a deterministic conformance report.
//!
//! Mismatches are findings, not failures: the suite never aborts on a
//! MISMATCH verdict. What does abort is any disagreement between the two
//! independent computation routes for the same quantity (vertex-form vs
//! edge-form F, pairwise enumeration vs identity F-coindex); those indicate
//! a bug in this toolkit, not in the formulas under test.
//!
//! Report content is byte-identical across runs and across degrees of
//! parallelism for a fixed grid and toolkit version.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_forms::{
    paper_degree_profile, paper_formula, FormulaIndex, ParamName, Params, TheoremError, TheoremId,
};
use crate::families::FamilyError;
use crate::indices::{f_coindex_via_identity, f_index, pairwise_coindex, CoindexKind, IndexError};
use crate::IndexInt;

/// Largest graph (by vertex count) on which the quadratic pairwise
/// enumeration is run as an oracle; beyond it only the linear identity form
/// is used and the skip is recorded in the report metadata.
pub const PAIRWISE_ORACLE_CUTOFF: usize = 2000;

/// Default sweep bounds: n and k run from each theorem's domain minimum to
/// 25, grid dimensions to 12, nanostructure dimensions to 8.
pub const DEFAULT_MAX_NK: u32 = 25;
pub const DEFAULT_MAX_GRID: u32 = 12;
pub const DEFAULT_MAX_PQ: u32 = 8;

/// Evaluation error, carrying the theorem and parameter point it hit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{id} at {params}: {source}")]
    Generation {
        id: TheoremId,
        params: String,
        source: FamilyError,
    },
    #[error("{id} at {params}: {source}")]
    Registry {
        id: TheoremId,
        params: String,
        source: TheoremError,
    },
    #[error("{id} at {params}: {source}")]
    Computation {
        id: TheoremId,
        params: String,
        source: IndexError,
    },
}

impl VerifyError {
    /// True when the two independent computation routes disagreed.
    pub fn is_self_check(&self) -> bool {
        matches!(
            self,
            VerifyError::Computation {
                source: IndexError::SelfCheck { .. },
                ..
            }
        )
    }
}

/// Invalid sweep configuration or expectations file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("configuration error: {0}")]
pub struct ConfigError(pub String);

/// Outcome of one (theorem, parameter point) comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
        })
    }
}

/// Whether the generated graph's degree multiset equals the registered
/// profile at this point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileMatch {
    Yes,
    No,
    NotApplicable,
}

impl fmt::Display for ProfileMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileMatch::Yes => "yes",
            ProfileMatch::No => "no",
            ProfileMatch::NotApplicable => "not_applicable",
        })
    }
}

/// Per-point verdict. `delta = paper_value - direct_value`; the status is
/// MATCH exactly when the delta is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub theorem_id: TheoremId,
    pub params: Params,
    pub paper_value: IndexInt,
    pub direct_value: IndexInt,
    pub profile_match: ProfileMatch,
    pub status: Status,
    pub delta: IndexInt,
}

impl VerdictRecord {
    pub fn params_display(&self) -> String {
        self.params.display_in_order(self.theorem_id.param_names())
    }
}

/// MATCH / MISMATCH tallies for one theorem.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub matches: usize,
    pub mismatches: usize,
}

/// Run provenance. `timestamp` stays `None` unless a caller explicitly sets
/// it, keeping default report output byte-identical across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub toolkit_version: String,
    pub grids: Vec<String>,
    pub pairwise_oracle_cutoff: usize,
    pub pairwise_oracle_skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Deterministically ordered sweep results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<VerdictRecord>,
    pub summary: BTreeMap<TheoremId, TheoremSummary>,
    pub metadata: ReportMetadata,
}

/// Parameter grid for one theorem: one inclusive range per parameter, in
/// canonical parameter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub theorem: TheoremId,
    pub ranges: Vec<(ParamName, RangeInclusive<u32>)>,
}

impl Grid {
    /// All parameter points, first parameter varying slowest.
    pub fn points(&self) -> Vec<Params> {
        let mut points = vec![Params::new()];
        for (name, range) in &self.ranges {
            let mut next = Vec::with_capacity(points.len() * range.clone().count());
            for base in &points {
                for value in range.clone() {
                    next.push(base.clone().with(*name, value));
                }
            }
            points = next;
        }
        points
    }

    fn describe(&self) -> String {
        let ranges = self
            .ranges
            .iter()
            .map(|(name, range)| format!("{name}={}..{}", range.start(), range.end()))
            .collect::<Vec<_>>()
            .join(",");
        format!("{}: {}", self.theorem, ranges)
    }
}

/// A validated set of per-theorem grids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    grids: Vec<Grid>,
}

impl SweepConfig {
    /// Grids for the given theorems. `overrides` replaces the default range
    /// of a parameter by name wherever that parameter occurs; every range
    /// is validated against the owning theorem's domain before anything is
    /// evaluated.
    pub fn new(
        theorems: &[TheoremId],
        overrides: &BTreeMap<ParamName, RangeInclusive<u32>>,
    ) -> Result<Self, ConfigError> {
        let mut grids = Vec::with_capacity(theorems.len());
        for &theorem in theorems {
            let mut ranges = Vec::new();
            for &name in theorem.param_names() {
                let minimum = theorem
                    .param_minimum(name)
                    .expect("declared parameter has a minimum");
                let default_max = match name {
                    ParamName::N | ParamName::K => {
                        if theorem == TheoremId::GridF {
                            DEFAULT_MAX_GRID
                        } else {
                            DEFAULT_MAX_NK
                        }
                    }
                    ParamName::M => DEFAULT_MAX_GRID,
                    ParamName::P | ParamName::Q => DEFAULT_MAX_PQ,
                };
                let range = overrides
                    .get(&name)
                    .cloned()
                    .unwrap_or(minimum..=default_max);
                if range.is_empty() {
                    return Err(ConfigError(format!(
                        "empty range {}..{} for parameter {name}",
                        range.start(),
                        range.end()
                    )));
                }
                if *range.start() < minimum {
                    return Err(ConfigError(format!(
                        "{theorem} requires {name} >= {minimum}, but the range starts at {}",
                        range.start()
                    )));
                }
                ranges.push((name, range));
            }
            grids.push(Grid { theorem, ranges });
        }
        Ok(SweepConfig { grids })
    }

    /// All fourteen theorems over the default grids.
    pub fn defaults() -> Self {
        SweepConfig::new(&TheoremId::ALL, &BTreeMap::new()).expect("default grids are valid")
    }

    pub fn grids(&self) -> &[Grid] {
        &self.grids
    }
}

/// Verifies one theorem at one parameter point.
pub fn verify_theorem(id: TheoremId, params: &Params) -> Result<VerdictRecord, VerifyError> {
    verify_point(id, params).map(|(record, _)| record)
}

fn verify_point(id: TheoremId, params: &Params) -> Result<(VerdictRecord, bool), VerifyError> {
    let ctx = || params.display_in_order(id.param_names());
    let registry = |source| VerifyError::Registry {
        id,
        params: ctx(),
        source,
    };
    let computation = |source| VerifyError::Computation {
        id,
        params: ctx(),
        source,
    };

    let spec = id.family(params).map_err(registry)?;
    let graph = spec.generate().map_err(|source| VerifyError::Generation {
        id,
        params: ctx(),
        source,
    })?;

    let paper_value = paper_formula::<IndexInt>(id, params).map_err(registry)?;
    let mut enumerated = false;
    let direct_value = match id.index() {
        FormulaIndex::F => f_index::<IndexInt>(&graph).map_err(computation)?,
        FormulaIndex::FCo => {
            let identity = f_coindex_via_identity::<IndexInt>(&graph).map_err(computation)?;
            if graph.vertex_count() <= PAIRWISE_ORACLE_CUTOFF {
                enumerated = true;
                let by_pairs =
                    pairwise_coindex::<IndexInt>(&graph, CoindexKind::FCo).map_err(computation)?;
                if by_pairs != identity {
                    return Err(computation(IndexError::SelfCheck {
                        what: "pairwise and identity F-coindex",
                        left: by_pairs.to_string(),
                        right: identity.to_string(),
                    }));
                }
                by_pairs
            } else {
                identity
            }
        }
    };

    let expected_profile = paper_degree_profile(id, params).map_err(registry)?;
    let profile_match = if graph.degree_multiset() == expected_profile {
        ProfileMatch::Yes
    } else {
        ProfileMatch::No
    };

    let delta = paper_value
        .checked_sub(direct_value)
        .ok_or_else(|| computation(IndexError::Overflow(crate::scalar::Overflow("delta"))))?;
    let status = if delta == 0 {
        Status::Match
    } else {
        Status::Mismatch
    };

    let record = VerdictRecord {
        theorem_id: id,
        params: params.clone(),
        paper_value,
        direct_value,
        profile_match,
        status,
        delta,
    };
    Ok((record, !enumerated && id.index() == FormulaIndex::FCo))
}

/// Evaluates every grid point (in parallel) and assembles the report.
/// Records are sorted by theorem, then by parameter values in canonical
/// order, independent of evaluation order.
pub fn run_suite(config: &SweepConfig) -> Result<Report, VerifyError> {
    let points: Vec<(TheoremId, Params)> = config
        .grids
        .iter()
        .flat_map(|grid| grid.points().into_iter().map(move |p| (grid.theorem, p)))
        .collect();

    let evaluated: Vec<(VerdictRecord, bool)> = points
        .par_iter()
        .map(|(id, params)| verify_point(*id, params))
        .collect::<Result<_, _>>()?;

    let pairwise_oracle_skipped = evaluated.iter().filter(|(_, skipped)| *skipped).count();
    let mut records: Vec<VerdictRecord> = evaluated.into_iter().map(|(r, _)| r).collect();
    records.sort_by_key(|r| {
        let values: Vec<u32> = r
            .theorem_id
            .param_names()
            .iter()
            .map(|&name| r.params.get(name).unwrap_or(0))
            .collect();
        (r.theorem_id, values)
    });

    let mut summary: BTreeMap<TheoremId, TheoremSummary> = BTreeMap::new();
    for grid in &config.grids {
        summary.entry(grid.theorem).or_default();
    }
    for record in &records {
        let entry = summary.entry(record.theorem_id).or_default();
        match record.status {
            Status::Match => entry.matches += 1,
            Status::Mismatch => entry.mismatches += 1,
        }
    }

    Ok(Report {
        records,
        summary,
        metadata: ReportMetadata {
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            grids: config.grids.iter().map(Grid::describe).collect(),
            pairwise_oracle_cutoff: PAIRWISE_ORACLE_CUTOFF,
            pairwise_oracle_skipped,
            timestamp: None,
        },
    })
}

/// CSV column order: identifier, the five possible parameters (blank when a
/// theorem does not use one), then the comparison fields.
pub const CSV_HEADER: &str =
    "theorem_id,n,k,m,p,q,paper_value,direct_value,delta,status,profile_match";

const CSV_PARAM_COLUMNS: [ParamName; 5] = [
    ParamName::N,
    ParamName::K,
    ParamName::M,
    ParamName::P,
    ParamName::Q,
];

impl Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.theorem_id.to_string());
            for name in CSV_PARAM_COLUMNS {
                out.push(',');
                if let Some(v) = r.params.get(name) {
                    out.push_str(&v.to_string());
                }
            }
            out.push_str(&format!(
                ",{},{},{},{},{}\n",
                r.paper_value, r.direct_value, r.delta, r.status, r.profile_match
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Conformance report\n\n");
        out.push_str(&format!(
            "- toolkit version: {}\n",
            self.metadata.toolkit_version
        ));
        out.push_str(&format!(
            "- pairwise oracle cutoff: {} vertices ({} points used identity form only)\n",
            self.metadata.pairwise_oracle_cutoff, self.metadata.pairwise_oracle_skipped
        ));
        for grid in &self.metadata.grids {
            out.push_str(&format!("- grid {grid}\n"));
        }
        out.push_str("\n## Summary\n\n");
        out.push_str("| theorem_id | MATCH | MISMATCH |\n|---|---:|---:|\n");
        for (id, s) in &self.summary {
            out.push_str(&format!("| {id} | {} | {} |\n", s.matches, s.mismatches));
        }
        out.push_str("\n## Records\n\n");
        out.push_str(
            "| theorem_id | params | paper_value | direct_value | delta | status | profile_match |\n",
        );
        out.push_str("|---|---|---:|---:|---:|---|---|\n");
        for r in &self.records {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                r.theorem_id,
                r.params_display(),
                r.paper_value,
                r.direct_value,
                r.delta,
                r.status,
                r.profile_match
            ));
        }
        out
    }
}

/// Pinned per-theorem verdicts for strict mode: text lines of
/// `<theorem_id> MATCH|MISMATCH`; blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expectations(BTreeMap<TheoremId, Status>);

impl Expectations {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_ascii_whitespace();
            let id: TheoremId = parts
                .next()
                .expect("non-empty line has a first token")
                .parse()
                .map_err(|e| ConfigError(format!("expectations line {}: {e}", idx + 1)))?;
            let status = match parts.next() {
                Some("MATCH") => Status::Match,
                Some("MISMATCH") => Status::Mismatch,
                other => {
                    return Err(ConfigError(format!(
                        "expectations line {}: expected MATCH or MISMATCH, found {:?}",
                        idx + 1,
                        other.unwrap_or("")
                    )))
                }
            };
            if parts.next().is_some() {
                return Err(ConfigError(format!(
                    "expectations line {}: trailing content",
                    idx + 1
                )));
            }
            if map.insert(id, status).is_some() {
                return Err(ConfigError(format!(
                    "expectations line {}: duplicate entry for {id}",
                    idx + 1
                )));
            }
        }
        Ok(Expectations(map))
    }

    pub fn get(&self, id: TheoremId) -> Option<Status> {
        self.0.get(&id).copied()
    }

    /// Records whose status deviates from the pinned verdict. Theorems
    /// without a pinned entry are not checked.
    pub fn deviations<'r>(&self, report: &'r Report) -> Vec<&'r VerdictRecord> {
        report
            .records
            .iter()
            .filter(|r| {
                self.get(r.theorem_id)
                    .is_some_and(|expected| expected != r.status)
            })
            .collect()
    }
}
