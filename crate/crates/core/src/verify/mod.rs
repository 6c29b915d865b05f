//! Cross-validation of the formula suite against enumeration.
//!
//! Each check produces one [`CheckReport`]. A failing report always carries
//! the first counterexample found. Checks never abort the run; [`run_all`]
//! collects every report, running independent checks in parallel but
//! returning them in a fixed order.

mod checks;
pub mod golden;
mod partition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::families::{oracle_bound_from_env, Family};
use crate::ExactInt;

pub use checks::*;
pub use partition::{
    dstar_partition, dstar_partition_of, gap_partition, ClassPartition, DEFAULT_PARTITION_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

fn decimal<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The first failing case of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub family: Option<Family>,
    pub params: BTreeMap<String, u64>,
    #[serde(serialize_with = "decimal")]
    pub expected: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub actual: ExactInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub family: Option<Family>,
    /// Inclusive range of chain sizes covered.
    pub n_range: (u32, u32),
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.name)?;
        if let Some(fam) = self.family {
            write!(f, " [{fam}]")?;
        }
        write!(f, " n={}..={}", self.n_range.0, self.n_range.1)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        if let Some(c) = &self.counterexample {
            let params: Vec<_> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(
                f,
                ": at {} expected {} got {}",
                params.join(" "),
                c.expected,
                c.actual
            )?;
            if let Some(note) = &c.note {
                write!(f, " [{note}]")?;
            }
        }
        Ok(())
    }
}

/// Records the first failure of a check while the check keeps scanning.
pub(crate) struct Tally {
    name: String,
    family: Option<Family>,
    range: (u32, u32),
    failure: Option<Counterexample>,
    detail: Option<String>,
}

impl Tally {
    pub(crate) fn new(name: impl Into<String>, family: Option<Family>, lo: u32, hi: u32) -> Self {
        Self {
            name: name.into(),
            family,
            range: (lo, hi),
            failure: None,
            detail: None,
        }
    }

    fn record(
        &mut self,
        params: &[(&str, u64)],
        expected: ExactInt,
        actual: ExactInt,
        note: Option<String>,
    ) {
        if self.failure.is_none() {
            self.failure = Some(Counterexample {
                family: self.family,
                params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                expected,
                actual,
                note,
            });
        }
    }

    pub(crate) fn eq(
        &mut self,
        params: &[(&str, u64)],
        expected: impl Into<ExactInt>,
        actual: impl Into<ExactInt>,
    ) -> bool {
        let (e, a) = (expected.into(), actual.into());
        let ok = e == a;
        if !ok {
            self.record(params, e, a, None);
        }
        ok
    }

    /// Compares a formula result, counting an evaluation error as a failure.
    pub(crate) fn eq_formula(
        &mut self,
        params: &[(&str, u64)],
        formula: Result<ExactInt, Error>,
        actual: impl Into<ExactInt>,
    ) -> bool {
        match formula {
            Ok(e) => self.eq(params, e, actual),
            Err(err) => {
                self.record(
                    params,
                    ExactInt::from(-1),
                    actual.into(),
                    Some(err.to_string()),
                );
                false
            }
        }
    }

    /// A property that must hold; reported as expected 1, got 0.
    pub(crate) fn holds(
        &mut self,
        params: &[(&str, u64)],
        ok: bool,
        note: impl FnOnce() -> String,
    ) -> bool {
        if !ok {
            self.record(params, 1.into(), 0.into(), Some(note()));
        }
        ok
    }

    pub(crate) fn error(&mut self, params: &[(&str, u64)], err: &Error) {
        self.record(
            params,
            ExactInt::from(-1),
            ExactInt::from(-1),
            Some(err.to_string()),
        );
    }

    pub(crate) fn detail(&mut self, d: impl Into<String>) {
        self.detail = Some(d.into());
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            family: self.family,
            n_range: self.range,
            status: if self.failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample: self.failure,
            detail: self.detail,
        }
    }
}

/// Per-check size limits. Each check covers `n = 0..=min(n_max, bound)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Naive filter-based enumerator.
    pub naive_bound: u32,
    /// Union-find class partitions.
    pub partition_bound: u32,
    /// Pairwise products, quadratic in the family order.
    pub closure_bound: u32,
    /// Fast enumeration of counts and statistic buckets.
    pub enumeration_bound: u32,
    /// Exhaustive structural property scans.
    pub structure_bound: u32,
    /// Formula-only identities (no enumeration involved).
    pub formula_bound: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            naive_bound: crate::families::DEFAULT_ORACLE_BOUND,
            partition_bound: DEFAULT_PARTITION_BOUND,
            closure_bound: 7,
            enumeration_bound: 16,
            structure_bound: 10,
            formula_bound: 40,
        }
    }
}

impl VerifyConfig {
    /// Defaults, with the naive bound read from the environment.
    pub fn from_env() -> Self {
        Self {
            naive_bound: oracle_bound_from_env(),
            ..Self::default()
        }
    }
}

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckGroup {
    Tables,
    Fix,
    Orders,
    Formulas,
    Classes,
    Closure,
    Structure,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 7] = [
        CheckGroup::Tables,
        CheckGroup::Fix,
        CheckGroup::Orders,
        CheckGroup::Formulas,
        CheckGroup::Classes,
        CheckGroup::Closure,
        CheckGroup::Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Tables => "tables",
            CheckGroup::Fix => "fix",
            CheckGroup::Orders => "orders",
            CheckGroup::Formulas => "formulas",
            CheckGroup::Classes => "classes",
            CheckGroup::Closure => "closure",
            CheckGroup::Structure => "structure",
        }
    }

    pub fn run(self, n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
        match self {
            CheckGroup::Tables => check_height_tables(n_max, cfg),
            CheckGroup::Fix => check_fix_tables(n_max, cfg),
            CheckGroup::Orders => check_orders(n_max, cfg),
            CheckGroup::Formulas => check_formula_identities(cfg),
            CheckGroup::Classes => check_class_counts(n_max, cfg),
            CheckGroup::Closure => check_closure(n_max, cfg),
            CheckGroup::Structure => check_structure(n_max, cfg),
        }
    }
}

impl FromStr for CheckGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CheckGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "check group",
                value: s.to_owned(),
            })
    }
}

/// Runs the selected groups; reports come back in group order.
pub fn run_selected(n_max: u32, cfg: &VerifyConfig, groups: &[CheckGroup]) -> Vec<CheckReport> {
    groups
        .par_iter()
        .map(|g| g.run(n_max, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn run_all(n_max: u32, cfg: &VerifyConfig) -> Vec<CheckReport> {
    run_selected(n_max, cfg, &CheckGroup::ALL)
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}
