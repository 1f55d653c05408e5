//! Executable property suites and bounded counterexample search.

pub mod case;
pub mod families;
pub mod props;
pub mod search;

pub use case::{CaseData, Outcome};
pub use families::{InstanceFamily, ModuleShapes, SampleMode};
pub use props::{property_description, property_names, run_case};
pub use search::{search_separation, SearchResult, SearchTarget};

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// Result of running one registered property over a family.
#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub property: String,
    pub instances_checked: usize,
    pub skipped: usize,
    pub failures: Vec<CaseData>,
    #[serde(skip)]
    pub elapsed: std::time::Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate a registered property over every case of the family, serially.
pub fn run_suite(property: &str, family: &InstanceFamily, caps: &Caps) -> Result<SuiteResult> {
    run_suite_inner(property, family, caps, false)
}

/// Same evaluation fanned out over a thread pool. Cases keep their canonical
/// order, so the report is identical to the serial one.
pub fn run_suite_parallel(
    property: &str,
    family: &InstanceFamily,
    caps: &Caps,
) -> Result<SuiteResult> {
    run_suite_inner(property, family, caps, true)
}

fn run_suite_inner(
    property: &str,
    family: &InstanceFamily,
    caps: &Caps,
    parallel: bool,
) -> Result<SuiteResult> {
    if !property_names().contains(&property) {
        return Err(Error::UnknownProperty(property.into()));
    }
    let start = Instant::now();
    let cases = families::generate_cases(property, family, caps)?;
    let outcomes: Vec<(CaseData, Outcome)> = if parallel {
        cases
            .into_par_iter()
            .map(|case| {
                let outcome = run_case(property, &case, caps)
                    .unwrap_or_else(|e| Outcome::Fail { detail: e.to_string() });
                (case, outcome)
            })
            .collect()
    } else {
        cases
            .into_iter()
            .map(|case| {
                let outcome = run_case(property, &case, caps)
                    .unwrap_or_else(|e| Outcome::Fail { detail: e.to_string() });
                (case, outcome)
            })
            .collect()
    };
    let mut checked = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    for (case, outcome) in outcomes {
        match outcome {
            Outcome::Pass => checked += 1,
            Outcome::Skip => skipped += 1,
            Outcome::Fail { .. } => {
                checked += 1;
                failures.push(case);
            }
        }
    }
    Ok(SuiteResult {
        property: property.into(),
        instances_checked: checked,
        skipped,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Re-run one serialized case under its property.
pub fn replay(property: &str, case_json: &str, caps: &Caps) -> Result<Outcome> {
    if !property_names().contains(&property) {
        return Err(Error::UnknownProperty(property.into()));
    }
    let case: CaseData = serde_json::from_str(case_json).map_err(|e| Error::BadReplay {
        property: property.into(),
        reason: e.to_string(),
    })?;
    run_case(property, &case, caps)
}
