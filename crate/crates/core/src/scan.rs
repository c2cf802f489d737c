//! Scans every canonical skew Ferrers board up to a cell bound and tests the
//! evaluation-range and log-concavity properties of its dual rook numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boards::{
    board_from_skew, check_log_concavity, dual_rook_numbers, enumerate_skew_shapes,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanCheck {
    /// Dual rook polynomial at `-1` lies in `{-1, 0, 1}`.
    Fulmek,
    /// Dual rook numbers are log-concave over their support.
    #[serde(rename = "logconcave")]
    LogConcave,
}

impl ScanCheck {
    pub const ALL: [ScanCheck; 2] = [ScanCheck::Fulmek, ScanCheck::LogConcave];

    pub fn name(self) -> &'static str {
        match self {
            ScanCheck::Fulmek => "fulmek",
            ScanCheck::LogConcave => "logconcave",
        }
    }
}

impl fmt::Display for ScanCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fulmek" => Ok(ScanCheck::Fulmek),
            "logconcave" => Ok(ScanCheck::LogConcave),
            other => Err(Error::Parse(format!("unknown check {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanViolation {
    /// `lambda/mu`.
    pub shape: String,
    pub check: ScanCheck,
    /// The dual rook numbers `R~_0, R~_1, ...` as decimal strings.
    pub dual_rook_numbers: Vec<String>,
    /// Evaluation at `-1` for range violations, first failing `k` for log-concavity.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub max_cells: usize,
    pub checks: Vec<ScanCheck>,
    pub boards_scanned: usize,
    /// How often each value of the dual rook polynomial at `-1` occurred.
    pub evaluations: BTreeMap<String, usize>,
    pub violations: Vec<ScanViolation>,
}

impl ScanSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct BoardOutcome {
    evaluation: String,
    violations: Vec<ScanViolation>,
}

/// Runs `checks` over every shape from [`enumerate_skew_shapes`]. Violations
/// are listed in enumeration order regardless of how the work was scheduled.
pub fn scan_skew_boards(
    max_cells: usize,
    checks: &[ScanCheck],
    ie_limit: usize,
) -> Result<ScanSummary> {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();

    let shapes: Vec<_> = enumerate_skew_shapes(max_cells).collect();
    let outcomes: Vec<BoardOutcome> = shapes
        .par_iter()
        .map(|shape| -> Result<BoardOutcome> {
            let seq = dual_rook_numbers(&board_from_skew(shape), ie_limit)?;
            let value = seq.evaluate_at_minus_one();
            let numbers = || seq.values().iter().map(|v| v.to_string()).collect();
            let mut violations = Vec::new();
            for &check in &checks {
                let detail = match check {
                    ScanCheck::Fulmek => {
                        let in_range = (-1..=1).any(|x| value == x.into());
                        (!in_range).then(|| value.to_string())
                    }
                    ScanCheck::LogConcave => check_log_concavity(&seq)
                        .first_violation
                        .map(|k| format!("k={k}")),
                };
                if let Some(detail) = detail {
                    violations.push(ScanViolation {
                        shape: shape.to_string(),
                        check,
                        dual_rook_numbers: numbers(),
                        detail,
                    });
                }
            }
            Ok(BoardOutcome {
                evaluation: value.to_string(),
                violations,
            })
        })
        .collect::<Result<_>>()?;

    let mut evaluations = BTreeMap::new();
    let mut violations = Vec::new();
    for outcome in outcomes {
        *evaluations.entry(outcome.evaluation).or_insert(0) += 1;
        violations.extend(outcome.violations);
    }
    Ok(ScanSummary {
        max_cells,
        checks,
        boards_scanned: shapes.len(),
        evaluations,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::DEFAULT_IE_LIMIT;

    #[test]
    fn single_cell_scan() {
        let s = scan_skew_boards(1, &[ScanCheck::LogConcave], DEFAULT_IE_LIMIT).unwrap();
        assert_eq!(s.boards_scanned, 1);
        assert!(s.is_clean());
        assert_eq!(s.evaluations.get("-1"), Some(&1));
    }

    #[test]
    fn checks_are_normalized() {
        let s = scan_skew_boards(
            2,
            &[
                ScanCheck::LogConcave,
                ScanCheck::Fulmek,
                ScanCheck::LogConcave,
            ],
            DEFAULT_IE_LIMIT,
        )
        .unwrap();
        assert_eq!(s.checks, ScanCheck::ALL.to_vec());
        assert_eq!(s.boards_scanned, 4);
    }

    #[test]
    fn limit_propagates() {
        let err = scan_skew_boards(3, &ScanCheck::ALL, 3).unwrap_err();
        assert!(err.is_limit());
    }

    #[test]
    fn check_names() {
        for c in ScanCheck::ALL {
            assert_eq!(c.name().parse::<ScanCheck>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
        assert!("nope".parse::<ScanCheck>().is_err());
    }
}
