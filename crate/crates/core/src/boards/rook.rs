use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Board;
use crate::error::{Error, Result};
use crate::multiindex::{binomial_row, BigCount, SignedCount};

/// Default bound on occupied rows plus occupied columns for [`dual_rook_numbers`].
pub const DEFAULT_IE_LIMIT: usize = 26;

/// Line subsets are `u64` masks, so no limit may exceed this.
pub const MAX_IE_LINES: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RookFlavor {
    /// `R_k`: at most one rook per row and per column.
    Plain,
    /// `R~_k`: at least one chosen cell per occupied row and per occupied column.
    Dual,
}

/// `values[k]` for `k = 0 ..= |cells|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RookSequence {
    board: Board,
    values: Vec<BigCount>,
    flavor: RookFlavor,
}

impl RookSequence {
    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn values(&self) -> &[BigCount] {
        &self.values
    }

    pub fn flavor(&self) -> RookFlavor {
        self.flavor
    }

    /// The generating polynomial evaluated at `x = -1`.
    pub fn evaluate_at_minus_one(&self) -> SignedCount {
        let mut acc = SignedCount::zero();
        for (k, v) in self.values.iter().enumerate() {
            let v = SignedCount::from(v.clone());
            if k % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        acc
    }
}

/// Rook numbers by a row-by-row transfer over the set of used columns.
pub fn rook_numbers(board: &Board) -> RookSequence {
    // Sweep over the longer side so states range over subsets of the shorter one.
    let oriented = if board.occupied_columns().len() > board.occupied_rows().len() {
        board.transpose()
    } else {
        board.clone()
    };
    let cols: Vec<usize> = oriented.occupied_columns().into_iter().collect();
    let words = cols.len().div_ceil(64).max(1);

    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_row = None;
    for (r, c) in oriented.cells() {
        if last_row != Some(r) {
            rows.push(Vec::new());
            last_row = Some(r);
        }
        rows.last_mut()
            .unwrap()
            .push(cols.binary_search(&c).unwrap());
    }

    let mut states: HashMap<Vec<u64>, BigCount> = HashMap::new();
    states.insert(vec![0; words], BigCount::one());
    for row in &rows {
        let mut next = states.clone();
        for (used, ways) in &states {
            for &c in row {
                let (w, bit) = (c / 64, 1u64 << (c % 64));
                if used[w] & bit == 0 {
                    let mut placed = used.clone();
                    placed[w] |= bit;
                    *next.entry(placed).or_default() += ways;
                }
            }
        }
        states = next;
    }

    let mut values = vec![BigCount::zero(); board.len() + 1];
    for (used, ways) in states {
        let k: u32 = used.iter().map(|w| w.count_ones()).sum();
        values[k as usize] += ways;
    }
    RookSequence {
        board: board.clone(),
        values,
        flavor: RookFlavor::Plain,
    }
}

/// Dual rook numbers by inclusion-exclusion over the occupied lines:
///
/// ```text
/// R~_k = sum over S (occupied rows), T (occupied columns) of
///        (-1)^(|S| + |T|) * C(#cells in no row of S and no column of T, k)
/// ```
///
/// Fails when occupied rows plus occupied columns exceed `ie_limit`.
pub fn dual_rook_numbers(board: &Board, ie_limit: usize) -> Result<RookSequence> {
    if ie_limit > MAX_IE_LINES {
        return Err(Error::InvalidLimit(format!(
            "inclusion-exclusion limit {ie_limit} exceeds the supported maximum of {MAX_IE_LINES}"
        )));
    }
    let rows: Vec<usize> = board.occupied_rows().into_iter().collect();
    let cols: Vec<usize> = board.occupied_columns().into_iter().collect();
    let lines = rows.len() + cols.len();
    if lines > ie_limit {
        return Err(Error::InclusionExclusionLimitExceeded {
            lines,
            limit: ie_limit,
        });
    }

    // Outer subsets range over the longer side, inner subsets over the shorter.
    let transposed = cols.len() > rows.len();
    let (outer_lines, inner_lines) = if transposed {
        (&cols, &rows)
    } else {
        (&rows, &cols)
    };
    // For each inner line, the mask of outer lines holding its cells.
    let mut inner_members = vec![0u64; inner_lines.len()];
    for (r, c) in board.cells() {
        let (o, i) = if transposed { (c, r) } else { (r, c) };
        let o = outer_lines.binary_search(&o).unwrap();
        let i = inner_lines.binary_search(&i).unwrap();
        inner_members[i] |= 1 << o;
    }

    let cells = board.len();
    let inner_count = 1usize << inner_lines.len();
    let outer_count = 1u64 << outer_lines.len();
    // coefficients[n] = sum of signs over (S, T) leaving exactly n cells
    let coefficients = (0..outer_count)
        .into_par_iter()
        .fold(
            || (vec![0i64; cells + 1], vec![0usize; inner_count]),
            |(mut coeff, mut removed), s| {
                let weights: Vec<usize> = inner_members
                    .iter()
                    .map(|m| (m & !s).count_ones() as usize)
                    .collect();
                let surviving: usize = weights.iter().sum();
                let s_odd = s.count_ones() % 2 == 1;
                removed[0] = 0;
                coeff[surviving] += if s_odd { -1 } else { 1 };
                for t in 1..inner_count {
                    removed[t] = removed[t & (t - 1)] + weights[t.trailing_zeros() as usize];
                    let odd = s_odd ^ (t.count_ones() % 2 == 1);
                    coeff[surviving - removed[t]] += if odd { -1 } else { 1 };
                }
                (coeff, removed)
            },
        )
        .map(|(coeff, _)| coeff)
        .reduce(
            || vec![0i64; cells + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let mut totals = vec![SignedCount::zero(); cells + 1];
    for (n, &c) in coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let c = SignedCount::from(c);
        for (k, b) in binomial_row(n).into_iter().enumerate() {
            totals[k] += &c * SignedCount::from(b);
        }
    }
    let values = totals
        .into_iter()
        .map(|v| {
            v.to_biguint()
                .expect("inclusion-exclusion produced a negative dual rook number")
        })
        .collect();
    Ok(RookSequence {
        board: board.clone(),
        values,
        flavor: RookFlavor::Dual,
    })
}

/// `sum_k (-1)^k R~_k(board)`.
pub fn dual_polynomial_at_minus_one(board: &Board, ie_limit: usize) -> Result<SignedCount> {
    Ok(dual_rook_numbers(board, ie_limit)?.evaluate_at_minus_one())
}

/// Whether the dual rook polynomial at `-1` lies in `{-1, 0, 1}`.
pub fn check_fulmek_range(board: &Board, ie_limit: usize) -> Result<bool> {
    let v = dual_polynomial_at_minus_one(board, ie_limit)?;
    Ok(v >= -SignedCount::one() && v <= SignedCount::one())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavityReport {
    /// Which rook numbers were checked, if the values came from a board.
    pub source: Option<RookFlavor>,
    pub is_log_concave: bool,
    /// First `k` with `values[k]^2 < values[k-1] * values[k+1]`.
    pub first_violation: Option<usize>,
}

/// Log-concavity over the span between the first and last nonzero entries.
///
/// Leading and trailing zeros are ignored; a zero strictly inside the span
/// counts as a violation.
pub fn log_concavity(values: &[BigCount]) -> LogConcavityReport {
    let first = values.iter().position(|v| !v.is_zero());
    let last = values.iter().rposition(|v| !v.is_zero());
    let first_violation = match (first, last) {
        (Some(lo), Some(hi)) if hi >= lo + 2 => {
            (lo + 1..hi).find(|&k| &values[k] * &values[k] < &values[k - 1] * &values[k + 1])
        }
        _ => None,
    };
    LogConcavityReport {
        source: None,
        is_log_concave: first_violation.is_none(),
        first_violation,
    }
}

pub fn check_log_concavity(sequence: &RookSequence) -> LogConcavityReport {
    LogConcavityReport {
        source: Some(sequence.flavor()),
        ..log_concavity(sequence.values())
    }
}
