//! Brute-force ground truth. Every subset of cells is visited as an integer
//! mask and tested against the definition directly; nothing here shares code
//! with the closed forms it is used to check.
//!
//! Cells of a box are numbered coordinate-lexicographically with the last
//! coordinate fastest, so bit `b` of a mask over shape `(2, 2)` selects
//! `(1,1), (1,2), (2,1), (2,2)` for `b = 0, 1, 2, 3`. Board cells are
//! numbered in `(row, column)` order.

use rayon::prelude::*;

use crate::boards::Board;
use crate::error::{Error, Result};
use crate::multiindex::{BigCount, BoxShape};

/// Default bound on the number of cells the oracle will enumerate over.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;

/// Masks are `u64`; enumeration over more cells than this is refused outright.
pub const MAX_ORACLE_CELLS: usize = 40;

const CHUNK_BITS: u32 = 12;

/// A point `(a_1, ..., a_n)` of the box, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellTuple {
    coords: Vec<usize>,
}

impl CellTuple {
    pub fn new(shape: &BoxShape, coords: Vec<usize>) -> Result<Self> {
        if coords.len() != shape.rank()
            || coords
                .iter()
                .zip(shape.dims())
                .any(|(&a, &d)| a == 0 || a > d)
        {
            return Err(Error::InvalidMask(format!(
                "cell {coords:?} is not inside box {shape}"
            )));
        }
        Ok(CellTuple { coords })
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// `pi_j`, with `j` 0-based.
    pub fn project(&self, j: usize) -> usize {
        self.coords[j]
    }

    /// Position of this cell in the box's enumeration order.
    pub fn ordinal(&self, shape: &BoxShape) -> usize {
        self.coords
            .iter()
            .zip(shape.dims())
            .fold(0, |acc, (&a, &d)| acc * d + (a - 1))
    }
}

/// All cells of the box in enumeration order.
pub fn box_cells(shape: &BoxShape) -> Vec<CellTuple> {
    let mut cells = Vec::with_capacity(shape.cell_count());
    let mut cur = vec![1usize; shape.rank()];
    for _ in 0..shape.cell_count() {
        cells.push(CellTuple {
            coords: cur.clone(),
        });
        for j in (0..cur.len()).rev() {
            if cur[j] < shape.dims()[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 1;
        }
    }
    cells
}

/// A subset of `width` enumerated cells; bit `b` selects cell `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u64,
    width: usize,
}

impl SubsetMask {
    pub fn new(bits: u64, width: usize) -> Result<Self> {
        if width > 64 {
            return Err(Error::InvalidMask(format!("width {width} exceeds 64 bits")));
        }
        if width < 64 && bits >> width != 0 {
            return Err(Error::InvalidMask(format!(
                "bits {bits:#b} do not fit in width {width}"
            )));
        }
        Ok(SubsetMask { bits, width })
    }

    pub fn from_cells(shape: &BoxShape, cells: &[CellTuple]) -> Result<Self> {
        let width = shape.cell_count();
        let mut bits = 0u64;
        for c in cells {
            let b = c.ordinal(shape);
            if b >= 64 {
                return Err(Error::InvalidMask(format!(
                    "cell ordinal {b} exceeds 64 bits"
                )));
            }
            bits |= 1 << b;
        }
        SubsetMask::new(bits, width)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The subset size `k`.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }
}

fn set_bits(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(b)
    })
}

/// True iff `pi_j(subset) = {1, ..., i_j}` for every coordinate `j`.
pub fn is_fully_projected(shape: &BoxShape, subset: &SubsetMask) -> Result<bool> {
    if subset.width() != shape.cell_count() {
        return Err(Error::InvalidMask(format!(
            "mask width {} does not match the {} cells of {shape}",
            subset.width(),
            shape.cell_count()
        )));
    }
    let cells = box_cells(shape);
    Ok(covers_box(shape, &cells, subset.bits()))
}

fn covers_box(shape: &BoxShape, cells: &[CellTuple], bits: u64) -> bool {
    shape.dims().iter().enumerate().all(|(j, &d)| {
        let mut seen = vec![false; d];
        for b in set_bits(bits) {
            seen[cells[b].project(j) - 1] = true;
        }
        seen.iter().all(|&s| s)
    })
}

fn check_limit(cells: usize, limit: usize) -> Result<()> {
    if limit > MAX_ORACLE_CELLS {
        return Err(Error::InvalidLimit(format!(
            "oracle limit {limit} exceeds the supported maximum of {MAX_ORACLE_CELLS}"
        )));
    }
    if cells > limit {
        return Err(Error::OracleLimitExceeded { cells, limit });
    }
    Ok(())
}

/// Visits every mask below `2^width` exactly once, bucketing by popcount.
///
/// Returns `(visited, accepted)` where `visited[k]` counts all masks of size `k`
/// and `accepted[k]` those for which `accept` holds.
fn census<F>(width: usize, accept: F) -> (Vec<u64>, Vec<u64>)
where
    F: Fn(u64) -> bool + Sync,
{
    let total: u64 = 1 << width;
    let chunk: u64 = 1 << CHUNK_BITS;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut visited = vec![0u64; width + 1];
            let mut accepted = vec![0u64; width + 1];
            let end = ((c + 1) * chunk).min(total);
            for bits in c * chunk..end {
                let k = bits.count_ones() as usize;
                visited[k] += 1;
                if accept(bits) {
                    accepted[k] += 1;
                }
            }
            (visited, accepted)
        })
        .reduce(
            || (vec![0u64; width + 1], vec![0u64; width + 1]),
            |(mut v1, mut a1), (v2, a2)| {
                for (x, y) in v1.iter_mut().zip(v2) {
                    *x += y;
                }
                for (x, y) in a1.iter_mut().zip(a2) {
                    *x += y;
                }
                (v1, a1)
            },
        )
}

/// Per-size tallies from one full pass over all subsets of a box or board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCensus {
    /// `visited[k]`: number of `k`-subsets enumerated.
    pub visited: Vec<u64>,
    /// `accepted[k]`: number of those satisfying the predicate.
    pub accepted: Vec<u64>,
}

impl OracleCensus {
    pub fn accepted_counts(&self) -> Vec<BigCount> {
        self.accepted.iter().map(|&c| BigCount::from(c)).collect()
    }
}

/// Fully-projected subsets of every size, in one pass over all masks.
pub fn oracle_census(shape: &BoxShape, limit: usize) -> Result<OracleCensus> {
    check_limit(shape.cell_count(), limit)?;
    let cells = box_cells(shape);
    let (visited, accepted) = census(cells.len(), |bits| covers_box(shape, &cells, bits));
    Ok(OracleCensus { visited, accepted })
}

/// Number of fully-projected `k`-subsets, by exhaustive enumeration.
pub fn oracle_count(shape: &BoxShape, k: usize, limit: usize) -> Result<BigCount> {
    let cells = shape.cell_count();
    if k == 0 || k > cells {
        return Err(Error::SubsetSizeOutOfRange { k, cells });
    }
    Ok(BigCount::from(oracle_census(shape, limit)?.accepted[k]))
}

/// `[oracle_count(shape, k) for k in 1..=N]`.
pub fn oracle_sequence(shape: &BoxShape, limit: usize) -> Result<Vec<BigCount>> {
    Ok(oracle_census(shape, limit)?.accepted_counts()[1..].to_vec())
}

/// Cells of a board as `(row bit, column bit)` over its occupied lines.
fn board_line_bits(board: &Board) -> (Vec<(u64, u64)>, u64, u64) {
    let rows: Vec<usize> = board.occupied_rows().into_iter().collect();
    let cols: Vec<usize> = board.occupied_columns().into_iter().collect();
    let bits = board
        .cells()
        .map(|(r, c)| {
            let ri = rows.binary_search(&r).unwrap();
            let ci = cols.binary_search(&c).unwrap();
            (1u64 << ri, 1u64 << ci)
        })
        .collect();
    let full = |n: usize| if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (bits, full(rows.len()), full(cols.len()))
}

/// Census of the subsets covering every occupied row and every occupied column.
pub fn oracle_dual_rook_census(board: &Board, limit: usize) -> Result<OracleCensus> {
    check_limit(board.len(), limit)?;
    let (cells, all_rows, all_cols) = board_line_bits(board);
    let (visited, accepted) = census(cells.len(), |bits| {
        let (mut rows, mut cols) = (0u64, 0u64);
        for b in set_bits(bits) {
            rows |= cells[b].0;
            cols |= cells[b].1;
        }
        rows == all_rows && cols == all_cols
    });
    Ok(OracleCensus { visited, accepted })
}

/// Census of the subsets whose cells lie in pairwise distinct rows and columns.
pub fn oracle_rook_census(board: &Board, limit: usize) -> Result<OracleCensus> {
    check_limit(board.len(), limit)?;
    let (cells, _, _) = board_line_bits(board);
    let (visited, accepted) = census(cells.len(), |bits| {
        let (mut rows, mut cols) = (0u64, 0u64);
        for b in set_bits(bits) {
            let (r, c) = cells[b];
            if rows & r != 0 || cols & c != 0 {
                return false;
            }
            rows |= r;
            cols |= c;
        }
        true
    });
    Ok(OracleCensus { visited, accepted })
}

/// `k`-subsets of the board's cells covering every occupied row and column.
pub fn oracle_dual_rook(board: &Board, k: usize, limit: usize) -> Result<BigCount> {
    let census = oracle_dual_rook_census(board, limit)?;
    Ok(census
        .accepted
        .get(k)
        .map_or_else(BigCount::default, |&c| BigCount::from(c)))
}

/// Placements of `k` non-attacking rooks on the board.
pub fn oracle_rook(board: &Board, k: usize, limit: usize) -> Result<BigCount> {
    let census = oracle_rook_census(board, limit)?;
    Ok(census
        .accepted
        .get(k)
        .map_or_else(BigCount::default, |&c| BigCount::from(c)))
}
