//! Two-dimensional boards, skew Ferrers boards and their (dual) rook numbers.

mod enumerate;
pub mod io;
mod rook;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use enumerate::enumerate_skew_shapes;
pub use rook::{
    check_fulmek_range, check_log_concavity, dual_polynomial_at_minus_one, dual_rook_numbers,
    log_concavity, rook_numbers, LogConcavityReport, RookFlavor, RookSequence, DEFAULT_IE_LIMIT,
    MAX_IE_LINES,
};

/// A finite set of 1-based `(row, column)` cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Board {
    cells: BTreeSet<(usize, usize)>,
}

impl Board {
    /// Rejects zero coordinates and repeated cells.
    pub fn new<I>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (r, c) in cells {
            if r == 0 || c == 0 {
                return Err(Error::InvalidBoard(format!(
                    "cell ({r}, {c}) is not 1-based"
                )));
            }
            if !set.insert((r, c)) {
                return Err(Error::InvalidBoard(format!("duplicate cell ({r}, {c})")));
            }
        }
        Ok(Board { cells: set })
    }

    /// The full `rows x cols` rectangle.
    pub fn full(rows: usize, cols: usize) -> Self {
        Board {
            cells: (1..=rows)
                .flat_map(|r| (1..=cols).map(move |c| (r, c)))
                .collect(),
        }
    }

    pub fn cells(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(max row, max column)`, or `(0, 0)` for the empty board.
    pub fn bounds(&self) -> (usize, usize) {
        self.cells
            .iter()
            .fold((0, 0), |(mr, mc), &(r, c)| (mr.max(r), mc.max(c)))
    }

    pub fn occupied_rows(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|&(r, _)| r).collect()
    }

    pub fn occupied_columns(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|&(_, c)| c).collect()
    }

    pub fn transpose(&self) -> Board {
        Board {
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Adds a cell, returning whether it was new. Zero coordinates are rejected.
    pub fn insert(&mut self, cell: (usize, usize)) -> Result<bool> {
        if cell.0 == 0 || cell.1 == 0 {
            return Err(Error::InvalidBoard(format!("cell {cell:?} is not 1-based")));
        }
        Ok(self.cells.insert(cell))
    }

    /// Drops empty rows and empty columns and renumbers what is left from 1.
    ///
    /// Two boards have the same rook and dual rook numbers whenever their
    /// canonical forms agree.
    pub fn canonical(&self) -> Board {
        let rows: Vec<usize> = self.occupied_rows().into_iter().collect();
        let cols: Vec<usize> = self.occupied_columns().into_iter().collect();
        Board {
            cells: self
                .cells
                .iter()
                .map(|&(r, c)| {
                    (
                        rows.binary_search(&r).unwrap() + 1,
                        cols.binary_search(&c).unwrap() + 1,
                    )
                })
                .collect(),
        }
    }
}

/// A skew shape `lambda / mu` with `mu` contained in `lambda`.
///
/// `inner` is stored padded with zeros to the length of `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Vec<usize>, mut inner: Vec<usize>) -> Result<Self> {
        if outer.is_empty() {
            return Err(Error::InvalidPartition("outer partition is empty".into()));
        }
        if outer.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "outer partition {outer:?} has a zero part"
            )));
        }
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "outer partition {outer:?} is not weakly decreasing"
            )));
        }
        if inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "inner partition {inner:?} is not weakly decreasing"
            )));
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        if inner.len() > outer.len() {
            return Err(Error::InvalidPartition(format!(
                "inner partition {inner:?} has more parts than outer {outer:?}"
            )));
        }
        inner.resize(outer.len(), 0);
        if let Some(r) = outer.iter().zip(&inner).position(|(l, m)| m > l) {
            return Err(Error::InvalidPartition(format!(
                "inner part {} exceeds outer part {} in row {}",
                inner[r],
                outer[r],
                r + 1
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The plain Ferrers shape of `outer`.
    pub fn straight(outer: Vec<usize>) -> Result<Self> {
        SkewShape::new(outer, Vec::new())
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Padded to the length of [`SkewShape::outer`].
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    /// `|lambda| - |mu|`.
    pub fn cell_count(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }
}

impl fmt::Display for SkewShape {
    /// `lambda/mu` with comma-separated parts; trailing zeros of `mu` are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[usize]| {
            parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let nonzero = self.inner.iter().take_while(|&&m| m > 0).count();
        write!(f, "{}/{}", join(&self.outer), join(&self.inner[..nonzero]))
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `"3,2,1/1,1"`; an empty or missing `/mu` part means `mu = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_parts = |part: &str| -> Result<Vec<usize>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|e| {
                        Error::InvalidPartition(format!("bad part {p:?} in {s:?}: {e}"))
                    })
                })
                .collect()
        };
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        SkewShape::new(parse_parts(outer)?, parse_parts(inner)?)
    }
}

/// Cells `(r, c)` with `mu_r < c <= lambda_r`.
pub fn board_from_skew(shape: &SkewShape) -> Board {
    Board {
        cells: shape
            .outer
            .iter()
            .zip(&shape.inner)
            .enumerate()
            .flat_map(|(r, (&l, &m))| (m + 1..=l).map(move |c| (r + 1, c)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn board_validation() {
        assert!(Board::new([(1, 1), (1, 1)]).is_err());
        assert!(Board::new([(0, 1)]).is_err());
        let b = Board::new([(2, 3), (1, 1)]).unwrap();
        assert_eq!(b.bounds(), (2, 3));
        assert_eq!(Board::default().bounds(), (0, 0));
        assert_eq!(
            b.occupied_rows().into_iter().collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert_eq!(
            b.occupied_columns().into_iter().collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn canonical_compresses_rows_and_columns() {
        let b = Board::new([(2, 5), (4, 2)]).unwrap();
        assert_eq!(b.canonical(), Board::new([(1, 2), (2, 1)]).unwrap());
        assert_eq!(Board::full(2, 3).canonical(), Board::full(2, 3));
    }

    #[test]
    fn skew_validation() {
        assert!(SkewShape::new(vec![1, 2], vec![]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![0, 1]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![3]).is_err());
        assert!(SkewShape::new(vec![2], vec![1, 1]).is_err());
        assert!(SkewShape::new(vec![], vec![]).is_err());
        assert!(SkewShape::new(vec![2, 0], vec![]).is_err());
        let s = SkewShape::new(vec![3, 2, 1], vec![1, 1, 0, 0]).unwrap();
        assert_eq!(s.inner(), &[1, 1, 0]);
        assert_eq!(s.cell_count(), 4);
    }

    #[test]
    fn skew_parse_and_display() {
        assert_eq!(skew("2,2/"), SkewShape::straight(vec![2, 2]).unwrap());
        assert_eq!(skew("2,2"), SkewShape::straight(vec![2, 2]).unwrap());
        assert_eq!(skew(" 3, 2,1 / 1,1").to_string(), "3,2,1/1,1");
        assert_eq!(skew("2,2/").to_string(), "2,2/");
        assert!("2,x/1".parse::<SkewShape>().is_err());
        assert!("/".parse::<SkewShape>().is_err());
    }

    #[test]
    fn skew_boards() {
        assert_eq!(board_from_skew(&skew("2,2/")), Board::full(2, 2));
        assert_eq!(
            board_from_skew(&skew("2,1/1")),
            Board::new([(1, 2), (2, 1)]).unwrap()
        );
        assert_eq!(
            board_from_skew(&skew("3,2,1/1,1")),
            Board::new([(1, 2), (1, 3), (2, 2), (3, 1)]).unwrap()
        );
        // empty rows contribute nothing
        assert_eq!(board_from_skew(&skew("2,2,1/2,1")).len(), 2);
    }
}
