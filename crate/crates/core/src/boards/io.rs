//! Board file formats.
//!
//! ASCII grid: one line per row, top to bottom; `#` is a cell and `.` is not.
//! Trailing whitespace is ignored, and blank lines may only surround the grid.
//!
//! ```text
//! .#
//! #.
//! ```
//!
//! JSON: `{"cells": [[row, column], ...]}` with 1-based coordinates.

use serde::{Deserialize, Serialize};

use super::Board;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoardDocument {
    cells: Vec<[usize; 2]>,
}

pub fn parse_ascii_board(text: &str) -> Result<Board> {
    let lines: Vec<&str> = text.lines().map(str::trim_end).collect();
    let start = lines.iter().position(|l| !l.is_empty());
    let end = lines.iter().rposition(|l| !l.is_empty());
    let (Some(start), Some(end)) = (start, end) else {
        return Err(Error::Parse("empty grid".into()));
    };

    let mut cells = Vec::new();
    for (i, line) in lines[start..=end].iter().enumerate() {
        let row = i + 1;
        if line.is_empty() {
            return Err(Error::Parse(format!(
                "blank line inside the grid at row {row}"
            )));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push((row, j + 1)),
                '.' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at row {row}, column {}",
                        j + 1
                    )))
                }
            }
        }
    }
    Board::new(cells)
}

pub fn parse_json_board(text: &str) -> Result<Board> {
    let doc: BoardDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("board JSON: {e}")))?;
    Board::new(doc.cells.into_iter().map(|[r, c]| (r, c)))
}

/// JSON when the first non-blank character is `{`, ASCII grid otherwise.
pub fn parse_board(text: &str) -> Result<Board> {
    if text.trim_start().starts_with('{') {
        parse_json_board(text)
    } else {
        parse_ascii_board(text)
    }
}

/// Renders the board's bounding rectangle as an ASCII grid.
pub fn board_to_ascii(board: &Board) -> String {
    let (rows, cols) = board.bounds();
    let mut out = String::new();
    for r in 1..=rows {
        let line: String = (1..=cols)
            .map(|c| if board.contains((r, c)) { '#' } else { '.' })
            .collect();
        out.push_str(line.trim_end_matches('.'));
        out.push('\n');
    }
    out
}

pub fn board_to_json(board: &Board) -> String {
    let doc = BoardDocument {
        cells: board.cells().map(|(r, c)| [r, c]).collect(),
    };
    serde_json::to_string(&doc).expect("board serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{board_from_skew, enumerate_skew_shapes};

    #[test]
    fn ascii() {
        let b = parse_ascii_board("#\n").unwrap();
        assert_eq!(b, Board::new([(1, 1)]).unwrap());
        let b = parse_ascii_board("\n.#  \n#.\n\n").unwrap();
        assert_eq!(b, Board::new([(1, 2), (2, 1)]).unwrap());
        assert!(parse_ascii_board("#\n\n#\n").is_err());
        assert!(parse_ascii_board("#x\n").is_err());
        assert!(parse_ascii_board("\n  \n").is_err());
        assert!(parse_ascii_board("..\n").unwrap().is_empty());
    }

    #[test]
    fn json() {
        let b = parse_json_board(r#"{"cells": [[1,2],[2,1]]}"#).unwrap();
        assert_eq!(b, Board::new([(1, 2), (2, 1)]).unwrap());
        assert!(parse_json_board(r#"{"cells": [[1,1],[1,1]]}"#).is_err());
        assert!(parse_json_board(r#"{"cells": [[0,1]]}"#).is_err());
        assert!(parse_json_board(r#"{"cells": [[-1,1]]}"#).is_err());
        assert!(parse_json_board(r#"{"cells": [[1,1,1]]}"#).is_err());
        assert!(parse_json_board(r#"{"cells": [], "extra": 1}"#).is_err());
        assert!(parse_json_board(r#"{"cells": []}"#).unwrap().is_empty());
    }

    #[test]
    fn detection() {
        assert_eq!(parse_board("  {\"cells\":[[1,1]]}").unwrap().len(), 1);
        assert_eq!(parse_board("##\n").unwrap().len(), 2);
    }

    #[test]
    fn both_formats_reproduce_skew_boards() {
        for shape in enumerate_skew_shapes(5) {
            let b = board_from_skew(&shape);
            assert_eq!(
                parse_ascii_board(&board_to_ascii(&b)).unwrap(),
                b,
                "{shape}"
            );
            assert_eq!(parse_json_board(&board_to_json(&b)).unwrap(), b, "{shape}");
        }
    }
}
