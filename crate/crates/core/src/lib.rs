//! Exact counting of fully-projected subsets of a multidimensional box.
//!
//! A `k`-subset of `{1..i_1} x ... x {1..i_n}` is *fully projected* when its
//! projection onto every coordinate axis is the whole index set. This crate
//! computes those counts `t_k` in closed form by inclusion-exclusion, checks
//! them against exhaustive enumeration, and evaluates the alternating sum
//! `sum_k (-1)^(k-1) t_k`.
//!
//! The [`boards`] module covers the two-dimensional relatives: rook numbers,
//! dual rook numbers (every occupied row and column hit at least once), skew
//! Ferrers boards, and the scans in [`scan`] that test conjectured properties
//! of dual rook numbers over all small skew boards.
//!
//! ```
//! use fullproj::{count_sequence, check_identity, BoxShape};
//!
//! let shape = BoxShape::new(vec![2, 2]).unwrap();
//! let t: Vec<u32> = count_sequence(&shape)
//!     .counts()
//!     .iter()
//!     .map(|c| c.try_into().unwrap())
//!     .collect();
//! assert_eq!(t, [0, 2, 4, 1]);
//! assert!(check_identity(&shape).matches_derived);
//! ```

pub mod boards;
pub mod counts;
pub mod error;
pub mod multiindex;
pub mod oracle;
pub mod scan;

pub use boards::{
    board_from_skew, check_fulmek_range, check_log_concavity, dual_polynomial_at_minus_one,
    dual_rook_numbers, enumerate_skew_shapes, rook_numbers, Board, LogConcavityReport, RookFlavor,
    RookSequence, SkewShape, DEFAULT_IE_LIMIT,
};
pub use counts::{
    alternating_sum, check_identity, count_fully_projected, count_sequence, CountSequence,
    IdentityReport, ProjectionCounter,
};
pub use error::{Error, Result};
pub use multiindex::{
    binomial, iter_multi_indices, iter_strict_multi_indices, BigCount, BoxShape, MultiIndex,
    SignedCount,
};
pub use oracle::{oracle_count, oracle_dual_rook, oracle_rook, DEFAULT_ORACLE_LIMIT};
pub use scan::{scan_skew_boards, ScanCheck, ScanSummary, ScanViolation};
