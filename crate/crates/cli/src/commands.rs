use std::fmt::Write as _;
use std::fs;

use fullproj::boards::io::parse_board;
use fullproj::oracle::{oracle_dual_rook_census, oracle_rook_census, oracle_sequence};
use fullproj::{
    board_from_skew, check_identity, check_log_concavity, count_fully_projected, count_sequence,
    dual_rook_numbers, oracle_count, rook_numbers, scan_skew_boards, BigCount, Board, BoxShape,
    RookFlavor, ScanCheck, SignedCount, SkewShape,
};
use serde_json::{json, Value};

use crate::args::{BoardAction, BoardArgs, Command, GlobalOpts};
use crate::error::CliError;

/// Process exit status for a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Mismatch = 1,
    Violation = 4,
}

/// Everything a command produced, rendered later in the requested format.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub table: String,
    pub csv: String,
    pub status: Status,
}

/// Exact integer as a JSON number, whatever its size.
pub fn big_json<T: ToString>(n: &T) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn big_array(values: &[BigCount]) -> Value {
    Value::Array(values.iter().map(big_json).collect())
}

fn shape(dims: &[usize]) -> Result<BoxShape, CliError> {
    Ok(BoxShape::new(dims.to_vec())?)
}

pub fn run(command: &Command, opts: &GlobalOpts) -> Result<Report, CliError> {
    match command {
        Command::Count { dims, k } => count(&shape(dims)?, *k, opts),
        Command::Sequence { dims } => sequence(&shape(dims)?, opts),
        Command::Identity { dims } => identity(&shape(dims)?),
        Command::Board(args) => board(args, opts),
        Command::Scan { max_cells, checks } => {
            let checks: Vec<ScanCheck> = if checks.is_empty() {
                ScanCheck::ALL.to_vec()
            } else {
                checks.iter().map(|&c| c.into()).collect()
            };
            scan(*max_cells, &checks, opts)
        }
    }
}

fn count(shape: &BoxShape, k: usize, opts: &GlobalOpts) -> Result<Report, CliError> {
    let value = count_fully_projected(shape, k)?;
    let mut result = json!({ "value": big_json(&value) });
    let mut table = format!("t_{k}{shape} = {value}\n");
    let mut csv_header = "k,t_k".to_string();
    let mut csv_row = format!("{k},{value}");
    let mut status = Status::Success;
    if opts.oracle {
        let expected = oracle_count(shape, k, opts.oracle_limit)?;
        let matched = expected == value;
        result["oracle"] = big_json(&expected);
        result["match"] = Value::Bool(matched);
        writeln!(table, "oracle = {expected} ({})", match_word(matched)).unwrap();
        csv_header.push_str(",oracle,match");
        write!(csv_row, ",{expected},{matched}").unwrap();
        if !matched {
            status = Status::Mismatch;
        }
    }
    Ok(Report {
        command: "count",
        params: json!({ "dims": shape.dims(), "k": k, "oracle": opts.oracle }),
        result,
        table,
        csv: format!("{csv_header}\n{csv_row}\n"),
        status,
    })
}

fn match_word(matched: bool) -> &'static str {
    if matched {
        "match"
    } else {
        "MISMATCH"
    }
}

fn sequence(shape: &BoxShape, opts: &GlobalOpts) -> Result<Report, CliError> {
    let seq = count_sequence(shape);
    let oracle = if opts.oracle {
        Some(oracle_sequence(shape, opts.oracle_limit)?)
    } else {
        None
    };
    let mut result = json!({ "sequence": big_array(seq.counts()) });
    let mut status = Status::Success;
    let mut table = format!("shape {shape}\n");
    let mut csv = String::from("k,t_k");
    if let Some(expected) = &oracle {
        let matched = expected.as_slice() == seq.counts();
        result["oracle"] = big_array(expected);
        result["match"] = Value::Bool(matched);
        csv.push_str(",oracle");
        if !matched {
            status = Status::Mismatch;
        }
    }
    csv.push('\n');
    let rows: Vec<Vec<String>> = seq
        .counts()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut row = vec![(i + 1).to_string(), t.to_string()];
            if let Some(expected) = &oracle {
                row.push(expected[i].to_string());
            }
            row
        })
        .collect();
    for row in &rows {
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    let mut header = vec!["k", "t_k"];
    if oracle.is_some() {
        header.push("oracle");
    }
    table.push_str(&columns(&header, &rows));
    if let Some(m) = result.get("match").and_then(Value::as_bool) {
        writeln!(table, "oracle: {}", match_word(m)).unwrap();
    }
    Ok(Report {
        command: "sequence",
        params: json!({ "dims": shape.dims(), "oracle": opts.oracle }),
        result,
        table,
        csv,
        status,
    })
}

fn identity(shape: &BoxShape) -> Result<Report, CliError> {
    let r = check_identity(shape);
    let result = json!({
        "alternating_sum": big_json(&r.alternating_sum),
        "stated_sign": r.stated_sign,
        "derived_sign": r.derived_sign,
        "matches_stated": r.matches_stated,
        "matches_derived": r.matches_derived,
    });
    let pairs = [
        ("alternating_sum", r.alternating_sum.to_string()),
        ("stated_sign", r.stated_sign.to_string()),
        ("derived_sign", r.derived_sign.to_string()),
        ("matches_stated", r.matches_stated.to_string()),
        ("matches_derived", r.matches_derived.to_string()),
    ];
    let mut table = format!("shape {shape}\n");
    table.push_str(&key_values(&pairs));
    Ok(Report {
        command: "identity",
        params: json!({ "dims": shape.dims() }),
        result,
        table,
        csv: key_value_csv(&pairs),
        status: Status::Success,
    })
}

fn load_board(args: &BoardArgs) -> Result<(Board, String), CliError> {
    if let Some(skew) = &args.skew {
        let shape: SkewShape = skew.parse()?;
        Ok((board_from_skew(&shape), format!("skew:{shape}")))
    } else {
        let path = args.file.as_ref().expect("clap enforces one board source");
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("reading {}: {e}", path.display())))?;
        Ok((parse_board(&text)?, format!("file:{}", path.display())))
    }
}

fn action_name(action: BoardAction) -> &'static str {
    match action {
        BoardAction::Rook => "rook",
        BoardAction::Dual => "dual",
        BoardAction::Eval => "eval",
        BoardAction::Fulmek => "fulmek",
        BoardAction::Logconcave => "logconcave",
    }
}

fn board(args: &BoardArgs, opts: &GlobalOpts) -> Result<Report, CliError> {
    let (board, source) = load_board(args)?;
    let params = json!({
        "source": source,
        "action": action_name(args.action),
        "oracle": opts.oracle,
    });
    let mut status = Status::Success;
    let (result, table, csv) = match args.action {
        BoardAction::Rook | BoardAction::Dual => {
            let seq = if args.action == BoardAction::Rook {
                rook_numbers(&board)
            } else {
                dual_rook_numbers(&board, opts.ie_limit)?
            };
            let label = match seq.flavor() {
                RookFlavor::Plain => "R_k",
                RookFlavor::Dual => "dual_R_k",
            };
            let mut result = json!({
                "flavor": seq.flavor(),
                "cells": board.len(),
                "values": big_array(seq.values()),
            });
            let mut header = vec!["k", label];
            let oracle = if opts.oracle {
                let census = if seq.flavor() == RookFlavor::Plain {
                    oracle_rook_census(&board, opts.oracle_limit)?
                } else {
                    oracle_dual_rook_census(&board, opts.oracle_limit)?
                };
                let expected = census.accepted_counts();
                let matched = expected.as_slice() == seq.values();
                result["oracle"] = big_array(&expected);
                result["match"] = Value::Bool(matched);
                if !matched {
                    status = Status::Mismatch;
                }
                header.push("oracle");
                Some(expected)
            } else {
                None
            };
            let rows: Vec<Vec<String>> = seq
                .values()
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let mut row = vec![k.to_string(), v.to_string()];
                    if let Some(expected) = &oracle {
                        row.push(expected[k].to_string());
                    }
                    row
                })
                .collect();
            let mut csv = header.join(",");
            csv.push('\n');
            for row in &rows {
                csv.push_str(&row.join(","));
                csv.push('\n');
            }
            let mut table = columns(&header, &rows);
            if let Some(m) = result.get("match").and_then(Value::as_bool) {
                writeln!(table, "oracle: {}", match_word(m)).unwrap();
            }
            (result, table, csv)
        }
        BoardAction::Eval | BoardAction::Fulmek => {
            let seq = dual_rook_numbers(&board, opts.ie_limit)?;
            let value = seq.evaluate_at_minus_one();
            let mut pairs = vec![("value", value.to_string())];
            let mut result = json!({ "value": big_json(&value) });
            if args.action == BoardAction::Fulmek {
                let in_range = value >= SignedCount::from(-1) && value <= SignedCount::from(1);
                pairs.push(("in_range", in_range.to_string()));
                result["in_range"] = Value::Bool(in_range);
            }
            (result, key_values(&pairs), key_value_csv(&pairs))
        }
        BoardAction::Logconcave => {
            let seq = dual_rook_numbers(&board, opts.ie_limit)?;
            let report = check_log_concavity(&seq);
            let result = json!({
                "dual_rook_numbers": big_array(seq.values()),
                "is_log_concave": report.is_log_concave,
                "first_violation": report.first_violation,
            });
            let pairs = [
                (
                    "dual_rook_numbers",
                    seq.values()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
                ("is_log_concave", report.is_log_concave.to_string()),
                (
                    "first_violation",
                    report
                        .first_violation
                        .map_or_else(String::new, |k| k.to_string()),
                ),
            ];
            (result, key_values(&pairs), key_value_csv(&pairs))
        }
    };
    Ok(Report {
        command: "board",
        params,
        result,
        table,
        csv,
        status,
    })
}

fn scan(max_cells: usize, checks: &[ScanCheck], opts: &GlobalOpts) -> Result<Report, CliError> {
    if max_cells == 0 {
        return Err(CliError::invalid("--max-cells must be at least 1"));
    }
    let summary = scan_skew_boards(max_cells, checks, opts.ie_limit)?;
    let status = if summary.is_clean() {
        Status::Success
    } else {
        Status::Violation
    };
    let check_names: Vec<&str> = summary.checks.iter().map(|c| c.name()).collect();

    let mut table = format!(
        "scanned {} skew boards with 1..={} cells; checks: {}\n",
        summary.boards_scanned,
        max_cells,
        check_names.join(", ")
    );
    table.push_str("dual rook polynomial at -1:\n");
    for (value, n) in &summary.evaluations {
        writeln!(table, "  {value:>3}: {n}").unwrap();
    }
    writeln!(table, "violations: {}", summary.violations.len()).unwrap();
    let mut csv = String::from("shape,check,detail,dual_rook_numbers\n");
    for v in &summary.violations {
        writeln!(
            table,
            "  {} {} {} [{}]",
            v.shape,
            v.check,
            v.detail,
            v.dual_rook_numbers.join(", ")
        )
        .unwrap();
        writeln!(
            csv,
            "{},{},{},{}",
            v.shape,
            v.check,
            v.detail,
            v.dual_rook_numbers.join(" ")
        )
        .unwrap();
    }

    let violations: Vec<Value> = summary
        .violations
        .iter()
        .map(|v| {
            json!({
                "shape": v.shape,
                "check": v.check,
                "detail": v.detail,
                "dual_rook_numbers": v.dual_rook_numbers.iter().map(big_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let result = json!({
        "boards_scanned": summary.boards_scanned,
        "evaluations": summary.evaluations,
        "violation_count": summary.violations.len(),
        "violations": violations,
    });
    Ok(Report {
        command: "scan",
        params: json!({ "max_cells": max_cells, "checks": check_names }),
        result,
        table,
        csv,
        status,
    })
}

fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&line(&mut header.iter().copied()));
    out.push('\n');
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn key_value_csv(pairs: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in pairs {
        writeln!(out, "{k},{v}").unwrap();
    }
    out
}
