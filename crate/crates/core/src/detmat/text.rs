//! `det[ Z(1)|Y(1..0)|X(2..3) ; cols 1,2,3 ]`
//!
//! Row kinds: `X`, `Y`, `Z`, `D` (x - y), `XY@q` (x up to column q, y after)
//! and `YX@q`. A block `K(a..b)` lists rows a..=b and is empty when b < a.

use std::fmt;
use std::str::FromStr;

use super::{RowKind, RowSpec, SymbolicMatrix};
use crate::error::{Error, Result};
use crate::poly::Family;

impl fmt::Display for RowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowKind::X => write!(f, "X"),
            RowKind::Y => write!(f, "Y"),
            RowKind::Z => write!(f, "Z"),
            RowKind::XminusY => write!(f, "D"),
            RowKind::Split { low: Family::X, upto } => write!(f, "XY@{upto}"),
            RowKind::Split { upto, .. } => write!(f, "YX@{upto}"),
        }
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blocks: Vec<(RowKind, usize, usize)> = Vec::new();
        for r in &self.rows {
            match blocks.last_mut() {
                Some((k, _, to)) if *k == r.kind && *to + 1 == r.row => *to = r.row,
                _ => blocks.push((r.kind, r.row, r.row)),
            }
        }
        let rows: Vec<String> = blocks
            .iter()
            .map(|(k, a, b)| {
                if a == b {
                    format!("{k}({a})")
                } else {
                    format!("{k}({a}..{b})")
                }
            })
            .collect();
        let cols: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        write!(f, "det[ {} ; cols {} ]", rows.join("|"), cols.join(","))
    }
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("matrix spec: {s}"))
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| bad(s))
}

fn parse_kind(s: &str) -> Result<RowKind> {
    Ok(match s {
        "X" => RowKind::X,
        "Y" => RowKind::Y,
        "Z" => RowKind::Z,
        "D" => RowKind::XminusY,
        _ => {
            let (head, q) = s.split_once('@').ok_or_else(|| bad(s))?;
            let low = match head {
                "XY" => Family::X,
                "YX" => Family::Y,
                _ => return Err(bad(s)),
            };
            RowKind::Split {
                low,
                upto: parse_usize(q)?,
            }
        }
    })
}

impl FromStr for SymbolicMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("det[")
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| bad(s))?;
        let (rows_part, cols_part) = body.split_once(';').ok_or_else(|| bad(s))?;
        let cols_part = cols_part.trim().strip_prefix("cols").ok_or_else(|| bad(s))?.trim();
        let cols = if cols_part.is_empty() {
            Vec::new()
        } else {
            cols_part.split(',').map(parse_usize).collect::<Result<Vec<_>>>()?
        };
        let mut rows = Vec::new();
        let rows_part = rows_part.trim();
        if !rows_part.is_empty() {
            for blk in rows_part.split('|') {
                let blk = blk.trim();
                let (kind, range) = blk
                    .strip_suffix(')')
                    .and_then(|b| b.split_once('('))
                    .ok_or_else(|| bad(blk))?;
                let kind = parse_kind(kind.trim())?;
                let (a, b) = match range.split_once("..") {
                    Some((a, b)) => (parse_usize(a)?, parse_usize(b)?),
                    None => {
                        let a = parse_usize(range)?;
                        (a, a)
                    }
                };
                if a == 0 {
                    return Err(bad(blk));
                }
                rows.extend((a..=b).map(|r| RowSpec::new(kind, r)));
            }
        }
        Ok(SymbolicMatrix { rows, cols })
    }
}
