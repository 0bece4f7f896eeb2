//! HEXBOUND v1 and HEXLIST v1 text formats.
//!
//! ```text
//! HEXBOUND 1        HEXLIST 1
//! X Y               q r
//! <steps 0..5>      q r
//!                   ...
//! ```
//!
//! Newline-delimited ASCII. A single trailing newline is allowed; anything
//! else after the last record is rejected.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::boundary::{emit_word, parse_word, BoundaryCycle, BoundaryError, BoundaryWord};
use crate::lattice::{HexCoord, StepDir, VertexCoord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("ParseError: line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("ParseError: line {line}: duplicate hexagon {hex}")]
    DuplicateHexagon { line: usize, hex: HexCoord },
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn records(text: &str) -> Vec<&str> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    body.split('\n').collect()
}

fn int_pair(line_no: usize, line: &str) -> Result<(i64, i64), FormatError> {
    let mut parts = line.split(' ');
    let mut next = || {
        parts
            .next()
            .and_then(|p| p.parse::<i64>().ok())
            .ok_or_else(|| syntax(line_no, format!("expected two integers, got {line:?}")))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(syntax(line_no, format!("trailing data in {line:?}")));
    }
    Ok(pair)
}

pub fn parse_hexbound_word(text: &str) -> Result<BoundaryWord, FormatError> {
    let lines = records(text);
    if lines.first() != Some(&"HEXBOUND 1") {
        return Err(syntax(1, "expected header `HEXBOUND 1`"));
    }
    if lines.len() != 3 {
        return Err(syntax(lines.len().min(4), format!("expected 3 lines, found {}", lines.len())));
    }
    let (x, y) = int_pair(2, lines[1])?;
    let steps = lines[2]
        .chars()
        .map(|c| StepDir::from_char(c).ok_or_else(|| syntax(3, format!("bad step symbol {c:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoundaryWord { start: VertexCoord::new(x, y), steps })
}

pub fn parse_hexbound(text: &str) -> Result<BoundaryCycle, FormatError> {
    Ok(parse_word(&parse_hexbound_word(text)?)?)
}

/// Canonical HEXBOUND text for a cycle.
pub fn write_hexbound(c: &BoundaryCycle) -> String {
    let w = emit_word(c);
    format!("HEXBOUND 1\n{} {}\n{}\n", w.start.x, w.start.y, w.steps_string())
}

/// Hexagons in file order. Duplicates are rejected; connectivity is not
/// checked here.
pub fn parse_hexlist(text: &str) -> Result<Vec<HexCoord>, FormatError> {
    let lines = records(text);
    if lines.first() != Some(&"HEXLIST 1") {
        return Err(syntax(1, "expected header `HEXLIST 1`"));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(lines.len() - 1);
    for (i, line) in lines.iter().enumerate().skip(1) {
        let (q, r) = int_pair(i + 1, line)?;
        let hex = HexCoord::new(q, r);
        if !seen.insert(hex) {
            return Err(FormatError::DuplicateHexagon { line: i + 1, hex });
        }
        out.push(hex);
    }
    Ok(out)
}

/// HEXLIST text with hexagons sorted by `(q, r)`.
pub fn write_hexlist<'a>(hs: impl IntoIterator<Item = &'a HexCoord>) -> String {
    let mut sorted: Vec<HexCoord> = hs.into_iter().copied().collect();
    sorted.sort_unstable();
    let mut s = String::from("HEXLIST 1\n");
    for h in sorted {
        let _ = writeln!(s, "{} {}", h.q, h.r);
    }
    s
}
