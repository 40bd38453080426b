//! Plain-text family files.
//!
//! ```text
//! # canonical 3-basis
//! n = 3
//! f 1: 0 1, 1/2 0, 1 0
//! f 2: 0 0, 1/2 1, 1 0
//! f 3: 0 0, 1/2 0, 1 1
//! ```
//!
//! `#` starts a comment. The header must be the first non-blank line and
//! every member `1..=n` must appear exactly once.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::family::FuzzyFamily;
use crate::plfun::PlFunc;

fn at(line: usize, message: impl Into<String>) -> Error {
    Error::FamilyFile { line, message: message.into() }
}

fn parse_header(line: usize, text: &str) -> Result<usize> {
    let rest = text
        .strip_prefix('n')
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| at(line, format!("expected `n = <int>`, found `{text}`")))?;
    let n: usize =
        rest.trim().parse().map_err(|_| at(line, format!("`{}` is not a member count", rest.trim())))?;
    if n == 0 {
        return Err(at(line, "a family needs at least one member"));
    }
    Ok(n)
}

fn parse_member(line: usize, text: &str, n: usize) -> Result<(usize, PlFunc)> {
    let body = text
        .strip_prefix('f')
        .ok_or_else(|| at(line, format!("expected `f <i>: x y, ...`, found `{text}`")))?;
    let (index, points) = body.split_once(':').ok_or_else(|| at(line, "missing `:` after member index"))?;
    let i: usize =
        index.trim().parse().map_err(|_| at(line, format!("`{}` is not a member index", index.trim())))?;
    if i == 0 || i > n {
        return Err(at(line, format!("member index {i} outside 1..={n}")));
    }
    let f = PlFunc::parse_points(points).map_err(|e| at(line, format!("f {i}: {e}")))?;
    Ok((i, f))
}

/// Parses a family file, reporting 1-based line numbers on error.
pub fn parse_family(text: &str) -> Result<FuzzyFamily> {
    let mut n = None;
    let mut members: Vec<Option<PlFunc>> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match n {
            None => {
                let count = parse_header(line, content)?;
                n = Some(count);
                members = vec![None; count];
            }
            Some(count) => {
                let (i, f) = parse_member(line, content, count)?;
                if members[i - 1].is_some() {
                    return Err(at(line, format!("member f {i} given twice")));
                }
                members[i - 1] = Some(f);
            }
        }
    }
    if n.is_none() {
        return Err(at(last_line.max(1), "missing `n = <int>` header"));
    }
    let missing: Vec<String> =
        members.iter().enumerate().filter(|(_, m)| m.is_none()).map(|(i, _)| (i + 1).to_string()).collect();
    if !missing.is_empty() {
        return Err(at(last_line, format!("missing members: f {}", missing.join(", f "))));
    }
    FuzzyFamily::new(members.into_iter().flatten().collect())
}

pub fn format_family(p: &FuzzyFamily) -> String {
    let mut out = format!("n = {}\n", p.len());
    for (i, f) in p.members().iter().enumerate() {
        let _ = writeln!(out, "f {}: {f}", i + 1);
    }
    out
}

pub fn read_family(path: impl AsRef<Path>) -> Result<FuzzyFamily> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_family(&text)
}

pub fn write_family(path: impl AsRef<Path>, p: &FuzzyFamily) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_family(p))
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}
