use std::fmt::Write as _;

use super::GridColoring;
use crate::error::{Error, Result};

/// Renders `grid n m r` followed by one line of colors per row.
pub fn write_grid_certificate(g: &GridColoring) -> String {
    let mut out = format!("grid {} {} {}\n", g.rows(), g.cols(), g.colors());
    for i in 1..=g.rows() {
        let line = g
            .row(i)
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Splits a line on single spaces after dropping trailing whitespace; runs of
/// spaces, tabs and leading blanks are rejected.
pub(crate) fn strict_fields(line: &str, lineno: usize) -> Result<Vec<&str>> {
    let line = line.trim_end();
    if line.is_empty() {
        return Err(Error::format(lineno, "empty line"));
    }
    let fields: Vec<&str> = line.split(' ').collect();
    if fields.iter().any(|f| f.is_empty() || f.contains(char::is_whitespace)) {
        return Err(Error::format(lineno, "fields must be separated by single spaces"));
    }
    Ok(fields)
}

pub(crate) fn parse_number<T: std::str::FromStr>(field: &str, lineno: usize, what: &str) -> Result<T> {
    if !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::format(lineno, format!("{what}: expected an unsigned integer, got {field:?}")));
    }
    field
        .parse()
        .map_err(|_| Error::format(lineno, format!("{what}: cannot parse {field:?}")))
}

/// Parses the `grid n m r` block starting at `lines[0]`, whose 1-based line
/// number in the enclosing file is `first_line`. Anything after the grid rows
/// must be blank.
pub(crate) fn parse_grid_lines(lines: &[&str], first_line: usize) -> Result<GridColoring> {
    let header = lines
        .first()
        .ok_or_else(|| Error::format(first_line, "missing grid header"))?;
    let fields = strict_fields(header, first_line)?;
    if fields.len() != 4 || fields[0] != "grid" {
        return Err(Error::format(first_line, "expected `grid n m r`"));
    }
    let n: usize = parse_number(fields[1], first_line, "n")?;
    let m: usize = parse_number(fields[2], first_line, "m")?;
    let r: u32 = parse_number(fields[3], first_line, "r")?;
    if n == 0 || m == 0 || r == 0 {
        return Err(Error::format(first_line, "n, m and r must be positive"));
    }
    let mut cells = Vec::with_capacity(n * m);
    for k in 0..n {
        let lineno = first_line + 1 + k;
        let line = lines
            .get(1 + k)
            .ok_or_else(|| Error::format(lineno, format!("missing row {}", k + 1)))?;
        let fields = strict_fields(line, lineno)?;
        if fields.len() != m {
            return Err(Error::format(lineno, format!("expected {m} colors, got {}", fields.len())));
        }
        for f in fields {
            let c: u32 = parse_number(f, lineno, "color")?;
            if c == 0 || c > r {
                return Err(Error::format(lineno, format!("color {c} outside 1..={r}")));
            }
            cells.push(c);
        }
    }
    if let Some(k) = lines[1 + n..].iter().position(|l| !l.trim().is_empty()) {
        return Err(Error::format(first_line + 1 + n + k, "unexpected content after grid"));
    }
    GridColoring::from_flat(n, m, r, cells)
}

/// Parses a grid certificate produced by [`write_grid_certificate`].
pub fn parse_grid_certificate(text: &str) -> Result<GridColoring> {
    let lines: Vec<&str> = text.lines().collect();
    parse_grid_lines(&lines, 1)
}
