use super::{OutcomeKind, SearchOutcome};
use crate::error::{Error, Result};
use crate::grid::{cert, write_grid_certificate, GridColoring};

/// Parsed form of a grid search result file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCertificate {
    pub kind: OutcomeKind,
    pub n: usize,
    pub m: usize,
    pub r: u32,
    pub nodes: u64,
    pub witness: Option<GridColoring>,
}

/// `outcome <kind> n m r nodes=<count>`, followed by the witness grid when
/// one was found.
pub fn write_search_certificate(n: usize, m: usize, r: u32, out: &SearchOutcome<GridColoring>) -> String {
    let mut text = format!("outcome {} {n} {m} {r} nodes={}\n", out.kind, out.nodes_visited);
    if let Some(w) = &out.witness {
        text.push_str(&write_grid_certificate(w));
    }
    text
}

pub fn parse_search_certificate(text: &str) -> Result<SearchCertificate> {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.first().ok_or_else(|| Error::format(1, "empty certificate"))?;
    let fields = cert::strict_fields(header, 1)?;
    if fields.len() != 6 || fields[0] != "outcome" {
        return Err(Error::format(1, "expected `outcome <kind> n m r nodes=<count>`"));
    }
    let kind: OutcomeKind = fields[1].parse().map_err(|e: String| Error::format(1, e))?;
    let n: usize = cert::parse_number(fields[2], 1, "n")?;
    let m: usize = cert::parse_number(fields[3], 1, "m")?;
    let r: u32 = cert::parse_number(fields[4], 1, "r")?;
    let nodes = fields[5]
        .strip_prefix("nodes=")
        .ok_or_else(|| Error::format(1, "expected nodes=<count>"))?;
    let nodes: u64 = cert::parse_number(nodes, 1, "nodes")?;
    let rest = &lines[1..];
    let witness = match kind {
        OutcomeKind::Found => {
            let g = cert::parse_grid_lines(rest, 2)?;
            if (g.rows(), g.cols(), g.colors()) != (n, m, r) {
                return Err(Error::format(2, "witness grid does not match the header"));
            }
            Some(g)
        }
        _ => {
            if let Some(k) = rest.iter().position(|l| !l.trim().is_empty()) {
                return Err(Error::format(k + 2, "only found certificates carry a grid"));
            }
            None
        }
    };
    Ok(SearchCertificate {
        kind,
        n,
        m,
        r,
        nodes,
        witness,
    })
}
