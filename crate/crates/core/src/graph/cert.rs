use std::fmt::Write as _;

use super::{edge_count, edges, EdgeColoring};
use crate::error::{Error, Result};
use crate::grid::cert::{parse_number, strict_fields};

/// `kgraph t r`, then one `u v c` line per edge in lexicographic order.
pub fn write_edge_certificate(ec: &EdgeColoring) -> String {
    let mut out = format!("kgraph {} {}\n", ec.vertices(), ec.colors());
    for (u, v) in edges(ec.vertices()) {
        let _ = writeln!(out, "{u} {v} {}", ec.get(u, v));
    }
    out
}

pub fn parse_edge_certificate(text: &str) -> Result<EdgeColoring> {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.first().ok_or_else(|| Error::format(1, "empty certificate"))?;
    let f = strict_fields(header, 1)?;
    if f.len() != 3 || f[0] != "kgraph" {
        return Err(Error::format(1, "expected `kgraph t r`"));
    }
    let t: usize = parse_number(f[1], 1, "t")?;
    let r: u32 = parse_number(f[2], 1, "r")?;
    if t == 0 || r == 0 {
        return Err(Error::format(1, "t and r must be positive"));
    }
    let mut colors = Vec::with_capacity(edge_count(t));
    for (k, (u, v)) in edges(t).enumerate() {
        let lineno = k + 2;
        let line = lines
            .get(k + 1)
            .ok_or_else(|| Error::format(lineno, format!("missing edge {u} {v}")))?;
        let f = strict_fields(line, lineno)?;
        if f.len() != 3 {
            return Err(Error::format(lineno, "expected `u v c`"));
        }
        let pu: usize = parse_number(f[0], lineno, "u")?;
        let pv: usize = parse_number(f[1], lineno, "v")?;
        if (pu, pv) != (u, v) {
            return Err(Error::format(lineno, format!("expected edge {u} {v}, got {pu} {pv}")));
        }
        let c: u32 = parse_number(f[2], lineno, "color")?;
        if c == 0 || c > r {
            return Err(Error::format(lineno, format!("color {c} outside 1..={r}")));
        }
        colors.push(c);
    }
    let tail = edge_count(t) + 1;
    if let Some(k) = lines[tail.min(lines.len())..].iter().position(|l| !l.trim().is_empty()) {
        return Err(Error::format(tail + k + 1, "unexpected content after edges"));
    }
    EdgeColoring::new(t, r, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let ec = EdgeColoring::new(3, 3, vec![1, 2, 3]).unwrap();
        let text = write_edge_certificate(&ec);
        assert_eq!(text, "kgraph 3 3\n1 2 1\n1 3 2\n2 3 3\n");
        assert_eq!(parse_edge_certificate(&text).unwrap(), ec);
        let one = EdgeColoring::new(1, 1, vec![]).unwrap();
        assert_eq!(parse_edge_certificate(&write_edge_certificate(&one)).unwrap(), one);
    }

    #[test]
    fn rejects_deviations() {
        for bad in [
            "kgraph 3 3\n1 2 1\n1 3 2\n",
            "kgraph 3 3\n1 2 1\n2 3 2\n1 3 3\n",
            "kgraph 3 2\n1 2 1\n1 3 2\n2 3 3\n",
            "kgraph 3 3\n1 2 1\n1 3 2\n2 3 3\n1 2 1\n",
            "graph 3 3\n1 2 1\n1 3 2\n2 3 3\n",
            "kgraph 3 3\n1 2 1\n1  3 2\n2 3 3\n",
        ] {
            assert!(parse_edge_certificate(bad).is_err(), "accepted {bad:?}");
        }
    }
}
