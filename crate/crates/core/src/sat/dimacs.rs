use std::fmt::Write as _;

use super::CnfDocument;
use crate::error::{Error, Result};

/// Renders the formula as DIMACS CNF, comments first.
pub fn write_dimacs(cnf: &CnfDocument) -> String {
    let mut out = String::new();
    for c in cnf.comments() {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p cnf {} {}", cnf.num_vars(), cnf.clauses().len());
    for clause in cnf.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF. Clauses may span lines but must be `0`-terminated, and
/// the clause count must match the header.
pub fn parse_dimacs(text: &str) -> Result<CnfDocument> {
    let mut comments = Vec::new();
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "c" || trimmed.starts_with("c ") || trimmed.starts_with("c\t") {
            comments.push(trimmed[1..].trim().to_string());
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(Error::format(lineno, "duplicate problem line"));
            }
            let f: Vec<&str> = trimmed.split_whitespace().collect();
            if f.len() != 4 || f[0] != "p" || f[1] != "cnf" {
                return Err(Error::format(lineno, "expected `p cnf <vars> <clauses>`"));
            }
            let vars = f[2]
                .parse()
                .map_err(|_| Error::format(lineno, "bad variable count"))?;
            let count = f[3]
                .parse()
                .map_err(|_| Error::format(lineno, "bad clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(Error::format(lineno, "clause before problem line"));
        };
        for tok in trimmed.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::format(lineno, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::format(lineno, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() > vars {
                return Err(Error::format(lineno, format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| Error::format(1, "missing problem line"))?;
    let last = text.lines().count().max(1);
    if !current.is_empty() {
        return Err(Error::format(last, "last clause is not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(Error::format(
            last,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfDocument::new(vars, clauses, comments)
}

/// Parses a solver model into a full assignment of `num_vars` variables.
///
/// Accepts whitespace-separated signed literals, optionally on `v` lines as
/// printed by SAT solvers; `s` and `c` lines are skipped and the `0`
/// terminator is optional. Every variable must appear exactly once.
pub fn parse_model(text: &str, num_vars: u32) -> Result<Vec<bool>> {
    let mut value: Vec<Option<bool>> = vec![None; num_vars as usize];
    let mut ended = false;
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let mut body = line.trim();
        if body.is_empty() || body.starts_with('c') || body.starts_with('s') {
            continue;
        }
        if let Some(rest) = body.strip_prefix('v') {
            body = rest;
        }
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::format(lineno, format!("bad literal {tok:?}")))?;
            if ended {
                return Err(Error::format(lineno, "literal after 0 terminator"));
            }
            if lit == 0 {
                ended = true;
                continue;
            }
            let var = lit.unsigned_abs();
            if var > num_vars as u64 {
                return Err(Error::Model(format!("literal {lit} exceeds {num_vars} variables")));
            }
            let slot = &mut value[var as usize - 1];
            if slot.is_some() {
                return Err(Error::Model(format!("variable {var} assigned twice")));
            }
            *slot = Some(lit > 0);
        }
    }
    if let Some(missing) = value.iter().position(Option::is_none) {
        return Err(Error::Model(format!(
            "model assigns {} of {num_vars} variables (first missing: {})",
            value.iter().filter(|v| v.is_some()).count(),
            missing + 1
        )));
    }
    Ok(value.into_iter().map(|v| v.unwrap_or(false)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::encode_grid_cnf;

    #[test]
    fn roundtrip_encoding() {
        let cnf = encode_grid_cnf(2, 3, 3).unwrap();
        let text = write_dimacs(&cnf);
        assert!(text.starts_with("c grid n=2 m=3 r=3\nc varmap"));
        assert!(text.contains(&format!("p cnf {} {}\n", cnf.num_vars(), cnf.clauses().len())));
        assert_eq!(parse_dimacs(&text).unwrap(), cnf);
    }

    #[test]
    fn multiline_clauses() {
        let cnf = parse_dimacs("c hi\np cnf 3 2\n1 -2\n 3 0 -1\n0\n").unwrap();
        assert_eq!(cnf.clauses(), &[vec![1, -2, 3], vec![-1]]);
        assert_eq!(cnf.comments(), &["hi".to_string()]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "1 2 0\n",
            "p cnf 2 1\n1 3 0\n",
            "p cnf 2 2\n1 0\n",
            "p cnf 2 1\n1 2\n",
            "p cnf 2 1\n0\n",
            "p cnf x 1\n1 0\n",
            "p cnf 2 1\np cnf 2 1\n1 0\n",
            "p dnf 2 1\n1 0\n",
            "p cnf 2 1\n1 a 0\n",
        ] {
            assert!(parse_dimacs(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn models() {
        assert_eq!(parse_model("1 -2 3", 3).unwrap(), vec![true, false, true]);
        assert_eq!(
            parse_model("s SATISFIABLE\nv 1 -2\nv 3 0\n", 3).unwrap(),
            vec![true, false, true]
        );
        assert!(parse_model("1 -2", 3).is_err());
        assert!(parse_model("1 -1 2 3", 3).is_err());
        assert!(parse_model("1 2 3 4", 3).is_err());
        assert!(parse_model("1 2 0 3", 3).is_err());
        assert!(parse_model("1 x 3", 3).is_err());
    }
}
