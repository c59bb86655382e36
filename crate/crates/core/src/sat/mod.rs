//! Propositional encoding of the grid avoidance problem.
//!
//! Variable layout for an `n x m` grid with `r` colors (`N = n * m` cells,
//! cells numbered row-major from 0):
//!
//! * `x(i, j, c) = ((i - 1) * m + (j - 1)) * r + c` for 1-based `i`, `j`, `c`,
//!   so the cell variables occupy `1..=N * r`;
//! * `e(p, q)` for cells `p < q` follows, numbered `N * r + 1 + rank(p, q)`
//!   where `rank` enumerates the pairs `(0,1), (0,2), ..., (1,2), ...` in
//!   lexicographic order.
//!
//! `e(p, q)` true forces cells `p`, `q` to share a color. Each rectangle gets
//! one clause over its six selectors, so a model never colors a rectangle
//! with four distinct colors.

mod dimacs;

pub use dimacs::{parse_dimacs, parse_model, write_dimacs};

use crate::error::{Error, Result};
use crate::grid::GridColoring;

/// A CNF formula with annotation comments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfDocument {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
    comments: Vec<String>,
}

impl CnfDocument {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>, comments: Vec<String>) -> Result<Self> {
        for (k, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::param(format!("clause {} is empty", k + 1)));
            }
            if let Some(&lit) = clause.iter().find(|&&l| l == 0 || l.unsigned_abs() > num_vars) {
                return Err(Error::param(format!(
                    "clause {} has literal {lit} outside 1..={num_vars}",
                    k + 1
                )));
            }
        }
        Ok(CnfDocument {
            num_vars,
            clauses,
            comments,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    /// The `(n, m, r)` instance recorded by a `grid n=.. m=.. r=..` comment.
    pub fn grid_instance(&self) -> Option<(usize, usize, u32)> {
        self.comments.iter().find_map(|c| {
            let rest = c.strip_prefix("grid ")?;
            let mut it = rest.split_whitespace();
            let n = it.next()?.strip_prefix("n=")?.parse().ok()?;
            let m = it.next()?.strip_prefix("m=")?.parse().ok()?;
            let r = it.next()?.strip_prefix("r=")?.parse().ok()?;
            Some((n, m, r))
        })
    }
}

/// Index helpers for the grid encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridVars {
    pub n: usize,
    pub m: usize,
    pub r: u32,
}

impl GridVars {
    pub fn cells(&self) -> usize {
        self.n * self.m
    }

    pub fn color_vars(&self) -> u32 {
        (self.cells() * self.r as usize) as u32
    }

    pub fn selector_vars(&self) -> u32 {
        let c = self.cells();
        (c * c.saturating_sub(1) / 2) as u32
    }

    pub fn num_vars(&self) -> u32 {
        self.color_vars() + self.selector_vars()
    }

    /// `x(i, j, c)` with 1-based row, column and color.
    pub fn x(&self, i: usize, j: usize, c: u32) -> u32 {
        (((i - 1) * self.m + (j - 1)) as u32) * self.r + c
    }

    fn x_cell(&self, cell: usize, c: u32) -> i32 {
        (cell as u32 * self.r + c) as i32
    }

    /// `e(p, q)` for 0-based row-major cells `p != q`.
    pub fn e(&self, p: usize, q: usize) -> u32 {
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        debug_assert!(p != q);
        let n = self.cells();
        let rank = p * n - p * (p + 1) / 2 + (q - p - 1);
        self.color_vars() + 1 + rank as u32
    }
}

/// Encodes "some `r`-coloring of the `n x m` grid has neither a monochromatic
/// nor a rainbow rectangle"; the formula is satisfiable exactly when such a
/// coloring exists.
pub fn encode_grid_cnf(n: usize, m: usize, r: u32) -> Result<CnfDocument> {
    if n < 2 || m < 2 || r < 1 {
        return Err(Error::param(format!("grid encoding needs n, m >= 2 and r >= 1 (got {n}, {m}, {r})")));
    }
    let v = GridVars { n, m, r };
    let cells = v.cells();
    let mut clauses = Vec::new();

    for cell in 0..cells {
        clauses.push((1..=r).map(|c| v.x_cell(cell, c)).collect());
        for a in 1..=r {
            for b in a + 1..=r {
                clauses.push(vec![-v.x_cell(cell, a), -v.x_cell(cell, b)]);
            }
        }
    }

    let rects: Vec<[usize; 4]> = (0..n)
        .flat_map(|i| {
            (i + 1..n).flat_map(move |i2| {
                (0..m).flat_map(move |j| (j + 1..m).map(move |j2| [i * m + j, i * m + j2, i2 * m + j, i2 * m + j2]))
            })
        })
        .collect();

    for rect in &rects {
        for c in 1..=r {
            clauses.push(rect.iter().map(|&p| -v.x_cell(p, c)).collect());
        }
    }

    for p in 0..cells {
        for q in p + 1..cells {
            let e = v.e(p, q) as i32;
            for c in 1..=r {
                clauses.push(vec![-e, -v.x_cell(p, c), v.x_cell(q, c)]);
                clauses.push(vec![-e, -v.x_cell(q, c), v.x_cell(p, c)]);
            }
        }
    }

    for rect in &rects {
        let mut clause = Vec::with_capacity(6);
        for a in 0..4 {
            for b in a + 1..4 {
                clause.push(v.e(rect[a], rect[b]) as i32);
            }
        }
        clauses.push(clause);
    }

    let comments = vec![
        format!("grid n={n} m={m} r={r}"),
        format!(
            "varmap x(i,j,c)=((i-1)*m+(j-1))*r+c for 1-based i,j,c in 1..={}",
            v.color_vars()
        ),
        format!(
            "varmap e(p,q) for 0-based row-major cells p<q = {}+rank(p,q), pairs ranked lexicographically, in {}..={}",
            v.color_vars() + 1,
            v.color_vars() + 1,
            v.num_vars()
        ),
    ];
    CnfDocument::new(v.num_vars(), clauses, comments)
}

/// True when every clause contains a true literal. `assignment[k]` is the
/// value of variable `k + 1`.
pub fn check_model_against_cnf(cnf: &CnfDocument, assignment: &[bool]) -> Result<bool> {
    if assignment.len() != cnf.num_vars as usize {
        return Err(Error::Model(format!(
            "assignment covers {} variables, formula has {}",
            assignment.len(),
            cnf.num_vars
        )));
    }
    let value = |lit: i32| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0);
    Ok(cnf.clauses.iter().all(|cl| cl.iter().any(|&l| value(l))))
}

/// Reads the cell colors off a model and re-verifies the coloring.
pub fn decode_model(n: usize, m: usize, r: u32, assignment: &[bool]) -> Result<GridColoring> {
    let v = GridVars { n, m, r };
    if assignment.len() < v.color_vars() as usize {
        return Err(Error::Model(format!(
            "assignment covers {} variables, the color variables need {}",
            assignment.len(),
            v.color_vars()
        )));
    }
    let mut cells = Vec::with_capacity(v.cells());
    for i in 1..=n {
        for j in 1..=m {
            let on: Vec<u32> = (1..=r).filter(|&c| assignment[v.x(i, j, c) as usize - 1]).collect();
            match on.as_slice() {
                [c] => cells.push(*c),
                [] => return Err(Error::Model(format!("cell ({i},{j}) has no color"))),
                many => return Err(Error::Model(format!("cell ({i},{j}) has colors {many:?}"))),
            }
        }
    }
    let g = GridColoring::from_flat(n, m, r, cells)?;
    let report = g.verify_good();
    if !report.is_good {
        return Err(Error::Model(format!("decoded coloring is not good: {report:?}")));
    }
    Ok(g)
}

/// The full assignment describing `g`: its color variables, plus every
/// selector set exactly when its two cells share a color.
pub fn assignment_for_coloring(g: &GridColoring) -> Vec<bool> {
    let v = GridVars {
        n: g.rows(),
        m: g.cols(),
        r: g.colors(),
    };
    let mut a = vec![false; v.num_vars() as usize];
    let cells = g.cells();
    for (p, &c) in cells.iter().enumerate() {
        a[v.x_cell(p, c) as usize - 1] = true;
    }
    for p in 0..cells.len() {
        for q in p + 1..cells.len() {
            a[v.e(p, q) as usize - 1] = cells[p] == cells[q];
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let v = GridVars { n: 2, m: 3, r: 4 };
        assert_eq!(v.x(1, 1, 1), 1);
        assert_eq!(v.x(1, 2, 1), 5);
        assert_eq!(v.x(2, 3, 4), 24);
        assert_eq!(v.e(0, 1), 25);
        assert_eq!(v.e(0, 5), 29);
        assert_eq!(v.e(1, 2), 30);
        assert_eq!(v.e(4, 5), 24 + 15);
        assert_eq!(v.num_vars(), 39);
        let mut seen: Vec<u32> = (0..6).flat_map(|p| (p + 1..6).map(move |q| v.e(p, q))).collect();
        seen.sort();
        assert_eq!(seen, (25..=39).collect::<Vec<_>>());
    }

    #[test]
    fn clause_counts() {
        let cnf = encode_grid_cnf(2, 2, 4).unwrap();
        // 4 cells * (1 + 6), 1 rect * 4 colors, 6 pairs * 8, 1 rainbow clause
        assert_eq!(cnf.clauses().len(), 28 + 4 + 48 + 1);
        assert_eq!(cnf.grid_instance(), Some((2, 2, 4)));
        assert!(encode_grid_cnf(1, 3, 2).is_err());
    }

    #[test]
    fn check_model() {
        let empty = CnfDocument::new(1, vec![], vec![]).unwrap();
        assert_eq!(check_model_against_cnf(&empty, &[false]), Ok(true));
        let unit = CnfDocument::new(1, vec![vec![1]], vec![]).unwrap();
        assert_eq!(check_model_against_cnf(&unit, &[false]), Ok(false));
        assert_eq!(check_model_against_cnf(&unit, &[true]), Ok(true));
        assert!(check_model_against_cnf(&unit, &[true, false]).is_err());
        assert!(CnfDocument::new(1, vec![vec![]], vec![]).is_err());
        assert!(CnfDocument::new(1, vec![vec![2]], vec![]).is_err());
    }

    #[test]
    fn decode_known_model() {
        let v = GridVars { n: 2, m: 2, r: 4 };
        let mut a = vec![false; v.num_vars() as usize];
        for (i, j, c) in [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)] {
            a[v.x(i, j, c) as usize - 1] = true;
        }
        let g = decode_model(2, 2, 4, &a).unwrap();
        assert_eq!(g.cells(), &[1, 2, 2, 1]);

        a[v.x(1, 1, 3) as usize - 1] = true;
        assert!(matches!(decode_model(2, 2, 4, &a), Err(Error::Model(_))));
        a[v.x(1, 1, 3) as usize - 1] = false;
        a[v.x(1, 1, 1) as usize - 1] = false;
        assert!(matches!(decode_model(2, 2, 4, &a), Err(Error::Model(_))));
    }

    #[test]
    fn decode_rejects_bad_coloring() {
        let v = GridVars { n: 2, m: 2, r: 1 };
        let a = vec![true; v.num_vars() as usize];
        assert!(matches!(decode_model(2, 2, 1, &a), Err(Error::Model(_))));
    }

    #[test]
    fn coloring_assignment_satisfies() {
        let g = GridColoring::new(2, 2, 4, vec![vec![1, 2], vec![2, 1]]).unwrap();
        let cnf = encode_grid_cnf(2, 2, 4).unwrap();
        let a = assignment_for_coloring(&g);
        assert_eq!(check_model_against_cnf(&cnf, &a), Ok(true));
        assert_eq!(decode_model(2, 2, 4, &a).unwrap(), g);

        let rainbow = GridColoring::new(2, 2, 4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let a = assignment_for_coloring(&rainbow);
        assert_eq!(check_model_against_cnf(&cnf, &a), Ok(false));
    }
}
