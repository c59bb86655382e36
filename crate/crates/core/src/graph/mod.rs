//! Edge colorings of complete graphs, rainbow-triangle and monochromatic
//! `C4` / `P4` detection, and small Gallai-Ramsey numbers.
//!
//! Vertices are `1..=t`; edges are unordered pairs listed in lexicographic
//! order `(1,2), (1,3), ..., (t-1,t)`.

mod cert;
mod search;

pub use cert::{parse_edge_certificate, write_edge_certificate};
pub use search::{gallai_ramsey_number, search_good_edge_coloring};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Monochromatic target shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// Cycle `v1 v2 v3 v4 v1`; diagonals are unconstrained.
    C4,
    /// Path `v1 v2 v3 v4` with three edges.
    P4,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::C4 => "c4",
            Target::P4 => "p4",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c4" => Ok(Target::C4),
            "p4" => Ok(Target::P4),
            other => Err(Error::param(format!("unknown target {other:?} (expected c4 or p4)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    RainbowK3,
    MonoC4,
    MonoP4,
}

/// A located pattern: vertices in traversal order, and either the single
/// shared color or the three distinct triangle colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub colors: Vec<u32>,
}

impl SubgraphWitness {
    /// Re-checks the witness against `ec`.
    pub fn holds_in(&self, ec: &EdgeColoring) -> bool {
        let vs = &self.vertices;
        let mut distinct = vs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != vs.len() || vs.iter().any(|&v| v == 0 || v > ec.t) {
            return false;
        }
        match self.kind {
            WitnessKind::RainbowK3 => {
                let [a, b, c] = vs[..] else { return false };
                let cols = [ec.get(a, b), ec.get(b, c), ec.get(a, c)];
                cols[0] != cols[1] && cols[1] != cols[2] && cols[0] != cols[2] && self.colors == cols
            }
            WitnessKind::MonoC4 | WitnessKind::MonoP4 => {
                if vs.len() != 4 || self.colors.len() != 1 {
                    return false;
                }
                let c = self.colors[0];
                let path = vs.windows(2).all(|w| ec.get(w[0], w[1]) == c);
                path && (self.kind == WitnessKind::MonoP4 || ec.get(vs[3], vs[0]) == c)
            }
        }
    }
}

/// An `r`-coloring of the edges of `K_t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    t: usize,
    r: u32,
    // full symmetric t x t matrix, zero diagonal
    matrix: Vec<u32>,
}

/// Number of edges of `K_t`.
pub fn edge_count(t: usize) -> usize {
    t * t.saturating_sub(1) / 2
}

/// Edges of `K_t` in lexicographic order, 1-based.
pub fn edges(t: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=t).flat_map(move |u| (u + 1..=t).map(move |v| (u, v)))
}

impl EdgeColoring {
    /// Builds a coloring from colors listed in lexicographic edge order.
    pub fn new(t: usize, r: u32, colors: Vec<u32>) -> Result<Self> {
        if t == 0 || r == 0 {
            return Err(Error::param(format!("edge coloring needs t, r >= 1 (got {t}, {r})")));
        }
        if colors.len() != edge_count(t) {
            return Err(Error::Dimension(format!(
                "K_{t} has {} edges, got {} colors",
                edge_count(t),
                colors.len()
            )));
        }
        let mut matrix = vec![0; t * t];
        for ((u, v), c) in edges(t).zip(colors) {
            if c == 0 || c > r {
                return Err(Error::ColorOutOfRange {
                    row: u,
                    col: v,
                    value: c,
                    colors: r,
                });
            }
            matrix[(u - 1) * t + (v - 1)] = c;
            matrix[(v - 1) * t + (u - 1)] = c;
        }
        Ok(EdgeColoring { t, r, matrix })
    }

    pub fn from_fn(t: usize, r: u32, f: impl Fn(usize, usize) -> u32) -> Result<Self> {
        Self::new(t, r, edges(t).map(|(u, v)| f(u, v)).collect())
    }

    pub fn vertices(&self) -> usize {
        self.t
    }

    pub fn colors(&self) -> u32 {
        self.r
    }

    /// Color of edge `{u, v}`, `u != v`, 1-based.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u != v);
        self.matrix[(u - 1) * self.t + (v - 1)]
    }

    /// Colors in lexicographic edge order.
    pub fn edge_colors(&self) -> Vec<u32> {
        edges(self.t).map(|(u, v)| self.get(u, v)).collect()
    }

    /// Restriction to the first `t` vertices.
    pub fn restrict(&self, t: usize) -> Result<Self> {
        if t > self.t {
            return Err(Error::Dimension(format!("cannot restrict K_{} to K_{t}", self.t)));
        }
        Self::from_fn(t, self.r, |u, v| self.get(u, v))
    }

    /// Lexicographically least triangle `(a, b, c)` whose three edges carry
    /// distinct colors.
    pub fn find_rainbow_triangle(&self) -> Option<SubgraphWitness> {
        for a in 1..=self.t {
            for b in a + 1..=self.t {
                let ab = self.get(a, b);
                for c in b + 1..=self.t {
                    let (bc, ac) = (self.get(b, c), self.get(a, c));
                    if ab != bc && bc != ac && ab != ac {
                        return Some(SubgraphWitness {
                            kind: WitnessKind::RainbowK3,
                            vertices: vec![a, b, c],
                            colors: vec![ab, bc, ac],
                        });
                    }
                }
            }
        }
        None
    }

    /// Lexicographically least vertex sequence `(a, b, c, d)` tracing a
    /// monochromatic copy of `target`. Requires `t >= 4`.
    pub fn find_mono_subgraph(&self, target: Target) -> Result<Option<SubgraphWitness>> {
        if self.t < 4 {
            return Err(Error::param(format!("{target} needs at least 4 vertices, K_{} has {}", self.t, self.t)));
        }
        let t = self.t;
        for a in 1..=t {
            for b in (1..=t).filter(|&b| b != a) {
                let k = self.get(a, b);
                for c in (1..=t).filter(|&c| c != a && c != b && self.get(b, c) == k) {
                    for d in (1..=t).filter(|&d| d != a && d != b && d != c && self.get(c, d) == k) {
                        if target == Target::P4 || self.get(d, a) == k {
                            return Ok(Some(SubgraphWitness {
                                kind: match target {
                                    Target::C4 => WitnessKind::MonoC4,
                                    Target::P4 => WitnessKind::MonoP4,
                                },
                                vertices: vec![a, b, c, d],
                                colors: vec![k],
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// No rainbow triangle and (for `t >= 4`) no monochromatic `target`.
    pub fn is_good(&self, target: Target) -> bool {
        self.find_rainbow_triangle().is_none() && (self.t < 4 || matches!(self.find_mono_subgraph(target), Ok(None)))
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(K_{}, r={}) {:?}", self.t, self.r, self.edge_colors())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert!(EdgeColoring::new(3, 3, vec![1, 2, 3]).is_ok());
        assert!(EdgeColoring::new(3, 3, vec![1, 2]).is_err());
        assert!(matches!(
            EdgeColoring::new(3, 2, vec![1, 2, 3]),
            Err(Error::ColorOutOfRange { row: 2, col: 3, .. })
        ));
        let ec = EdgeColoring::new(3, 3, vec![1, 2, 3]).unwrap();
        assert_eq!((ec.get(1, 2), ec.get(3, 1), ec.get(3, 2)), (1, 2, 3));
    }

    #[test]
    fn rainbow_triangle() {
        let ec = EdgeColoring::new(3, 3, vec![1, 2, 3]).unwrap();
        let w = ec.find_rainbow_triangle().unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3]);
        assert!(w.holds_in(&ec));
        let mono = EdgeColoring::from_fn(6, 3, |_, _| 2).unwrap();
        assert!(mono.find_rainbow_triangle().is_none());
    }

    #[test]
    fn rainbow_triangle_away_from_hub() {
        // edges at vertex 1 color 1; (2,3)=2, (3,4)=3, (2,4)=1
        let ec = EdgeColoring::from_fn(4, 3, |u, v| match (u, v) {
            (1, _) => 1,
            (2, 3) => 2,
            (3, 4) => 3,
            _ => 1,
        })
        .unwrap();
        // triangle (1,2,3) has colors 1,2,1; (1,3,4) has 1,3,1; (1,2,4) has 1,1,1
        let w = ec.find_rainbow_triangle().unwrap();
        assert_eq!(w.vertices, vec![2, 3, 4]);
        assert_eq!(w.colors, vec![2, 3, 1]);
    }

    #[test]
    fn mono_targets() {
        let k4 = EdgeColoring::from_fn(4, 1, |_, _| 1).unwrap();
        let c4 = k4.find_mono_subgraph(Target::C4).unwrap().unwrap();
        assert_eq!(c4.vertices, vec![1, 2, 3, 4]);
        assert!(c4.holds_in(&k4));
        assert!(k4.find_mono_subgraph(Target::P4).unwrap().is_some());

        // each color class a perfect matching
        let matching = EdgeColoring::from_fn(4, 3, |u, v| match (u, v) {
            (1, 2) | (3, 4) => 1,
            (1, 3) | (2, 4) => 2,
            _ => 3,
        })
        .unwrap();
        assert!(matching.find_mono_subgraph(Target::P4).unwrap().is_none());
        assert!(matching.find_mono_subgraph(Target::C4).unwrap().is_none());

        let k3 = EdgeColoring::from_fn(3, 1, |_, _| 1).unwrap();
        assert!(k3.find_mono_subgraph(Target::C4).is_err());
        assert!(k3.is_good(Target::C4));
    }

    #[test]
    fn witness_recheck_rejects_forgeries() {
        let k4 = EdgeColoring::from_fn(4, 2, |u, v| if (u, v) == (1, 2) { 2 } else { 1 }).unwrap();
        let forged = SubgraphWitness {
            kind: WitnessKind::MonoC4,
            vertices: vec![1, 2, 3, 4],
            colors: vec![1],
        };
        assert!(!forged.holds_in(&k4));
        let repeated = SubgraphWitness {
            kind: WitnessKind::MonoP4,
            vertices: vec![1, 3, 1, 4],
            colors: vec![1],
        };
        assert!(!repeated.holds_in(&k4));
    }

    #[test]
    fn target_names() {
        assert_eq!("C4".parse::<Target>().unwrap(), Target::C4);
        assert_eq!("p4".parse::<Target>().unwrap(), Target::P4);
        assert!("k3".parse::<Target>().is_err());
    }
}
