use super::{GridColoring, GridRectangle};
use crate::error::Result;

/// Edge coloring of the complete bipartite graph `K_{n,m}`; the edge between
/// left vertex `i` and right vertex `j` is stored at `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteColoring {
    left: usize,
    right: usize,
    r: u32,
    edges: Vec<Vec<u32>>,
}

impl BipartiteColoring {
    pub(super) fn from_grid(g: &GridColoring) -> Self {
        BipartiteColoring {
            left: g.rows(),
            right: g.cols(),
            r: g.colors(),
            edges: (1..=g.rows()).map(|i| g.row(i).to_vec()).collect(),
        }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn colors(&self) -> u32 {
        self.r
    }

    /// Color of the edge between left vertex `u` and right vertex `v`, 1-based.
    pub fn edge(&self, u: usize, v: usize) -> u32 {
        self.edges[u - 1][v - 1]
    }

    /// Inverse of [`GridColoring::to_bipartite_edge_coloring`].
    pub fn to_grid(&self) -> Result<GridColoring> {
        GridColoring::new(self.left, self.right, self.r, self.edges.clone())
    }

    /// Every `K_{2,2}` as `(u, u2, v, v2)` together with its four edge colors.
    fn k22s(&self) -> impl Iterator<Item = (GridRectangle, [u32; 4])> + '_ {
        let (n, m) = (self.left, self.right);
        (1..=n).flat_map(move |u| {
            (u + 1..=n).flat_map(move |u2| {
                (1..=m).flat_map(move |v| {
                    (v + 1..=m).map(move |v2| {
                        let colors = [
                            self.edge(u, v),
                            self.edge(u, v2),
                            self.edge(u2, v),
                            self.edge(u2, v2),
                        ];
                        (GridRectangle::new(u, u2, v, v2), colors)
                    })
                })
            })
        })
    }

    pub fn mono_k22s(&self) -> Vec<GridRectangle> {
        self.k22s()
            .filter(|(_, c)| c.iter().all(|&x| x == c[0]))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn rainbow_k22s(&self) -> Vec<GridRectangle> {
        self.k22s()
            .filter(|(_, c)| (0..4).all(|a| (a + 1..4).all(|b| c[a] != c[b])))
            .map(|(k, _)| k)
            .collect()
    }
}
