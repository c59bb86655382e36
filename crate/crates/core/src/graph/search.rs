use super::{edge_count, edges, EdgeColoring, Target};
use crate::error::{Error, Result};
use crate::search::driver::{self, Problem};
use crate::search::{OutcomeKind, SearchOptions, SearchOutcome};

/// Largest complete graph the bitmask state supports.
const MAX_VERTICES: usize = 64;

struct EdgeState {
    t: usize,
    r: u32,
    target: Target,
    eager_rainbow: bool,
    slots: Vec<(usize, usize)>,
    // 0-based color matrix, 0 = unassigned
    color: Vec<u32>,
    // adj[c * t + v]: neighbours of v along edges of color c (index c - 1)
    adj: Vec<u64>,
    // any assigned edge
    seen: Vec<u64>,
}

impl EdgeState {
    fn new(t: usize, r: u32, target: Target, opts: &SearchOptions) -> Self {
        EdgeState {
            t,
            r,
            target,
            eager_rainbow: opts.eager_rainbow_pruning,
            slots: edges(t).map(|(u, v)| (u - 1, v - 1)).collect(),
            color: vec![0; t * t],
            adj: vec![0; r as usize * t],
            seen: vec![0; t],
        }
    }

    #[inline]
    fn nbrs(&self, c: u32, v: usize) -> u64 {
        self.adj[(c as usize - 1) * self.t + v]
    }

    fn closes_rainbow(&self, u: usize, v: usize, c: u32) -> bool {
        let mut common = self.seen[u] & self.seen[v];
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            common &= common - 1;
            let (a, b) = (self.color[u * self.t + w], self.color[v * self.t + w]);
            if a != b && a != c && b != c {
                return true;
            }
        }
        false
    }

    /// Would edge `uv` in color `c` complete a monochromatic target?
    fn closes_target(&self, u: usize, v: usize, c: u32) -> bool {
        let (nu, nv) = (self.nbrs(c, u), self.nbrs(c, v));
        match self.target {
            Target::C4 => {
                // u - x - y - v with x, y fresh
                let mut xs = nu;
                while xs != 0 {
                    let x = xs.trailing_zeros() as usize;
                    xs &= xs - 1;
                    if self.nbrs(c, x) & nv & !(1 << u) != 0 {
                        return true;
                    }
                }
                false
            }
            Target::P4 => {
                // x - u - v - y
                if nu != 0 && nv != 0 && !(nu == nv && nu.count_ones() == 1) {
                    return true;
                }
                // v - u - x - y and u - v - x - y
                let outside = !((1u64 << u) | (1u64 << v));
                let extends = |mut xs: u64| {
                    while xs != 0 {
                        let x = xs.trailing_zeros() as usize;
                        xs &= xs - 1;
                        if self.nbrs(c, x) & outside != 0 {
                            return true;
                        }
                    }
                    false
                };
                extends(nu) || extends(nv)
            }
        }
    }
}

impl Problem for EdgeState {
    type Witness = EdgeColoring;

    fn slots(&self) -> usize {
        self.slots.len()
    }

    fn colors(&self) -> u32 {
        self.r
    }

    fn assign(&mut self, slot: usize, c: u32) -> bool {
        let (u, v) = self.slots[slot];
        if self.closes_target(u, v, c) || (self.eager_rainbow && self.closes_rainbow(u, v, c)) {
            return false;
        }
        let t = self.t;
        self.color[u * t + v] = c;
        self.color[v * t + u] = c;
        self.adj[(c as usize - 1) * t + u] |= 1 << v;
        self.adj[(c as usize - 1) * t + v] |= 1 << u;
        self.seen[u] |= 1 << v;
        self.seen[v] |= 1 << u;
        true
    }

    fn unassign(&mut self, slot: usize) {
        let (u, v) = self.slots[slot];
        let t = self.t;
        let c = self.color[u * t + v];
        self.color[u * t + v] = 0;
        self.color[v * t + u] = 0;
        self.adj[(c as usize - 1) * t + u] &= !(1 << v);
        self.adj[(c as usize - 1) * t + v] &= !(1 << u);
        self.seen[u] &= !(1 << v);
        self.seen[v] &= !(1 << u);
    }

    fn accept_leaf(&self) -> bool {
        self.eager_rainbow || self.witness().find_rainbow_triangle().is_none()
    }

    fn witness(&self) -> EdgeColoring {
        let colors = self.slots.iter().map(|&(u, v)| self.color[u * self.t + v]).collect();
        EdgeColoring::new(self.t, self.r, colors).expect("complete assignment is a valid coloring")
    }
}

/// Searches for an `r`-coloring of the edges of `K_t` with no rainbow
/// triangle and no monochromatic `target`.
///
/// Edges are colored in lexicographic order and a branch is cut as soon as
/// the newest edge completes a forbidden pattern. With color symmetry on,
/// first-use ordering also pins edge `(1,2)` to color 1. The row-order
/// option has no meaning here and is ignored.
pub fn search_good_edge_coloring(t: usize, r: u32, target: Target, opts: &SearchOptions) -> SearchOutcome<EdgeColoring> {
    assert!(t >= 3 && r >= 1, "edge search needs t >= 3, r >= 1");
    assert!(t <= MAX_VERTICES, "edge search supports at most {MAX_VERTICES} vertices");
    debug_assert_eq!(edge_count(t), edges(t).count());
    let out = driver::search(|| EdgeState::new(t, r, target, opts), opts);
    if let Some(w) = &out.witness {
        assert!(w.is_good(target), "engine produced a bad witness: {w:?}");
    }
    out
}

/// Least `t <= t_max` such that every `r`-coloring of `K_t` has a rainbow
/// triangle or a monochromatic `target`, or `None` if some good coloring
/// exists for every `t <= t_max`.
pub fn gallai_ramsey_number(target: Target, r: u32, t_max: usize, opts: &SearchOptions) -> Result<Option<usize>> {
    if r < 1 || t_max < 3 {
        return Err(Error::param(format!("gallai_ramsey_number needs r >= 1, t_max >= 3 (got {r}, {t_max})")));
    }
    for t in 3..=t_max {
        match search_good_edge_coloring(t, r, target, opts).kind {
            OutcomeKind::Found => continue,
            OutcomeKind::Exhausted => return Ok(Some(t)),
            OutcomeKind::BudgetExceeded => return Err(Error::BudgetExceeded { size: t }),
        }
    }
    Ok(None)
}
