use super::driver::{self, Problem};
use super::{OutcomeKind, SearchOptions, SearchOutcome};
use crate::bits;
use crate::error::{Error, Result};
use crate::grid::GridColoring;

/// Partial row-major coloring with per-(row, color) column bitmaps.
struct GridState {
    n: usize,
    m: usize,
    r: u32,
    words: usize,
    cells: Vec<u32>,
    masks: Vec<u64>,
    // tied[k]: row of slot k equals the row above on columns 0..=col(k)
    tied: Vec<bool>,
    row_order: bool,
    eager_rainbow: bool,
}

impl GridState {
    fn new(n: usize, m: usize, r: u32, opts: &SearchOptions) -> Self {
        let words = bits::words_for(m);
        GridState {
            n,
            m,
            r,
            words,
            cells: vec![0; n * m],
            masks: vec![0; n * r as usize * words],
            tied: vec![false; n * m],
            row_order: opts.row_order_symmetry,
            eager_rainbow: opts.eager_rainbow_pruning,
        }
    }

    #[inline]
    fn mask(&self, i: usize, c: u32) -> &[u64] {
        let base = (i * self.r as usize + (c as usize - 1)) * self.words;
        &self.masks[base..base + self.words]
    }

    #[inline]
    fn mask_mut(&mut self, i: usize, c: u32) -> &mut [u64] {
        let base = (i * self.r as usize + (c as usize - 1)) * self.words;
        &mut self.masks[base..base + self.words]
    }

    /// Would cell `(i, j)` colored `c` close a monochromatic rectangle with
    /// the cells already placed?
    fn closes_mono(&self, i: usize, j: usize, c: u32) -> bool {
        let mine = self.mask(i, c);
        (0..i).any(|up| {
            let theirs = self.mask(up, c);
            bits::test(theirs, j) && bits::intersects_below(theirs, mine, j)
        })
    }

    fn closes_rainbow(&self, i: usize, j: usize, c: u32) -> bool {
        if self.r < 4 {
            return false;
        }
        let row = &self.cells[i * self.m..];
        for up in 0..i {
            let b = self.cells[up * self.m + j];
            if b == c {
                continue;
            }
            let above = &self.cells[up * self.m..];
            let (mc, mb) = (self.mask(i, c), self.mask(i, b));
            let (uc, ub) = (self.mask(up, c), self.mask(up, b));
            for w in 0..=(j.saturating_sub(1) / 64) {
                let lo = w * 64;
                if lo >= j {
                    break;
                }
                let below = if j - lo >= 64 { u64::MAX } else { (1u64 << (j - lo)) - 1 };
                let mut cand = below & !(mc[w] | mb[w] | uc[w] | ub[w]);
                while cand != 0 {
                    let jj = lo + cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    if row[jj] != above[jj] {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl Problem for GridState {
    type Witness = GridColoring;

    fn slots(&self) -> usize {
        self.n * self.m
    }

    fn colors(&self) -> u32 {
        self.r
    }

    fn admits(&self, slot: usize, color: u32) -> bool {
        if !self.row_order || slot < self.m {
            return true;
        }
        let j = slot % self.m;
        if j == 0 || self.tied[slot - 1] {
            color >= self.cells[slot - self.m]
        } else {
            true
        }
    }

    fn assign(&mut self, slot: usize, color: u32) -> bool {
        let (i, j) = (slot / self.m, slot % self.m);
        if self.closes_mono(i, j, color) || (self.eager_rainbow && self.closes_rainbow(i, j, color)) {
            return false;
        }
        self.cells[slot] = color;
        bits::set(self.mask_mut(i, color), j);
        if slot >= self.m {
            self.tied[slot] = (j == 0 || self.tied[slot - 1]) && color == self.cells[slot - self.m];
        }
        true
    }

    fn unassign(&mut self, slot: usize) {
        let (i, j) = (slot / self.m, slot % self.m);
        let c = self.cells[slot];
        bits::clear(self.mask_mut(i, c), j);
        self.cells[slot] = 0;
    }

    fn accept_leaf(&self) -> bool {
        self.eager_rainbow || self.witness().find_rainbow_rectangle().is_none()
    }

    fn witness(&self) -> GridColoring {
        GridColoring::from_flat(self.n, self.m, self.r, self.cells.clone()).expect("complete assignment is a valid coloring")
    }
}

/// Decides whether an `n x m` grid admits an `r`-coloring with neither a
/// monochromatic nor a rainbow rectangle.
///
/// Cells are colored row-major; a branch is cut as soon as the newest cell
/// closes a forbidden rectangle. The returned witness is the first good
/// coloring in that order within the symmetry-reduced space, so it does not
/// depend on `worker_hint`.
pub fn search_good_coloring(n: usize, m: usize, r: u32, opts: &SearchOptions) -> SearchOutcome<GridColoring> {
    assert!(n >= 1 && m >= 1 && r >= 1, "grid search needs n, m, r >= 1");
    let out = driver::search(|| GridState::new(n, m, r, opts), opts);
    if let Some(w) = &out.witness {
        assert!(w.verify_good().is_good, "engine produced a bad witness: {w:?}");
    }
    out
}

/// Least `m <= m_max` for which no good `n x m` coloring with `r` colors
/// exists. Widths are scanned upward; a good coloring of width `m` restricts
/// to every smaller width, so the first exhausted width is the threshold.
///
/// Fails with [`Error::BudgetExceeded`] when some width could not be decided
/// within the node budget.
pub fn minimal_forcing_m(n: usize, r: u32, m_max: usize, opts: &SearchOptions) -> Result<Option<usize>> {
    if n < 2 || r < 1 || m_max < 2 {
        return Err(Error::param(format!(
            "minimal_forcing_m needs n >= 2, r >= 1, m_max >= 2 (got {n}, {r}, {m_max})"
        )));
    }
    for m in 2..=m_max {
        let out = search_good_coloring(n, m, r, opts);
        match out.kind {
            OutcomeKind::Found => continue,
            OutcomeKind::Exhausted => return Ok(Some(m)),
            OutcomeKind::BudgetExceeded => return Err(Error::BudgetExceeded { size: m }),
        }
    }
    Ok(None)
}
