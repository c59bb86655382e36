//! Colorings of the `n x m` grid and detection of monochromatic and rainbow
//! axis-aligned rectangles.
//!
//! Cells are addressed 1-based as `(row, col)` and colors are `1..=r`. Every
//! coloring keeps one column bitmap per `(row, color)` pair; two rows `i`,
//! `i2` span a monochromatic rectangle in color `c` exactly when the AND of
//! their `c` bitmaps has at least two bits set.

mod bipartite;
pub(crate) mod cert;

pub use bipartite::BipartiteColoring;
pub use cert::{parse_grid_certificate, write_grid_certificate};

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// An `r`-coloring of the `n x m` grid. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridColoring {
    n: usize,
    m: usize,
    r: u32,
    cells: Vec<u32>,
    words: usize,
    masks: Vec<u64>,
}

/// Four corners `(i,j), (i2,j), (i,j2), (i2,j2)` with `i < i2` and `j < j2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridRectangle {
    pub i: usize,
    pub i2: usize,
    pub j: usize,
    pub j2: usize,
}

impl GridRectangle {
    pub fn new(i: usize, i2: usize, j: usize, j2: usize) -> Self {
        GridRectangle { i, i2, j, j2 }
    }

    /// Corners in the order `(i,j), (i,j2), (i2,j), (i2,j2)`.
    pub fn corners(&self) -> [(usize, usize); 4] {
        [
            (self.i, self.j),
            (self.i, self.j2),
            (self.i2, self.j),
            (self.i2, self.j2),
        ]
    }

    pub fn fits(&self, n: usize, m: usize) -> bool {
        1 <= self.i && self.i < self.i2 && self.i2 <= n && 1 <= self.j && self.j < self.j2 && self.j2 <= m
    }
}

impl fmt::Display for GridRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows {},{} cols {},{}", self.i, self.i2, self.j, self.j2)
    }
}

/// Outcome of checking a coloring for both forbidden rectangle kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    pub mono_witness: Option<GridRectangle>,
    pub rainbow_witness: Option<GridRectangle>,
    pub is_good: bool,
}

impl GridColoring {
    /// Validates shape and color range of a row-major matrix.
    pub fn new(n: usize, m: usize, r: u32, cells: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 || m == 0 || r == 0 {
            return Err(Error::param(format!(
                "grid needs n, m, r >= 1 (got {n}, {m}, {r})"
            )));
        }
        if cells.len() != n {
            return Err(Error::Dimension(format!(
                "expected {n} rows, got {}",
                cells.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * m);
        for (i, row) in cells.into_iter().enumerate() {
            if row.len() != m {
                return Err(Error::Dimension(format!(
                    "row {} has {} cells, expected {m}",
                    i + 1,
                    row.len()
                )));
            }
            flat.extend(row);
        }
        Self::from_flat(n, m, r, flat)
    }

    /// Same as [`GridColoring::new`] with the cells given row-major in one slice.
    pub fn from_flat(n: usize, m: usize, r: u32, cells: Vec<u32>) -> Result<Self> {
        if n == 0 || m == 0 || r == 0 {
            return Err(Error::param(format!(
                "grid needs n, m, r >= 1 (got {n}, {m}, {r})"
            )));
        }
        if cells.len() != n * m {
            return Err(Error::Dimension(format!(
                "expected {} cells, got {}",
                n * m,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&c| c == 0 || c > r) {
            return Err(Error::ColorOutOfRange {
                row: pos / m + 1,
                col: pos % m + 1,
                value: cells[pos],
                colors: r,
            });
        }
        let words = bits::words_for(m);
        let mut masks = vec![0u64; n * r as usize * words];
        for (pos, &c) in cells.iter().enumerate() {
            let (i, j) = (pos / m, pos % m);
            let base = (i * r as usize + (c as usize - 1)) * words;
            bits::set(&mut masks[base..base + words], j);
        }
        Ok(GridColoring {
            n,
            m,
            r,
            cells,
            words,
            masks,
        })
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn colors(&self) -> u32 {
        self.r
    }

    /// Color of the 1-based cell `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[(i - 1) * self.m + (j - 1)]
    }

    /// Row-major cell colors.
    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[(i - 1) * self.m..i * self.m]
    }

    /// Column bitmap of the cells in 1-based row `i` carrying color `c`.
    fn mask(&self, i: usize, c: u32) -> &[u64] {
        let base = ((i - 1) * self.r as usize + (c as usize - 1)) * self.words;
        &self.masks[base..base + self.words]
    }

    /// Same coloring with the colors renamed as `perm[c - 1]`.
    pub fn recolor(&self, perm: &[u32]) -> Result<Self> {
        let cells = self
            .cells
            .iter()
            .map(|&c| perm.get(c as usize - 1).copied().unwrap_or(0))
            .collect();
        Self::from_flat(self.n, self.m, self.r, cells)
    }

    /// The subgrid made of the first `n` rows and `m` columns.
    pub fn restrict(&self, n: usize, m: usize) -> Result<Self> {
        if n > self.n || m > self.m {
            return Err(Error::Dimension(format!(
                "cannot restrict {}x{} to {n}x{m}",
                self.n, self.m
            )));
        }
        let cells = (1..=n)
            .flat_map(|i| self.row(i)[..m].iter().copied())
            .collect();
        Self::from_flat(n, m, self.r, cells)
    }

    pub fn is_mono(&self, rect: &GridRectangle) -> bool {
        let [a, b, c, d] = rect.corners().map(|(i, j)| self.get(i, j));
        a == b && b == c && c == d
    }

    pub fn is_rainbow(&self, rect: &GridRectangle) -> bool {
        let [a, b, c, d] = rect.corners().map(|(i, j)| self.get(i, j));
        a != b && a != c && a != d && b != c && b != d && c != d
    }

    /// Lexicographically least monochromatic rectangle, if any.
    pub fn find_mono_rectangle(&self) -> Option<GridRectangle> {
        let mut common = vec![0u64; self.words];
        for i in 1..=self.n {
            for i2 in i + 1..=self.n {
                let mut best: Option<(usize, usize)> = None;
                for c in 1..=self.r {
                    bits::and_into(&mut common, self.mask(i, c), self.mask(i2, c));
                    let mut ones = bits::iter_ones(&common);
                    if let (Some(j), Some(j2)) = (ones.next(), ones.next()) {
                        if best.is_none_or(|b| (j, j2) < b) {
                            best = Some((j, j2));
                        }
                    }
                }
                if let Some((j, j2)) = best {
                    return Some(GridRectangle::new(i, i2, j + 1, j2 + 1));
                }
            }
        }
        None
    }

    /// Lexicographically least rainbow rectangle, if any.
    pub fn find_rainbow_rectangle(&self) -> Option<GridRectangle> {
        if self.r < 4 || self.n < 2 || self.m < 2 {
            return None;
        }
        let w = self.words;
        let mut differ = vec![0u64; w];
        let mut scratch = vec![0u64; w];
        for i in 1..=self.n {
            for i2 in i + 1..=self.n {
                // columns where the two rows carry different colors
                bits::fill_ones(&mut differ, self.m);
                for c in 1..=self.r {
                    bits::and_into(&mut scratch, self.mask(i, c), self.mask(i2, c));
                    bits::and_not_assign(&mut differ, &scratch);
                }
                for j in bits::iter_ones(&differ).collect::<Vec<_>>() {
                    let a = self.get(i, j + 1);
                    let b = self.get(i2, j + 1);
                    scratch.copy_from_slice(&differ);
                    bits::clear_through(&mut scratch, j);
                    for c in [a, b] {
                        bits::and_not_assign(&mut scratch, self.mask(i, c));
                        bits::and_not_assign(&mut scratch, self.mask(i2, c));
                    }
                    if let Some(j2) = bits::iter_ones(&scratch).next() {
                        return Some(GridRectangle::new(i, i2, j + 1, j2 + 1));
                    }
                }
            }
        }
        None
    }

    pub fn verify_good(&self) -> VerificationReport {
        let mono_witness = self.find_mono_rectangle();
        let rainbow_witness = self.find_rainbow_rectangle();
        VerificationReport {
            mono_witness,
            rainbow_witness,
            is_good: mono_witness.is_none() && rainbow_witness.is_none(),
        }
    }

    /// The edge coloring of `K_{n,m}` sending edge `(i, j)` to the color of
    /// cell `(i, j)`.
    pub fn to_bipartite_edge_coloring(&self) -> BipartiteColoring {
        BipartiteColoring::from_grid(self)
    }
}

impl fmt::Debug for GridColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridColoring({}x{}, r={}) [", self.n, self.m, self.r)?;
        for i in 1..=self.n {
            if i > 1 {
                write!(f, " / ")?;
            }
            for (k, c) in self.row(i).iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(r: u32, rows: &[&[u32]]) -> GridColoring {
        let cells = rows.iter().map(|row| row.to_vec()).collect::<Vec<_>>();
        GridColoring::new(rows.len(), rows[0].len(), r, cells).unwrap()
    }

    fn naive_rects(g: &GridColoring) -> impl Iterator<Item = GridRectangle> + '_ {
        let (n, m) = (g.rows(), g.cols());
        (1..=n).flat_map(move |i| {
            (i + 1..=n).flat_map(move |i2| {
                (1..=m).flat_map(move |j| (j + 1..=m).map(move |j2| GridRectangle::new(i, i2, j, j2)))
            })
        })
    }

    #[test]
    fn construction() {
        assert!(GridColoring::new(1, 1, 1, vec![vec![1]]).is_ok());
        assert!(GridColoring::new(2, 2, 1, vec![vec![1, 1], vec![1, 1]]).is_ok());
        assert_eq!(
            GridColoring::new(2, 2, 2, vec![vec![1, 3], vec![1, 1]]),
            Err(Error::ColorOutOfRange {
                row: 1,
                col: 2,
                value: 3,
                colors: 2
            })
        );
        assert!(matches!(
            GridColoring::new(2, 2, 2, vec![vec![1, 1], vec![1]]),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            GridColoring::new(2, 2, 2, vec![vec![1, 1]]),
            Err(Error::Dimension(_))
        ));
        assert!(GridColoring::new(1, 1, 1, vec![vec![0]]).is_err());
        assert!(GridColoring::new(0, 1, 1, vec![]).is_err());
    }

    #[test]
    fn mono_detection() {
        let g = grid(1, &[&[1, 1], &[1, 1]]);
        assert_eq!(g.find_mono_rectangle(), Some(GridRectangle::new(1, 2, 1, 2)));
        let g = grid(2, &[&[1, 2], &[2, 1]]);
        assert_eq!(g.find_mono_rectangle(), None);
    }

    #[test]
    fn mono_witness_is_least_across_colors() {
        // color 1 pairs columns (2,3), color 2 pairs columns (1,4)
        let g = grid(2, &[&[2, 1, 1, 2], &[2, 1, 1, 2]]);
        assert_eq!(g.find_mono_rectangle(), Some(GridRectangle::new(1, 2, 1, 4)));
        let g = grid(3, &[&[2, 1, 2, 1, 3], &[2, 3, 2, 1, 1]]);
        assert_eq!(g.find_mono_rectangle(), Some(GridRectangle::new(1, 2, 1, 3)));
    }

    #[test]
    fn rainbow_detection() {
        let g = grid(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(g.find_rainbow_rectangle(), Some(GridRectangle::new(1, 2, 1, 2)));
        let g = grid(4, &[&[1, 1, 2], &[3, 1, 4]]);
        assert_eq!(g.find_rainbow_rectangle(), Some(GridRectangle::new(1, 2, 1, 3)));
        let g = grid(3, &[&[1, 2, 3], &[3, 1, 2]]);
        assert_eq!(g.find_rainbow_rectangle(), None);
    }

    #[test]
    fn report() {
        let g = grid(2, &[&[1, 2], &[2, 1]]);
        let rep = g.verify_good();
        assert!(rep.is_good);
        let g = grid(1, &[&[1, 1], &[1, 1]]);
        let rep = g.verify_good();
        assert!(!rep.is_good);
        assert_eq!(rep.mono_witness, Some(GridRectangle::new(1, 2, 1, 2)));
        assert_eq!(rep.rainbow_witness, None);
    }

    #[test]
    fn wide_grid_crosses_word_boundary() {
        let m = 130;
        let mut cells = vec![vec![0u32; m]; 2];
        for j in 0..m {
            cells[0][j] = (j % 3 + 1) as u32;
            cells[1][j] = ((j + 1) % 3 + 1) as u32;
        }
        // the rows differ everywhere except columns 128 and 130 (1-based), both color 2
        cells[0][129] = 2;
        cells[1][127] = 2;
        cells[1][129] = 2;
        let g = GridColoring::new(2, m, 4, cells).unwrap();
        assert_eq!(g.find_mono_rectangle(), Some(GridRectangle::new(1, 2, 128, 130)));
        cells_naive_agree(&g);
    }

    fn cells_naive_agree(g: &GridColoring) {
        let mono = naive_rects(g).find(|r| g.is_mono(r));
        let rainbow = naive_rects(g).find(|r| g.is_rainbow(r));
        assert_eq!(g.find_mono_rectangle(), mono);
        assert_eq!(g.find_rainbow_rectangle(), rainbow);
    }

    #[test]
    fn detectors_match_naive_scan_on_small_grids() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4000 {
            let n = rng.gen_range(1..=4);
            let m = rng.gen_range(1..=4);
            let r = rng.gen_range(1..=4);
            let cells = (0..n * m).map(|_| rng.gen_range(1..=r)).collect();
            let g = GridColoring::from_flat(n, m, r, cells).unwrap();
            cells_naive_agree(&g);
        }
    }

    #[test]
    fn restriction_and_recolor() {
        let g = grid(4, &[&[1, 2, 3], &[4, 1, 1], &[2, 2, 4]]);
        let s = g.restrict(2, 2).unwrap();
        assert_eq!(s.cells(), &[1, 2, 4, 1]);
        let p = g.recolor(&[2, 1, 4, 3]).unwrap();
        assert_eq!(p.row(1), &[2, 1, 4]);
        assert!(g.restrict(4, 1).is_err());
    }
}
