use super::point::{congruent, Configuration, LabeledPoint};
use crate::error::{Error, Result};
use crate::graph::{edges, EdgeColoring};
use crate::scalar::Scalar;

/// `k + 1` points `v_i = (side / sqrt 2) e_i` in `E^{k+1}`; every pair is at
/// distance `side` and the points span a `k`-dimensional affine subspace.
pub fn regular_simplex<T: Scalar>(k: usize, side: T) -> Result<Configuration<T>> {
    if k < 1 || side <= T::zero() {
        return Err(Error::param("regular simplex needs k >= 1 and side > 0"));
    }
    let scale = side * T::FRAC_1_SQRT_2();
    let points = (0..=k)
        .map(|i| {
            let mut c = vec![T::zero(); k + 1];
            c[i] = scale;
            LabeledPoint::new(format!("v{i}"), c)
        })
        .collect::<Result<_>>()?;
    Configuration::new(points)
}

/// The axis-aligned `a x b` rectangle in the plane, corners in the order
/// `(0,0), (a,0), (0,b), (a,b)`.
pub fn planar_rectangle<T: Scalar>(a: T, b: T) -> Result<Configuration<T>> {
    let z = T::zero();
    Configuration::from_coords(vec![vec![z, z], vec![a, z], vec![z, b], vec![a, b]])
}

/// Points `A_{i,j}` realizing a grid geometrically: rows of the grid step
/// along a regular simplex of side `a`, columns along a regular simplex of
/// side `b` in an orthogonal block of coordinates.
#[derive(Debug, Clone)]
pub struct LatticeEmbedding<T> {
    rows: usize,
    cols: usize,
    dim: usize,
    points: Vec<Vec<T>>,
}

impl<T: Scalar> LatticeEmbedding<T> {
    /// Builds `A_{i,j} = A_{i,1} + (A_{1,j} - A_{1,1})` from a `(rows-1)`-simplex
    /// of side `a` and a `(cols-1)`-simplex of side `b`.
    pub fn new(rows: usize, cols: usize, a: T, b: T) -> Result<Self> {
        if rows < 2 || cols < 2 || a <= T::zero() || b <= T::zero() {
            return Err(Error::param("lattice embedding needs rows, cols >= 2 and a, b > 0"));
        }
        let row_simplex = regular_simplex(rows - 1, a)?;
        let col_simplex = regular_simplex(cols - 1, b)?;
        let dim = rows + cols;
        // A_{i,1}: row simplex vertex i in the first block, column vertex 1 in the second
        let place = |i: usize, j: usize| -> Vec<T> {
            let mut c = row_simplex.points()[i].coords.clone();
            c.extend_from_slice(&col_simplex.points()[j].coords);
            c
        };
        let origin = place(0, 0);
        let mut points = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            let ai1 = place(i, 0);
            for j in 0..cols {
                let a1j = place(0, j);
                points.push((0..dim).map(|k| ai1[k] + (a1j[k] - origin[k])).collect());
            }
        }
        Ok(LatticeEmbedding { rows, cols, dim, points })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Ambient dimension of the coordinates.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `A_{i,j}`, 1-based.
    pub fn point(&self, i: usize, j: usize) -> &[T] {
        &self.points[(i - 1) * self.cols + (j - 1)]
    }

    /// The four points `A_{i,j}, A_{i2,j}, A_{i,j2}, A_{i2,j2}`.
    pub fn rectangle(&self, i: usize, i2: usize, j: usize, j2: usize) -> Result<Configuration<T>> {
        let corner = |x: usize, y: usize| LabeledPoint::new(format!("A{x},{y}"), self.point(x, y).to_vec());
        Configuration::new(vec![corner(i, j)?, corner(i2, j)?, corner(i, j2)?, corner(i2, j2)?])
    }

    pub fn configuration(&self) -> Result<Configuration<T>> {
        let points = (1..=self.rows)
            .flat_map(|i| (1..=self.cols).map(move |j| (i, j)))
            .map(|(i, j)| LabeledPoint::new(format!("A{i},{j}"), self.point(i, j).to_vec()))
            .collect::<Result<_>>()?;
        Configuration::new(points)
    }

    pub fn affine_rank(&self, threshold: T) -> usize {
        let refs: Vec<&[T]> = self.points.iter().map(Vec::as_slice).collect();
        super::point::affine_rank(&refs, threshold)
    }

    /// Checks every grid rectangle against the planar `a x b` rectangle and
    /// returns how many were tested, or the first rectangle that failed.
    pub fn check_rectangles(&self, a: T, b: T, tol: T) -> Result<std::result::Result<usize, [usize; 4]>> {
        let planar = planar_rectangle(a, b)?;
        let mut tested = 0;
        for i in 1..=self.rows {
            for i2 in i + 1..=self.rows {
                for j in 1..=self.cols {
                    for j2 in j + 1..=self.cols {
                        if congruent(&self.rectangle(i, i2, j, j2)?, &planar, tol)?.is_none() {
                            return Ok(Err([i, i2, j, j2]));
                        }
                        tested += 1;
                    }
                }
            }
        }
        Ok(Ok(tested))
    }
}

/// The `(2r+5) x (11r+1)` lattice realizing the grid of the rectangle
/// forcing argument for `r` colors. Its affine hull has dimension `13r+4`.
pub fn grid_lattice_embedding<T: Scalar>(r: usize, a: T, b: T) -> Result<LatticeEmbedding<T>> {
    if r < 1 {
        return Err(Error::param("grid lattice embedding needs r >= 1"));
    }
    LatticeEmbedding::new(2 * r + 5, 11 * r + 1, a, b)
}

/// Midpoints of a regular simplex: for `1 <= i < j <= t`, the point with
/// `1/sqrt 2` in coordinates `i` and `j`, identified with the edge `v_i v_j`
/// of `K_t`.
#[derive(Debug, Clone)]
pub struct MidpointEmbedding<T> {
    t: usize,
    config: Configuration<T>,
    pairs: Vec<(usize, usize)>,
}

impl<T: Scalar> MidpointEmbedding<T> {
    pub fn vertices(&self) -> usize {
        self.t
    }

    pub fn configuration(&self) -> &Configuration<T> {
        &self.config
    }

    /// The edge `{i, j}` a point stands for.
    pub fn psi(&self, point: usize) -> (usize, usize) {
        self.pairs[point]
    }

    /// Index of the point standing for edge `{u, v}`.
    pub fn psi_inverse(&self, u: usize, v: usize) -> usize {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        (i - 1) * self.t - (i - 1) * i / 2 + (j - i - 1)
    }

    /// The points standing for a list of edges.
    pub fn image(&self, edge_list: &[(usize, usize)]) -> Result<Configuration<T>> {
        let idx: Vec<usize> = edge_list.iter().map(|&(u, v)| self.psi_inverse(u, v)).collect();
        self.config.select(&idx)
    }

    /// Transfers a coloring of the points to the edges of `K_t`.
    pub fn edge_coloring(&self, r: u32, point_colors: &[u32]) -> Result<EdgeColoring> {
        if point_colors.len() != self.pairs.len() {
            return Err(Error::Dimension(format!(
                "{} point colors for {} points",
                point_colors.len(),
                self.pairs.len()
            )));
        }
        EdgeColoring::new(self.t, r, point_colors.to_vec())
    }
}

pub fn simplex_midpoint_embedding<T: Scalar>(t: usize) -> Result<MidpointEmbedding<T>> {
    if t < 2 {
        return Err(Error::param("midpoint embedding needs t >= 2"));
    }
    let h = T::FRAC_1_SQRT_2();
    let pairs: Vec<(usize, usize)> = edges(t).collect();
    let points = pairs
        .iter()
        .map(|&(i, j)| {
            let mut c = vec![T::zero(); t];
            c[i - 1] = h;
            c[j - 1] = h;
            LabeledPoint::new(format!("s{i},{j}"), c)
        })
        .collect::<Result<_>>()?;
    Ok(MidpointEmbedding {
        t,
        config: Configuration::new(points)?,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::point::distance;

    #[test]
    fn simplices() {
        let s = regular_simplex(1, 2.0f64).unwrap();
        assert!((distance(&s.points()[0], &s.points()[1]).unwrap() - 2.0).abs() < 1e-12);
        let s = regular_simplex(5, 2f64.sqrt()).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.sorted_distances().iter().all(|d| (d - 2f64.sqrt()).abs() < 1e-9));
        assert_eq!(s.affine_rank(1e-6), 5);
        assert!(regular_simplex(0, 1.0f64).is_err());
        assert!(regular_simplex(2, -1.0f64).is_err());
    }

    #[test]
    fn simplex_in_single_precision() {
        let s = regular_simplex(4, 1.5f32).unwrap();
        assert!(s.sorted_distances().iter().all(|d| (d - 1.5).abs() < f32::default_tol()));
    }

    #[test]
    fn lattice_lengths() {
        let l = grid_lattice_embedding(1, 3.0f64, 4.0).unwrap();
        assert_eq!((l.rows(), l.cols()), (7, 12));
        let d = |p: &[f64], q: &[f64]| crate::euclid::point::coord_distance(p, q);
        assert!((d(l.point(1, 1), l.point(2, 1)) - 3.0).abs() < 1e-9);
        assert!((d(l.point(1, 1), l.point(1, 2)) - 4.0).abs() < 1e-9);
        assert!((d(l.point(2, 1), l.point(1, 2)) - 5.0).abs() < 1e-9);
        assert!((d(l.point(5, 7), l.point(3, 7)) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn midpoint_indexing() {
        let e = simplex_midpoint_embedding::<f64>(5).unwrap();
        for k in 0..10 {
            let (u, v) = e.psi(k);
            assert_eq!(e.psi_inverse(u, v), k);
            assert_eq!(e.psi_inverse(v, u), k);
        }
        assert!(simplex_midpoint_embedding::<f64>(1).is_err());
    }
}
