use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A named point of some Euclidean space.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPoint<T> {
    pub label: String,
    pub coords: Vec<T>,
}

impl<T: Scalar> LabeledPoint<T> {
    pub fn new(label: impl Into<String>, coords: Vec<T>) -> Result<Self> {
        let label = label.into();
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::param(format!("point {label} has a non-finite coordinate")));
        }
        Ok(LabeledPoint { label, coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Euclidean distance; both points must live in the same space.
pub fn distance<T: Scalar>(p: &LabeledPoint<T>, q: &LabeledPoint<T>) -> Result<T> {
    if p.dim() != q.dim() {
        return Err(Error::Dimension(format!(
            "{} lives in E^{}, {} in E^{}",
            p.label,
            p.dim(),
            q.label,
            q.dim()
        )));
    }
    Ok(coord_distance(&p.coords, &q.coords))
}

pub(crate) fn coord_distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (&x, &y)| acc + (x - y) * (x - y))
        .sqrt()
}

/// A finite point set with unique labels in one ambient space.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    points: Vec<LabeledPoint<T>>,
}

impl<T: Scalar> Configuration<T> {
    pub fn new(points: Vec<LabeledPoint<T>>) -> Result<Self> {
        if let Some(first) = points.first() {
            if let Some(p) = points.iter().find(|p| p.dim() != first.dim()) {
                return Err(Error::Dimension(format!(
                    "{} lives in E^{}, {} in E^{}",
                    p.label,
                    p.dim(),
                    first.label,
                    first.dim()
                )));
            }
        }
        let mut seen = HashSet::new();
        if let Some(p) = points.iter().find(|p| !seen.insert(p.label.as_str())) {
            return Err(Error::param(format!("duplicate label {}", p.label)));
        }
        Ok(Configuration { points })
    }

    /// Unlabeled coordinates, labelled `p1, p2, ...`.
    pub fn from_coords(coords: Vec<Vec<T>>) -> Result<Self> {
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(k, c)| LabeledPoint::new(format!("p{}", k + 1), c))
            .collect::<Result<_>>()?;
        Self::new(points)
    }

    pub fn points(&self) -> &[LabeledPoint<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Ambient dimension, 0 for the empty configuration.
    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, LabeledPoint::dim)
    }

    pub fn get(&self, label: &str) -> Option<&LabeledPoint<T>> {
        self.points.iter().find(|p| p.label == label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    /// Sub-configuration made of the given indices.
    pub fn select(&self, idx: &[usize]) -> Result<Self> {
        Self::new(idx.iter().map(|&k| self.points[k].clone()).collect())
    }

    pub fn distance_matrix(&self) -> Vec<Vec<T>> {
        self.points
            .iter()
            .map(|p| self.points.iter().map(|q| coord_distance(&p.coords, &q.coords)).collect())
            .collect()
    }

    /// Pairwise distances in ascending order.
    pub fn sorted_distances(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.len() * self.len().saturating_sub(1) / 2);
        for (k, p) in self.points.iter().enumerate() {
            for q in &self.points[k + 1..] {
                out.push(coord_distance(&p.coords, &q.coords));
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));
        out
    }

    /// Dimension of the affine hull, see [`affine_rank`].
    pub fn affine_rank(&self, threshold: T) -> usize {
        let coords: Vec<&[T]> = self.points.iter().map(|p| p.coords.as_slice()).collect();
        affine_rank(&coords, threshold)
    }
}

/// A distance-preserving correspondence between two configurations:
/// point `k` of the first maps to point `map[k]` of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    pub map: Vec<usize>,
    pub labels: Vec<(String, String)>,
}

/// Finds a bijection under which all pairwise distances agree within `tol`.
/// The two configurations may live in spaces of different dimension.
pub fn congruent<T: Scalar>(a: &Configuration<T>, b: &Configuration<T>, tol: T) -> Result<Option<Bijection>> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "configurations have {} and {} points",
            a.len(),
            b.len()
        )));
    }
    if tol <= T::zero() {
        return Err(Error::param("tolerance must be positive"));
    }
    let (sa, sb) = (a.sorted_distances(), b.sorted_distances());
    if sa.iter().zip(&sb).any(|(&x, &y)| (x - y).abs() > tol) {
        return Ok(None);
    }
    let (da, db) = (a.distance_matrix(), b.distance_matrix());
    let n = a.len();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn extend<T: Scalar>(da: &[Vec<T>], db: &[Vec<T>], tol: T, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == da.len() {
            return true;
        }
        for cand in 0..db.len() {
            if used[cand] || !map.iter().enumerate().all(|(p, &q)| (da[k][p] - db[cand][q]).abs() <= tol) {
                continue;
            }
            used[cand] = true;
            map.push(cand);
            if extend(da, db, tol, map, used) {
                return true;
            }
            map.pop();
            used[cand] = false;
        }
        false
    }

    if !extend(&da, &db, tol, &mut map, &mut used) {
        return Ok(None);
    }
    let labels = map
        .iter()
        .enumerate()
        .map(|(k, &q)| (a.points[k].label.clone(), b.points[q].label.clone()))
        .collect();
    Ok(Some(Bijection { map, labels }))
}

/// Dimension of the affine hull of `points`: the rank of the differences to
/// the first point, by Gaussian elimination with full pivoting; pivots of
/// magnitude at most `threshold` count as zero.
pub fn affine_rank<T: Scalar>(points: &[&[T]], threshold: T) -> usize {
    let Some(origin) = points.first() else {
        return 0;
    };
    let mut rows: Vec<Vec<T>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(origin.iter()).map(|(&x, &o)| x - o).collect())
        .collect();
    let cols = origin.len();
    let mut rank = 0;
    while rank < rows.len() && rank < cols {
        let mut best = (rank, rank, T::zero());
        for (i, row) in rows.iter().enumerate().skip(rank) {
            for (j, &v) in row.iter().enumerate().skip(rank) {
                if v.abs() > best.2 {
                    best = (i, j, v.abs());
                }
            }
        }
        if best.2 <= threshold {
            break;
        }
        rows.swap(rank, best.0);
        for row in rows.iter_mut() {
            row.swap(rank, best.1);
        }
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[rank] / pivot[rank];
            if factor != T::zero() {
                for (x, &p) in row.iter_mut().zip(&pivot).skip(rank) {
                    *x = *x - factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `config <dim> <k>` followed by `label x1 .. x_dim` lines.
pub fn write_configuration<T: Scalar>(cfg: &Configuration<T>) -> String {
    let mut out = format!("config {} {}\n", cfg.dim(), cfg.len());
    for p in cfg.points() {
        out.push_str(&p.label);
        for c in &p.coords {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_configuration<T: Scalar>(text: &str) -> Result<Configuration<T>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::format(1, "empty configuration file"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 3 || h[0] != "config" {
        return Err(Error::format(1, "expected `config <dim> <k>`"));
    }
    let dim: usize = h[1].parse().map_err(|_| Error::format(1, "bad dimension"))?;
    let k: usize = h[2].parse().map_err(|_| Error::format(1, "bad point count"))?;
    let mut points = Vec::with_capacity(k);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.is_empty() {
            continue;
        }
        if points.len() == k {
            return Err(Error::format(lineno, "more points than announced"));
        }
        if f.len() != dim + 1 {
            return Err(Error::format(lineno, format!("expected a label and {dim} coordinates")));
        }
        let coords = f[1..]
            .iter()
            .map(|s| s.parse::<T>().map_err(|_| Error::format(lineno, format!("bad coordinate {s:?}"))))
            .collect::<Result<Vec<T>>>()?;
        points.push(LabeledPoint::new(f[0], coords).map_err(|e| Error::format(lineno, e.to_string()))?);
    }
    if points.len() != k {
        return Err(Error::format(
            text.lines().count(),
            format!("announced {k} points, found {}", points.len()),
        ));
    }
    Configuration::new(points)
}
