//! The nine-point configuration forcing a monochromatic or rainbow copy of
//! the right triangle `T` with sides `1/2, sqrt(3)/2, 1` in `E^3`.
//!
//! Points, in index order: `A, B, C` (equilateral, side `sqrt(3)/2`, in the
//! plane `z = 0`) and a regular hexagon `A1..A6` of side `1/2` centered at
//! `A`, lying in the plane `x = 0` (perpendicular to `AB`), with `A1` and
//! `A4` on the `z`-axis (the normal to `ABC` through `A`).
//!
//! The exhaustive check fixes `A` to color 1 and `B` to color 2 and keeps `C`
//! off color 2. Nine colors represent every coloring of nine points up to
//! renaming. Any coloring using two or more colors has a two-colored unit
//! segment, and congruence moves it onto `AB`, hence `A != B`. The reflection
//! swapping `A` and `B` fixes `C` and carries the gadget to a congruent copy,
//! so if `C` has `B`'s color, the copy (after renaming colors) has `C` off
//! color 2. A one-colored plane holds
//! monochromatic copies trivially. So the restricted check covers every
//! coloring of `E^3`.

use std::thread;

use super::point::{Configuration, LabeledPoint};
use crate::error::Result;

pub const GADGET_LABELS: [&str; 9] = ["A", "B", "C", "A1", "A2", "A3", "A4", "A5", "A6"];

/// Colors available to each free point.
pub const GADGET_COLORS: u32 = 9;

/// The gadget coordinates (double precision).
pub fn gadget_points() -> Configuration<f64> {
    let s3 = 3f64.sqrt();
    let coords: [[f64; 3]; 9] = [
        [0.0, 0.0, 0.0],
        [s3 / 2.0, 0.0, 0.0],
        [s3 / 4.0, 0.75, 0.0],
        [0.0, 0.0, 0.5],
        [0.0, s3 / 4.0, 0.25],
        [0.0, s3 / 4.0, -0.25],
        [0.0, 0.0, -0.5],
        [0.0, -s3 / 4.0, -0.25],
        [0.0, -s3 / 4.0, 0.25],
    ];
    let points = GADGET_LABELS
        .iter()
        .zip(coords)
        .map(|(l, c)| LabeledPoint::new(*l, c.to_vec()))
        .collect::<Result<_>>()
        .expect("finite coordinates");
    Configuration::new(points).expect("distinct labels")
}

#[derive(Debug, Clone)]
pub struct TGadget {
    pub config: Configuration<f64>,
    /// Index triples `i < j < k` congruent to `T`, lexicographic.
    pub triples: Vec<[usize; 3]>,
}

impl TGadget {
    /// Labels of a triple, e.g. `["A", "B", "A1"]`.
    pub fn labels(&self, t: [usize; 3]) -> [&str; 3] {
        t.map(|i| self.config.points()[i].label.as_str())
    }

    pub fn contains(&self, labels: [&str; 3]) -> bool {
        let mut idx = labels.map(|l| self.config.index_of(l).unwrap_or(usize::MAX));
        idx.sort_unstable();
        self.triples.contains(&idx)
    }

    /// First listed triple that is monochromatic or rainbow under `colors`
    /// (one color per point, index order).
    pub fn find_hit(&self, colors: &[u32; 9]) -> Option<[usize; 3]> {
        find_hit(&self.triples, colors)
    }
}

fn find_hit(triples: &[[usize; 3]], colors: &[u32; 9]) -> Option<[usize; 3]> {
    triples.iter().copied().find(|&[i, j, k]| {
        let (a, b, c) = (colors[i], colors[j], colors[k]);
        // all three equal, or all three distinct
        (a == b) == (b == c) && (a == b) == (a == c)
    })
}

/// Does the sorted distance triple match `1/2, sqrt(3)/2, 1`?
pub fn is_t_shaped(mut d: [f64; 3], tol: f64) -> bool {
    d.sort_by(f64::total_cmp);
    let t = [0.5, 3f64.sqrt() / 2.0, 1.0];
    d.iter().zip(t).all(|(x, y)| (x - y).abs() <= tol)
}

/// The gadget together with every 3-subset congruent to `T` (within 1e-9).
pub fn t_gadget() -> TGadget {
    let config = gadget_points();
    let dm = config.distance_matrix();
    let n = config.len();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if is_t_shaped([dm[i][j], dm[j][k], dm[i][k]], 1e-9) {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    TGadget { config, triples }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    pub colorings: u64,
    /// Colorings with no monochromatic or rainbow `T`; empty when the
    /// claim holds. Only the first few are kept.
    pub failures: Vec<[u32; 9]>,
    pub failure_count: u64,
}

impl GadgetReport {
    pub fn holds(&self) -> bool {
        self.failure_count == 0
    }
}

const KEEP_FAILURES: usize = 8;

/// Visits the colorings with `A = 1`, `B = 2`, the given color of `C`, and
/// `A1..A6` free in `1..=9`.
fn check_slice(triples: &[[usize; 3]], c: u32) -> GadgetReport {
    let mut report = GadgetReport {
        colorings: 0,
        failures: Vec::new(),
        failure_count: 0,
    };
    let mut colors = [1, 2, c, 1, 1, 1, 1, 1, 1];
    loop {
        report.colorings += 1;
        if find_hit(triples, &colors).is_none() {
            report.failure_count += 1;
            if report.failures.len() < KEEP_FAILURES {
                report.failures.push(colors);
            }
        }
        // odometer over positions 3..9
        let mut pos = 8;
        loop {
            if colors[pos] < GADGET_COLORS {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
            if pos == 3 {
                return report;
            }
            pos -= 1;
        }
    }
}

/// Exhaustively checks all `8 * 9^6` restricted colorings, one worker per
/// color of `C`. The report does not depend on `workers`.
pub fn verify_t_gadget_with(workers: usize) -> GadgetReport {
    let gadget = t_gadget();
    let c_colors: Vec<u32> = (1..=GADGET_COLORS).filter(|&c| c != 2).collect();
    let workers = workers.clamp(1, c_colors.len());
    let chunks: Vec<&[u32]> = c_colors.chunks(c_colors.len().div_ceil(workers)).collect();
    let parts: Vec<Vec<GadgetReport>> = thread::scope(|s| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let triples = &gadget.triples;
                s.spawn(move || chunk.iter().map(|&c| check_slice(triples, c)).collect())
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("gadget worker panicked")).collect()
    });
    let mut total = GadgetReport {
        colorings: 0,
        failures: Vec::new(),
        failure_count: 0,
    };
    for part in parts.into_iter().flatten() {
        total.colorings += part.colorings;
        total.failure_count += part.failure_count;
        for f in part.failures {
            if total.failures.len() < KEEP_FAILURES {
                total.failures.push(f);
            }
        }
    }
    total
}

pub fn verify_t_gadget() -> GadgetReport {
    verify_t_gadget_with(thread::available_parallelism().map_or(1, |n| n.get()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(p: &[f64], q: &[f64]) -> Vec<f64> {
        p.iter().zip(q).map(|(a, b)| a - b).collect()
    }

    fn dot(p: &[f64], q: &[f64]) -> f64 {
        p.iter().zip(q).map(|(a, b)| a * b).sum()
    }

    #[test]
    fn triples_named_in_the_argument() {
        let g = t_gadget();
        for i in 1..=6 {
            assert!(g.contains(["A", "B", &format!("A{i}")]));
        }
        assert!(g.contains(["A", "A1", "C"]));
        assert!(g.contains(["A", "A4", "C"]));
        assert!(g.contains(["A2", "A3", "A5"]));
        for j in [2, 3, 5, 6] {
            assert!(g.contains(["A1", "A4", &format!("A{j}")]));
        }
        assert!(!g.contains(["A", "B", "C"]));
    }

    #[test]
    fn list_is_exact() {
        let g = t_gadget();
        let dm = g.config.distance_matrix();
        for i in 0..9 {
            for j in i + 1..9 {
                for k in j + 1..9 {
                    let shaped = is_t_shaped([dm[i][j], dm[j][k], dm[i][k]], 1e-6);
                    assert_eq!(shaped, g.triples.contains(&[i, j, k]), "{:?}", g.labels([i, j, k]));
                }
            }
        }
    }

    #[test]
    fn hexagon_conditions() {
        let cfg = gadget_points();
        let p = |l: &str| cfg.get(l).unwrap().coords.clone();
        let (a, b, c) = (p("A"), p("B"), p("C"));
        let hex: Vec<Vec<f64>> = (1..=6).map(|i| p(&format!("A{i}"))).collect();
        let ab = sub(&b, &a);
        let ac = sub(&c, &a);
        // ABC equilateral of side sqrt(3)/2
        let s = 3f64.sqrt() / 2.0;
        assert!((dot(&ab, &ab).sqrt() - s).abs() < 1e-12);
        assert!((dot(&ac, &ac).sqrt() - s).abs() < 1e-12);
        assert!((dot(&sub(&b, &c), &sub(&b, &c)).sqrt() - s).abs() < 1e-12);
        for i in 0..6 {
            let ai = sub(&hex[i], &a);
            let side = sub(&hex[(i + 1) % 6], &hex[i]);
            // (1) centered at A, side 1/2
            assert!((dot(&ai, &ai).sqrt() - 0.5).abs() < 1e-12);
            assert!((dot(&side, &side).sqrt() - 0.5).abs() < 1e-12);
            // (2) perpendicular to AB
            assert!(dot(&ai, &ab).abs() < 1e-12);
        }
        // (3) A1, A4 on the normal of ABC through A
        let normal = [0.0, 0.0, 1.0];
        assert!(dot(&normal, &ab).abs() < 1e-12 && dot(&normal, &ac).abs() < 1e-12);
        for h in [&hex[0], &hex[3]] {
            let d = sub(h, &a);
            assert!(d[0].abs() < 1e-12 && d[1].abs() < 1e-12);
            assert!(dot(&d, &ac).abs() < 1e-12);
        }
    }

    #[test]
    fn off_palette_hexagon_point_forms_a_rainbow_with_a_and_b() {
        let g = t_gadget();
        let ia = g.config.index_of("A").unwrap();
        let ib = g.config.index_of("B").unwrap();
        for i in 3..9 {
            for c in 3..=9 {
                let mut colors = [1, 2, 1, 1, 2, 1, 2, 1, 2];
                colors[i] = c;
                let mut abi = [ia, ib, i];
                abi.sort_unstable();
                assert!(g.triples.contains(&abi));
                assert_eq!(find_hit(&[abi], &colors), Some(abi));
                assert!(g.find_hit(&colors).is_some());
            }
        }
    }

    #[test]
    fn equal_poles_force_a_mono_hexagon_triple() {
        let g = t_gadget();
        let hex_only: Vec<[usize; 3]> = g.triples.iter().copied().filter(|t| t.iter().all(|&i| i >= 3)).collect();
        for pole in [1, 2] {
            for rest in 0u32..16 {
                let mut colors = [1, 2, 3, pole, 0, 0, pole, 0, 0];
                for (bit, pos) in [4, 5, 7, 8].into_iter().enumerate() {
                    colors[pos] = 1 + ((rest >> bit) & 1);
                }
                let hit = find_hit(&hex_only, &colors).expect("mono hexagon triple");
                let [i, j, k] = hit;
                assert!(colors[i] == colors[j] && colors[j] == colors[k]);
            }
        }
    }

    #[test]
    fn slices_are_complete() {
        let g = t_gadget();
        assert_eq!(check_slice(&g.triples, 1).colorings, 531_441);
    }
}
