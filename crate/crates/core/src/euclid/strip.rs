use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::segment::ColoringOracle;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Color `floor(x / a) mod r` of the vertical-strip coloring of the plane,
/// taken in `0..r` (so negative `x` wraps around).
pub fn strip_color<T: Scalar>(r: u32, a: T, p: [T; 2]) -> u32 {
    let strip = (p[0] / a).floor().to_i64().expect("coordinate in range");
    strip.rem_euclid(r as i64) as u32
}

/// The strip coloring as an oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripColoring<T> {
    pub r: u32,
    pub a: T,
}

impl<T: Scalar> ColoringOracle<T> for StripColoring<T> {
    fn color(&self, p: [T; 2]) -> u32 {
        strip_color(self.r, self.a, p)
    }
}

/// A rigid placement of the rectangle: center and rotation angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement<T> {
    pub center: [T; 2],
    pub angle: T,
}

impl<T: Scalar> Placement<T> {
    /// Corners of an `a x b` rectangle in cyclic order.
    pub fn corners(&self, a: T, b: T) -> [[T; 2]; 4] {
        let two = T::lit(2.0);
        let (s, c) = self.angle.sin_cos();
        let (ha, hb) = (a / two, b / two);
        let at = |x: T, y: T| [self.center[0] + x * c - y * s, self.center[1] + x * s + y * c];
        [at(-ha, -hb), at(ha, -hb), at(ha, hb), at(-ha, hb)]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FalsificationReport<T> {
    pub trials: u64,
    pub mono_hits: u64,
    pub rainbow_hits: u64,
    pub first_counterexample: Option<Placement<T>>,
}

/// Monte-Carlo search for a monochromatic or rainbow `a x b` rectangle under
/// the `r`-strip coloring of width `a`.
///
/// Each trial draws an angle uniformly from `[0, pi)` and a center uniformly
/// from `[0, r a) x [0, 1)`; the coloring is invariant under translation by
/// `r a` horizontally and by anything vertically, so this covers every
/// placement. Sampling uses ChaCha8 seeded with `seed`, so reports are
/// reproducible.
pub fn falsify_strip<T: Scalar>(r: u32, a: T, b: T, trials: u64, seed: u64) -> Result<FalsificationReport<T>> {
    if r < 3 {
        return Err(Error::param(format!("strip falsification needs r >= 3, got {r}")));
    }
    if !(a > T::zero() && a <= b) {
        return Err(Error::param("need 0 < a <= b"));
    }
    if b > T::lit(3.0).sqrt() * a {
        return Err(Error::param("need b <= sqrt(3) a"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = T::from_u32(r).expect("small integer") * a;
    let mut report = FalsificationReport {
        trials,
        mono_hits: 0,
        rainbow_hits: 0,
        first_counterexample: None,
    };
    for _ in 0..trials {
        let angle = T::lit(rng.gen::<f64>()) * T::PI();
        let center = [T::lit(rng.gen::<f64>()) * width, T::lit(rng.gen::<f64>())];
        let placement = Placement { center, angle };
        let colors = placement.corners(a, b).map(|p| strip_color(r, a, p));
        let mono = colors.iter().all(|&c| c == colors[0]);
        let rainbow = (0..4).all(|x| (x + 1..4).all(|y| colors[x] != colors[y]));
        if mono {
            report.mono_hits += 1;
        }
        if rainbow {
            report.rainbow_hits += 1;
        }
        if (mono || rainbow) && report.first_counterexample.is_none() {
            report.first_counterexample = Some(placement);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_colors() {
        assert_eq!(strip_color(3, 1.0f64, [0.0, 0.0]), 0);
        assert_eq!(strip_color(3, 1.0f64, [2.5, 7.0]), 2);
        assert_eq!(strip_color(3, 1.0f64, [-0.5, 0.0]), 2);
        assert_eq!(strip_color(3, 1.0f64, [3.0, 0.0]), 0);
        assert_eq!(strip_color(4, 0.5f32, [-2.25, 1.0]), 3);
    }

    #[test]
    fn corners_form_the_rectangle() {
        let p = Placement {
            center: [1.0f64, 2.0],
            angle: 0.3,
        };
        let c = p.corners(1.0, 2.0);
        let d = |u: [f64; 2], v: [f64; 2]| ((u[0] - v[0]).powi(2) + (u[1] - v[1]).powi(2)).sqrt();
        assert!((d(c[0], c[1]) - 1.0).abs() < 1e-12);
        assert!((d(c[1], c[2]) - 2.0).abs() < 1e-12);
        assert!((d(c[0], c[2]) - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn parameter_ranges() {
        assert!(falsify_strip(2, 1.0f64, 1.0, 1, 0).is_err());
        assert!(falsify_strip(3, 1.0f64, 0.5, 1, 0).is_err());
        assert!(falsify_strip(3, 1.0f64, 1.8, 1, 0).is_err());
        assert!(falsify_strip(3, 0.0f64, 1.0, 1, 0).is_err());
        assert!(falsify_strip(4, 1.0f64, 3f64.sqrt(), 1, 0).is_ok());
    }

    #[test]
    fn zero_trials() {
        let rep = falsify_strip(3, 1.0f64, 1.0, 0, 9).unwrap();
        assert_eq!((rep.trials, rep.mono_hits, rep.rainbow_hits), (0, 0, 0));
        assert!(rep.first_counterexample.is_none());
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = falsify_strip(3, 1.0f64, 1.5, 5000, 42).unwrap();
        let b = falsify_strip(3, 1.0f64, 1.5, 5000, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mono_hits + a.rainbow_hits, 0);
    }

    #[test]
    fn outside_the_range_hits_appear() {
        // r = 3 and a wide rectangle: corners can reach two strips of one color
        let rep = falsify_strip_unchecked(3, 1.0, 3.5, 20_000, 1);
        assert!(rep.mono_hits > 0);
    }

    fn falsify_strip_unchecked(r: u32, a: f64, b: f64, trials: u64, seed: u64) -> FalsificationReport<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut mono_hits = 0;
        for _ in 0..trials {
            let p = Placement {
                center: [rng.gen::<f64>() * r as f64 * a, rng.gen::<f64>()],
                angle: rng.gen::<f64>() * std::f64::consts::PI,
            };
            let c = p.corners(a, b).map(|q| strip_color(r, a, q));
            if c.iter().all(|&x| x == c[0]) {
                mono_hits += 1;
            }
        }
        FalsificationReport {
            trials,
            mono_hits,
            rainbow_hits: 0,
            first_counterexample: None,
        }
    }
}
