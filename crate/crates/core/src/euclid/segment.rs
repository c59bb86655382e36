use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coloring of the plane.
pub trait ColoringOracle<T> {
    fn color(&self, p: [T; 2]) -> u32;
}

impl<T, F: Fn([T; 2]) -> u32> ColoringOracle<T> for F {
    fn color(&self, p: [T; 2]) -> u32 {
        self(p)
    }
}

/// Two-coloring by a line: color 1 where `normal . p < offset`, else 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane<T> {
    pub normal: [T; 2],
    pub offset: T,
}

impl<T: Scalar> HalfPlane<T> {
    /// The split at `x = 0`.
    pub fn vertical() -> Self {
        HalfPlane {
            normal: [T::one(), T::zero()],
            offset: T::zero(),
        }
    }
}

impl<T: Scalar> ColoringOracle<T> for HalfPlane<T> {
    fn color(&self, p: [T; 2]) -> u32 {
        if self.normal[0] * p[0] + self.normal[1] * p[1] < self.offset {
            1
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainbowSegment<T> {
    pub p: [T; 2],
    pub q: [T; 2],
    /// Loop rounds used, the apex round included.
    pub iterations: usize,
}

fn dist<T: Scalar>(p: [T; 2], q: [T; 2]) -> T {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Turns a rainbow pair `C, D` into a rainbow pair at distance exactly `d`.
///
/// While `|CD| > 2d`, `C` steps by `d` toward `D`; the first step that
/// changes color is returned. Otherwise both apexes `E` with
/// `|EC| = |ED| = d` exist, the lexicographically larger is taken, and `E`
/// is paired with whichever of `C`, `D` it differs from.
///
/// At most `ceil(|CD| / d) + 1` rounds are needed; `max_iter` is a guard.
pub fn rainbow_segment<T: Scalar, O: ColoringOracle<T> + ?Sized>(
    oracle: &O,
    d: T,
    c: [T; 2],
    dd: [T; 2],
    max_iter: usize,
) -> Result<RainbowSegment<T>> {
    if !d.is_finite() || d <= T::zero() {
        return Err(Error::param("segment length must be positive"));
    }
    if c.iter().chain(dd.iter()).any(|x| !x.is_finite()) {
        return Err(Error::param("witness coordinates must be finite"));
    }
    let (color_d, mut cur, mut color_c) = (oracle.color(dd), c, oracle.color(c));
    if color_c == color_d {
        return Err(Error::Procedure(format!("witness is not rainbow: both points have color {color_c}")));
    }
    let two = T::lit(2.0);
    for iterations in 1..=max_iter {
        let len = dist(cur, dd);
        if len > two * d {
            let s = d / len;
            let next = [cur[0] + (dd[0] - cur[0]) * s, cur[1] + (dd[1] - cur[1]) * s];
            let color_n = oracle.color(next);
            if color_n != color_c {
                return Ok(RainbowSegment {
                    p: cur,
                    q: next,
                    iterations,
                });
            }
            cur = next;
            color_c = color_n;
            continue;
        }
        let mid = [(cur[0] + dd[0]) / two, (cur[1] + dd[1]) / two];
        let half = len / two;
        let height = (d * d - half * half).max(T::zero()).sqrt();
        let unit = [-(dd[1] - cur[1]) / len, (dd[0] - cur[0]) / len];
        let e1 = [mid[0] + unit[0] * height, mid[1] + unit[1] * height];
        let e2 = [mid[0] - unit[0] * height, mid[1] - unit[1] * height];
        let e = if (e1[0], e1[1]) >= (e2[0], e2[1]) { e1 } else { e2 };
        let other = if oracle.color(e) != color_c { cur } else { dd };
        return Ok(RainbowSegment {
            p: e,
            q: other,
            iterations,
        });
    }
    Err(Error::Procedure(format!("no rainbow segment within {max_iter} iterations")))
}

/// The round bound `ceil(|CD| / d) + 1`.
pub fn segment_iteration_bound<T: Scalar>(d: T, c: [T; 2], dd: [T; 2]) -> usize {
    (dist(c, dd) / d).ceil().to_usize().unwrap_or(usize::MAX).saturating_add(1)
}
