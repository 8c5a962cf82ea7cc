//! One-parameter family of quadrilaterals with fixed sides.
//!
//! Label the quadrilateral `A B C D` with `AB = s1`, `BC = s2`, `CD = s3`,
//! `DA = k`. Once the diagonal `p = AC` is chosen the convex shape is
//! determined, so the area is a function of `p` alone.

use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, Result};
use crate::kernel::{frame_point, law_of_cosines_angle, GeometryKind, Point, Side};
use crate::triangle::triangle_area;

/// Points of the coarse scan that picks the bracket for golden-section search.
pub const COARSE_SCAN_POINTS: usize = 64;
/// Target width of the golden-section bracket.
pub const GOLDEN_WIDTH: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlexProblem {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    /// Fixed chord `DA`.
    pub k: f64,
    pub geometry: GeometryKind,
    lo: f64,
    hi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlexSolution {
    pub diagonal: f64,
    pub area: f64,
}

impl FlexProblem {
    pub fn new(s1: f64, s2: f64, s3: f64, k: f64, geometry: GeometryKind) -> Result<Self> {
        if ![s1, s2, s3, k].iter().all(|x| x.is_finite() && *x > 0.0) {
            return Err(GeomError::InfeasibleFlex);
        }
        let lo = (s1 - s2).abs().max((k - s3).abs());
        let mut hi = (s1 + s2).min(k + s3);
        if geometry == GeometryKind::Spherical {
            hi = hi.min(TAU - s1 - s2).min(TAU - s3 - k).min(PI);
        }
        if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
            return Err(GeomError::InfeasibleFlex);
        }
        Ok(Self {
            s1,
            s2,
            s3,
            k,
            geometry,
            lo,
            hi,
        })
    }

    /// Open interval of admissible diagonals.
    pub fn feasible_interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    fn check(&self, p: f64) -> Result<()> {
        if p > self.lo && p < self.hi {
            Ok(())
        } else {
            Err(GeomError::InvalidDiagonal {
                p,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// Area of the convex configuration with diagonal `p`.
    pub fn area(&self, p: f64) -> Result<f64> {
        self.check(p)?;
        let g = self.geometry;
        Ok(triangle_area(self.s1, self.s2, p, g)? + triangle_area(p, self.s3, self.k, g)?)
    }

    /// Interior angles `[A, B, C, D]` of the configuration with diagonal `p`,
    /// from side lengths alone.
    pub fn angles(&self, p: f64) -> Result<[f64; 4]> {
        self.check(p)?;
        let g = self.geometry;
        let (s1, s2, s3, k) = (self.s1, self.s2, self.s3, self.k);
        let a = law_of_cosines_angle(s1, p, s2, g)? + law_of_cosines_angle(p, k, s3, g)?;
        let b = law_of_cosines_angle(s1, s2, p, g)?;
        let c = law_of_cosines_angle(s2, p, s1, g)? + law_of_cosines_angle(p, s3, k, g)?;
        let d = law_of_cosines_angle(s3, k, p, g)?;
        Ok([a, b, c, d])
    }

    /// `(A + C) - (B + D)` at diagonal `p`.
    pub fn gap(&self, p: f64) -> Result<f64> {
        let [a, b, c, d] = self.angles(p)?;
        Ok((a + c) - (b + d))
    }

    /// Vertices `[A, B, C, D]` in the canonical frame: `A` at the center,
    /// `D` on the θ = 0 ray, `B` and `C` on `side`. Spherical vertices are
    /// frame points.
    pub fn realize(&self, p: f64, side: Side) -> Result<[Point; 4]> {
        self.check(p)?;
        let g = self.geometry;
        let at_a_cd = law_of_cosines_angle(p, self.k, self.s3, g)?;
        let at_a_bc = law_of_cosines_angle(self.s1, p, self.s2, g)?;
        let sign = side.sign();
        Ok([
            Point::center(g),
            frame_point(self.s1, sign * (at_a_cd + at_a_bc), g)?,
            frame_point(p, sign * at_a_cd, g)?,
            frame_point(self.k, 0.0, g)?,
        ])
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > GOLDEN_WIDTH {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if c >= d {
            break;
        }
    }
    0.5 * (a + b)
}

/// Maximizes the area over the feasible diagonals.
///
/// A coarse scan picks the bracket around the best sample, golden-section
/// search narrows it, and the opposite-angle gap is then driven to zero by
/// bisection near the golden-section point. The area is flat to second
/// order at the maximum, so the gap pins the diagonal far more sharply than
/// area comparisons can; the refined point is kept only if its area is not
/// worse.
pub fn solve_flex(fp: &FlexProblem) -> Result<FlexSolution> {
    let (lo, hi) = fp.feasible_interval();
    let area = |p: f64| fp.area(p).unwrap_or(f64::NEG_INFINITY);
    let step = (hi - lo) / COARSE_SCAN_POINTS as f64;
    let samples: Vec<f64> = (0..COARSE_SCAN_POINTS)
        .map(|j| lo + (j as f64 + 0.5) * step)
        .collect();
    let best = samples
        .iter()
        .enumerate()
        .max_by(|x, y| area(*x.1).total_cmp(&area(*y.1)))
        .map(|(j, _)| j)
        .ok_or(GeomError::InfeasibleFlex)?;
    let left = if best == 0 { lo } else { samples[best - 1] };
    let right = if best + 1 == COARSE_SCAN_POINTS {
        hi
    } else {
        samples[best + 1]
    };
    let mut p = golden_max(area, left, right);
    let mut best_area = area(p);

    if let Some(root) = refine_gap_root(fp, p, (hi - lo) * 1e-6) {
        let a = area(root);
        if a >= best_area - 1e-15 * best_area.abs().max(1.0) {
            p = root;
            best_area = a.max(best_area);
        }
    }
    if !best_area.is_finite() {
        return Err(GeomError::InfeasibleFlex);
    }
    Ok(FlexSolution {
        diagonal: p,
        area: best_area,
    })
}

/// Bisection on the gap inside `[p - w, p + w]` (clipped to the feasible
/// interval), if the gap changes sign there.
fn refine_gap_root(fp: &FlexProblem, p: f64, w: f64) -> Option<f64> {
    let (lo, hi) = fp.feasible_interval();
    let margin = (hi - lo) * 1e-12;
    let mut a = (p - w).max(lo + margin);
    let mut b = (p + w).min(hi - margin);
    let mut ga = fp.gap(a).ok()?;
    let gb = fp.gap(b).ok()?;
    if ga == 0.0 {
        return Some(a);
    }
    if gb == 0.0 {
        return Some(b);
    }
    if ga.signum() == gb.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let gm = fp.gap(mid).ok()?;
        if gm == 0.0 {
            return Some(mid);
        }
        if gm.signum() == ga.signum() {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

/// Angular spread between the fourth vertex and the spherical circle through
/// the first three: zero iff the four points are concyclic.
pub fn spherical_concyclicity_residual(points: &[Point; 4]) -> Result<f64> {
    let v = points
        .iter()
        .map(|p| match p {
            Point::Spherical(s) => Ok(*s.as_vector()),
            other => Err(GeomError::GeometryMismatch(
                GeometryKind::Spherical,
                other.geometry(),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    let normal = (v[1] - v[0]).cross(&(v[2] - v[0]));
    if normal.norm() <= f64::EPSILON {
        return Err(GeomError::Degenerate("collinear spherical points"));
    }
    let mut center = normal.normalize();
    if center.dot(&v[0]) < 0.0 {
        center = -center;
    }
    let radius = |x: &nalgebra::Vector3<f64>| center.cross(x).norm().atan2(center.dot(x));
    Ok((radius(&v[3]) - radius(&v[0])).abs())
}
