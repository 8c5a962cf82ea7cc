//! Curves through three points of the Poincaré disk.
//!
//! Every circle, horocycle, hypercycle and geodesic of the hyperbolic plane
//! appears in the disk as a Euclidean circle or straight chord. The kind is
//! read off from how that Euclidean curve meets the unit circle.

use serde::Serialize;

use super::point::{Point, ToleranceConfig};
use crate::error::{GeomError, Result};

/// Euclidean circumradius above which three points are treated as lying on
/// a straight chord.
pub const CHORD_RADIUS_LIMIT: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    Circle,
    Horocycle,
    Hypercycle,
    Geodesic,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CurveShape {
    Circle {
        center: [f64; 2],
        radius: f64,
    },
    /// Straight chord through `point` with unit `normal`.
    Chord {
        point: [f64; 2],
        normal: [f64; 2],
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircumCurve {
    pub kind: CurveKind,
    pub shape: CurveShape,
}

impl CircumCurve {
    /// Euclidean center; for a chord, the foot of the perpendicular from the
    /// disk origin.
    pub fn euclidean_center(&self) -> [f64; 2] {
        match self.shape {
            CurveShape::Circle { center, .. } => center,
            CurveShape::Chord { point, normal } => {
                let h = point[0] * normal[0] + point[1] * normal[1];
                [h * normal[0], h * normal[1]]
            }
        }
    }

    /// Infinite for a straight chord.
    pub fn euclidean_radius(&self) -> f64 {
        match self.shape {
            CurveShape::Circle { radius, .. } => radius,
            CurveShape::Chord { .. } => f64::INFINITY,
        }
    }

    /// Euclidean distance from the disk coordinates of `p` to the curve.
    pub fn euclidean_offset(&self, p: &Point) -> f64 {
        let c = p.coords();
        let (x, y) = (c[0], c[1]);
        match self.shape {
            CurveShape::Circle { center, radius } => {
                ((x - center[0]).hypot(y - center[1]) - radius).abs()
            }
            CurveShape::Chord { point, normal } => {
                ((x - point[0]) * normal[0] + (y - point[1]) * normal[1]).abs()
            }
        }
    }
}

fn disk_coords(p: &Point) -> Result<[f64; 2]> {
    match p {
        Point::Hyperbolic(h) => Ok([h.x(), h.y()]),
        other => Err(GeomError::GeometryMismatch(
            super::GeometryKind::Hyperbolic,
            other.geometry(),
        )),
    }
}

pub fn circumcurve_through(p1: &Point, p2: &Point, p3: &Point) -> Result<CircumCurve> {
    circumcurve_through_with(p1, p2, p3, &ToleranceConfig::default())
}

pub fn circumcurve_through_with(
    p1: &Point,
    p2: &Point,
    p3: &Point,
    tol: &ToleranceConfig,
) -> Result<CircumCurve> {
    let pts = [disk_coords(p1)?, disk_coords(p2)?, disk_coords(p3)?];
    let dist = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).hypot(a[1] - b[1]);
    if dist(pts[0], pts[1]) == 0.0 || dist(pts[1], pts[2]) == 0.0 || dist(pts[0], pts[2]) == 0.0 {
        return Err(GeomError::Degenerate("coincident points"));
    }
    let eps = tol.eps_predicate();

    let [a, b, c] = pts;
    let (bx, by) = (b[0] - a[0], b[1] - a[1]);
    let (cx, cy) = (c[0] - a[0], c[1] - a[1]);
    let det = 2.0 * (bx * cy - by * cx);
    let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
    let ux = (cy * b2 - by * c2) / det;
    let uy = (bx * c2 - cx * b2) / det;
    let radius = ux.hypot(uy);

    if det == 0.0 || !radius.is_finite() || radius > CHORD_RADIUS_LIMIT {
        // Chord through the two farthest-apart points.
        let (i, j) = [(0, 1), (1, 2), (0, 2)]
            .into_iter()
            .max_by(|&(i, j), &(k, l)| dist(pts[i], pts[j]).total_cmp(&dist(pts[k], pts[l])))
            .unwrap();
        let len = dist(pts[i], pts[j]);
        let normal = [
            -(pts[j][1] - pts[i][1]) / len,
            (pts[j][0] - pts[i][0]) / len,
        ];
        let offset = (pts[i][0] * normal[0] + pts[i][1] * normal[1]).abs();
        let kind = if offset < eps {
            CurveKind::Geodesic
        } else {
            CurveKind::Hypercycle
        };
        return Ok(CircumCurve {
            kind,
            shape: CurveShape::Chord {
                point: pts[i],
                normal,
            },
        });
    }

    let center = [a[0] + ux, a[1] + uy];
    let center_dist = center[0].hypot(center[1]);
    let reach = center_dist + radius;
    let kind = if (reach - 1.0).abs() < eps {
        CurveKind::Horocycle
    } else if reach < 1.0 {
        CurveKind::Circle
    } else {
        // Cosine of the angle between the radii at an intersection point;
        // zero when the curve meets the boundary orthogonally.
        let cos_meet = (1.0 + radius * radius - center_dist * center_dist) / (2.0 * radius);
        if cos_meet.abs() < eps {
            CurveKind::Geodesic
        } else {
            CurveKind::Hypercycle
        }
    };
    Ok(CircumCurve {
        kind,
        shape: CurveShape::Circle { center, radius },
    })
}

/// Whether the disk coordinates of `p` lie within `tol` of the curve.
pub fn lies_on(curve: &CircumCurve, p: &Point, tol: f64) -> bool {
    curve.euclidean_offset(p) <= tol
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::kernel::{polar_point, GeometryKind};

    fn h(x: f64, y: f64) -> Point {
        Point::hyperbolic(x, y).unwrap()
    }

    #[test]
    fn concentric_circle() {
        let pts: Vec<Point> = (0..3)
            .map(|k| polar_point(0.4, 2.0 * PI * k as f64 / 3.0, GeometryKind::Hyperbolic).unwrap())
            .collect();
        let c = circumcurve_through(&pts[0], &pts[1], &pts[2]).unwrap();
        assert_eq!(c.kind, CurveKind::Circle);
        let center = c.euclidean_center();
        assert!(center[0].abs() < 1e-12 && center[1].abs() < 1e-12);
        assert!(c.euclidean_radius() < 1.0);
        for p in &pts {
            assert!(lies_on(&c, p, 1e-12));
        }
        assert!(!lies_on(&c, &Point::center(GeometryKind::Hyperbolic), 1e-6));
    }

    #[test]
    fn diameter_is_geodesic() {
        let c = circumcurve_through(&h(-0.5, 0.0), &h(0.0, 0.0), &h(0.5, 0.0)).unwrap();
        assert_eq!(c.kind, CurveKind::Geodesic);
        assert!(c.euclidean_radius().is_infinite());
    }

    #[test]
    fn off_center_chord_is_hypercycle() {
        let c = circumcurve_through(&h(-0.5, 0.2), &h(0.0, 0.2), &h(0.5, 0.2)).unwrap();
        assert_eq!(c.kind, CurveKind::Hypercycle);
        assert!((c.euclidean_center()[1] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn tangent_circle_is_horocycle() {
        let on = |t: f64| h(0.5 + 0.5 * t.cos(), 0.5 * t.sin());
        let c = circumcurve_through(&on(1.0), &on(PI), &on(-2.0)).unwrap();
        assert_eq!(c.kind, CurveKind::Horocycle);
    }

    #[test]
    fn orthogonal_arc_is_geodesic() {
        // Circle centered at (2, 0) with radius sqrt(3) meets |z| = 1 at right angles.
        let r = 3f64.sqrt();
        let on = |t: f64| h(2.0 + r * t.cos(), r * t.sin());
        let c = circumcurve_through(&on(PI - 0.3), &on(PI), &on(PI + 0.2)).unwrap();
        assert_eq!(c.kind, CurveKind::Geodesic);
        // Same center, smaller radius: crosses the boundary obliquely.
        let r = 1.5;
        let on = |t: f64| h(2.0 + r * t.cos(), r * t.sin());
        let c = circumcurve_through(&on(PI - 0.3), &on(PI), &on(PI + 0.2)).unwrap();
        assert_eq!(c.kind, CurveKind::Hypercycle);
    }

    #[test]
    fn coincident_points_rejected() {
        let p = h(0.1, 0.1);
        assert!(circumcurve_through(&p, &p, &h(0.2, 0.0)).is_err());
        let s = Point::center(GeometryKind::Spherical);
        assert!(circumcurve_through(&s, &p, &h(0.2, 0.0)).is_err());
    }
}
