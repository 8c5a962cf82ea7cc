use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Vector3;

use super::point::{GeometryKind, Point, SPoint};
use crate::error::{GeomError, Result};

/// Which half of the canonical frame a constructed point lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Positive,
    Negative,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Positive => 1.0,
            Side::Negative => -1.0,
        }
    }

    pub fn of(offset: f64) -> Self {
        if offset < 0.0 {
            Side::Negative
        } else {
            Side::Positive
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Side::Positive => Side::Negative,
            Side::Negative => Side::Positive,
        }
    }
}

/// Checks the strict triangle inequality (and, on the sphere, that the
/// triangle fits in an open hemisphere).
pub(crate) fn check_sides(a: f64, b: f64, c: f64, g: GeometryKind) -> Result<()> {
    let finite = a.is_finite() && b.is_finite() && c.is_finite();
    let strict = a < b + c && b < a + c && c < a + b && a > 0.0 && b > 0.0 && c > 0.0;
    let spherical_ok =
        g != GeometryKind::Spherical || (a + b + c < 2.0 * PI && a < PI && b < PI && c < PI);
    if finite && strict && spherical_ok {
        Ok(())
    } else {
        Err(GeomError::InvalidSides {
            a,
            b,
            c,
            geometry: g,
        })
    }
}

/// The geometry's "sine-like" function used in half-angle formulas.
fn half_angle_kernel(x: f64, g: GeometryKind) -> f64 {
    match g {
        GeometryKind::Hyperbolic => x.sinh(),
        GeometryKind::Spherical => x.sin(),
        GeometryKind::Euclidean => x,
    }
}

/// Angle opposite side `c` in the triangle with sides `a`, `b`, `c`.
///
/// Evaluated through the half-angle tangent form of the law of cosines,
/// `tan(C/2) = sqrt(k(s-a) k(s-b) / (k(s) k(s-c)))` with `k` = sinh, sin or
/// identity, which stays well conditioned for thin and obtuse triangles.
pub fn law_of_cosines_angle(a: f64, b: f64, c: f64, g: GeometryKind) -> Result<f64> {
    check_sides(a, b, c, g)?;
    let s = 0.5 * (a + b + c);
    let num = half_angle_kernel(s - a, g) * half_angle_kernel(s - b, g);
    let den = half_angle_kernel(s, g) * half_angle_kernel(s - c, g);
    Ok(2.0 * num.max(0.0).sqrt().atan2(den.max(0.0).sqrt()))
}

/// Point at distance `r` from the canonical center, in direction `theta`.
pub fn polar_point(r: f64, theta: f64, g: GeometryKind) -> Result<Point> {
    if g == GeometryKind::Spherical && r >= FRAC_PI_2 {
        return Err(GeomError::HemisphereViolation { z: r.cos() });
    }
    frame_point(r, theta, g)
}

/// [`polar_point`] without the hemisphere check, for constructions inside a
/// spherical canonical frame that are mapped back afterwards.
pub(crate) fn frame_point(r: f64, theta: f64, g: GeometryKind) -> Result<Point> {
    if r < 0.0 || !r.is_finite() || !theta.is_finite() {
        return Err(GeomError::InvalidCoordinates(format!(
            "polar point needs finite r >= 0, got r = {r}, theta = {theta}"
        )));
    }
    let (sin_t, cos_t) = theta.sin_cos();
    match g {
        GeometryKind::Hyperbolic => {
            let rho = (0.5 * r).tanh();
            Point::hyperbolic(rho * cos_t, rho * sin_t)
        }
        GeometryKind::Spherical => {
            let (sin_r, cos_r) = r.sin_cos();
            Ok(Point::Spherical(SPoint::from_vector(Vector3::new(
                sin_r * cos_t,
                sin_r * sin_t,
                cos_r,
            ))))
        }
        GeometryKind::Euclidean => Point::euclidean(r * cos_t, r * sin_t),
    }
}

/// In the canonical frame (center, plus an anchor at distance `d` on the
/// θ = 0 ray), the point at distance `r1` from the center and `r2` from the
/// anchor, on the requested side.
///
/// Spherical results are frame points and may lie outside the hemisphere.
pub fn third_vertex(d: f64, r1: f64, r2: f64, side: Side, g: GeometryKind) -> Result<Point> {
    let apex = law_of_cosines_angle(r1, d, r2, g)?;
    frame_point(r1, side.sign() * apex, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::distance;

    #[test]
    fn pythagorean_cases() {
        let c = (1f64.cosh().powi(2)).acosh();
        let h = law_of_cosines_angle(1.0, 1.0, c, GeometryKind::Hyperbolic).unwrap();
        assert!((h - FRAC_PI_2).abs() < 1e-12, "{h}");
        let s =
            law_of_cosines_angle(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, GeometryKind::Spherical).unwrap();
        assert!((s - FRAC_PI_2).abs() < 1e-14);
        let e = law_of_cosines_angle(3.0, 4.0, 5.0, GeometryKind::Euclidean).unwrap();
        assert!((e - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn matches_cosine_rule() {
        let (a, b, c) = (0.7, 1.1, 1.3);
        let h = law_of_cosines_angle(a, b, c, GeometryKind::Hyperbolic).unwrap();
        let cos_h = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
        assert!((h.cos() - cos_h).abs() < 1e-13);
        let s = law_of_cosines_angle(a, b, c, GeometryKind::Spherical).unwrap();
        let cos_s = (c.cos() - a.cos() * b.cos()) / (a.sin() * b.sin());
        assert!((s.cos() - cos_s).abs() < 1e-13);
    }

    #[test]
    fn rejects_invalid_sides() {
        for g in GeometryKind::ALL {
            assert!(law_of_cosines_angle(1.0, 1.0, 2.0, g).is_err());
            assert!(law_of_cosines_angle(1.0, 1.0, 0.0, g).is_err());
            assert!(law_of_cosines_angle(f64::NAN, 1.0, 1.0, g).is_err());
        }
        assert!(law_of_cosines_angle(2.5, 2.5, 2.5, GeometryKind::Spherical).is_err());
    }

    #[test]
    fn polar_points() {
        let p = polar_point(3f64.ln(), 0.0, GeometryKind::Hyperbolic).unwrap();
        assert!((p.coords()[0] - 0.5).abs() < 1e-15 && p.coords()[1] == 0.0);
        for g in GeometryKind::ALL {
            assert_eq!(polar_point(0.0, 1.0, g).unwrap(), Point::center(g));
            let q = polar_point(0.7, 2.0, g).unwrap();
            let d = distance(&Point::center(g), &q).unwrap();
            assert!((d - 0.7).abs() < 1e-10);
        }
        let s = polar_point(0.3, 0.0, GeometryKind::Spherical).unwrap();
        let expect = [0.3f64.sin(), 0.0, 0.3f64.cos()];
        for (x, e) in s.coords().iter().zip(expect) {
            assert!((x - e).abs() < 1e-15);
        }
        assert!(matches!(
            polar_point(FRAC_PI_2, 0.0, GeometryKind::Spherical),
            Err(GeomError::HemisphereViolation { .. })
        ));
    }

    #[test]
    fn third_vertex_distances() {
        let g = GeometryKind::Hyperbolic;
        let anchor = polar_point(1.0, 0.0, g).unwrap();
        let v = third_vertex(1.0, 0.75, 0.75, Side::Positive, g).unwrap();
        assert!(v.frame_side() > 0.0);
        assert!((distance(&Point::center(g), &v).unwrap() - 0.75).abs() < 1e-10);
        assert!((distance(&anchor, &v).unwrap() - 0.75).abs() < 1e-10);

        for g in GeometryKind::ALL {
            let anchor = polar_point(0.8, 0.0, g).unwrap();
            let v = third_vertex(0.8, 0.6, 0.6, Side::Negative, g).unwrap();
            assert!(v.frame_side() < 0.0);
            let d0 = distance(&Point::center(g), &v).unwrap();
            let d1 = distance(&anchor, &v).unwrap();
            assert!((d0 - d1).abs() < 1e-10);
            assert!(third_vertex(1.0, 0.4, 0.6, Side::Positive, g).is_err());
        }
    }
}
