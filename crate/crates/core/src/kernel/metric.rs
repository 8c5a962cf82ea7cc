use num_complex::Complex64;

use super::point::{HPoint, Point};
use crate::error::{GeomError, Result};

/// Geodesic distance between two points of the same geometry.
///
/// In the disk, `sinh(d/2) = |p - q| / sqrt((1 - |p|^2)(1 - |q|^2))`; on the
/// sphere, the central angle between the unit vectors.
pub fn distance(p: &Point, q: &Point) -> Result<f64> {
    p.same_geometry(q)?;
    Ok(match (p, q) {
        (Point::Hyperbolic(p), Point::Hyperbolic(q)) => hyperbolic_distance(p, q),
        (Point::Spherical(p), Point::Spherical(q)) => {
            let (u, v) = (p.as_vector(), q.as_vector());
            u.cross(v).norm().atan2(u.dot(v))
        }
        (Point::Euclidean(p), Point::Euclidean(q)) => (p.x - q.x).hypot(p.y - q.y),
        _ => unreachable!(),
    })
}

fn hyperbolic_distance(p: &HPoint, q: &HPoint) -> f64 {
    let chord = (p.as_complex() - q.as_complex()).norm();
    if chord == 0.0 {
        return 0.0;
    }
    2.0 * (chord / (p.conformal_gap() * q.conformal_gap()).sqrt()).asinh()
}

/// Disk automorphism sending `v` to the origin.
pub(crate) fn mobius_to_origin(v: Complex64, z: Complex64) -> Complex64 {
    (z - v) / (Complex64::new(1.0, 0.0) - v.conj() * z)
}

/// Interior angle at `v` between the geodesic rays toward `p` and `q`.
pub fn angle_at(v: &Point, p: &Point, q: &Point) -> Result<f64> {
    v.same_geometry(p)?;
    v.same_geometry(q)?;
    match (v, p, q) {
        (Point::Hyperbolic(v), Point::Hyperbolic(p), Point::Hyperbolic(q)) => {
            // The model is conformal, so move v to the origin where geodesics
            // through it are diameters and measure the Euclidean angle.
            let c = v.as_complex();
            let a = mobius_to_origin(c, p.as_complex());
            let b = mobius_to_origin(c, q.as_complex());
            planar_angle(a, b)
        }
        (Point::Spherical(v), Point::Spherical(p), Point::Spherical(q)) => {
            let v = v.as_vector();
            let n1 = v.cross(p.as_vector());
            let n2 = v.cross(q.as_vector());
            if n1.norm() <= f64::EPSILON || n2.norm() <= f64::EPSILON {
                return Err(GeomError::DegenerateAngle);
            }
            Ok(n1.cross(&n2).dot(v).abs().atan2(n1.dot(&n2)))
        }
        (Point::Euclidean(v), Point::Euclidean(p), Point::Euclidean(q)) => {
            let c = v.as_complex();
            planar_angle(p.as_complex() - c, q.as_complex() - c)
        }
        _ => unreachable!(),
    }
}

fn planar_angle(a: Complex64, b: Complex64) -> Result<f64> {
    if a.norm() <= f64::EPSILON || b.norm() <= f64::EPSILON {
        return Err(GeomError::DegenerateAngle);
    }
    let cross = a.re * b.im - a.im * b.re;
    let dot = a.re * b.re + a.im * b.im;
    Ok(cross.abs().atan2(dot))
}
