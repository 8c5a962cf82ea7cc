use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use super::point::{EPoint, HPoint, Point, SPoint};
use crate::error::{GeomError, Result};

/// Orientation-preserving isometry used to move configurations into and out
/// of the canonical frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Isometry {
    /// `z -> rot * (z - a) / (1 - conj(a) z)`, `|rot| = 1`, `|a| < 1`.
    Mobius { a: Complex64, rot: Complex64 },
    /// Rotation of R^3.
    Rotation(Matrix3<f64>),
    /// `z -> rot * (z - shift)`, `|rot| = 1`.
    Rigid { shift: Complex64, rot: Complex64 },
}

impl Isometry {
    pub fn apply(&self, p: &Point) -> Result<Point> {
        match (self, p) {
            (Isometry::Mobius { a, rot }, Point::Hyperbolic(h)) => {
                let z = h.as_complex();
                let w = rot * (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
                Ok(Point::Hyperbolic(HPoint::from_complex(w)))
            }
            (Isometry::Rotation(m), Point::Spherical(s)) => {
                Ok(Point::Spherical(SPoint::from_vector(m * s.as_vector())))
            }
            (Isometry::Rigid { shift, rot }, Point::Euclidean(e)) => {
                let w = rot * (e.as_complex() - shift);
                Ok(Point::Euclidean(EPoint { x: w.re, y: w.im }))
            }
            _ => Err(GeomError::GeometryMismatch(self.geometry(), p.geometry())),
        }
    }

    pub fn inverse(&self) -> Isometry {
        match *self {
            Isometry::Mobius { a, rot } => Isometry::Mobius {
                a: -rot * a,
                rot: rot.conj(),
            },
            Isometry::Rotation(m) => Isometry::Rotation(m.transpose()),
            Isometry::Rigid { shift, rot } => Isometry::Rigid {
                shift: -rot * shift,
                rot: rot.conj(),
            },
        }
    }

    pub fn geometry(&self) -> super::GeometryKind {
        use super::GeometryKind::*;
        match self {
            Isometry::Mobius { .. } => Hyperbolic,
            Isometry::Rotation(_) => Spherical,
            Isometry::Rigid { .. } => Euclidean,
        }
    }
}

/// Isometry taking `u` to the canonical center and `w` onto the θ = 0 ray.
pub fn to_canonical(u: &Point, w: &Point) -> Result<Isometry> {
    u.same_geometry(w)?;
    match (u, w) {
        (Point::Hyperbolic(u), Point::Hyperbolic(w)) => {
            let a = u.as_complex();
            let t = super::metric::mobius_to_origin(a, w.as_complex());
            if t.norm() <= f64::EPSILON {
                return Err(GeomError::DegenerateFrame);
            }
            Ok(Isometry::Mobius {
                a,
                rot: t.conj() / t.norm(),
            })
        }
        (Point::Spherical(u), Point::Spherical(w)) => {
            let e3: Vector3<f64> = *u.as_vector();
            let tangent = w.as_vector() - e3 * e3.dot(w.as_vector());
            if tangent.norm() <= f64::EPSILON {
                return Err(GeomError::DegenerateFrame);
            }
            let e1 = tangent.normalize();
            let e2 = e3.cross(&e1);
            Ok(Isometry::Rotation(Matrix3::from_rows(&[
                e1.transpose(),
                e2.transpose(),
                e3.transpose(),
            ])))
        }
        (Point::Euclidean(u), Point::Euclidean(w)) => {
            let shift = u.as_complex();
            let t = w.as_complex() - shift;
            if t.norm() <= f64::EPSILON {
                return Err(GeomError::DegenerateFrame);
            }
            Ok(Isometry::Rigid {
                shift,
                rot: t.conj() / t.norm(),
            })
        }
        _ => unreachable!(),
    }
}
