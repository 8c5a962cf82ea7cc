use std::fmt;

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Default predicate band. Constructors reject points this close to the
/// disk boundary or the hemisphere's bounding great circle.
pub const DEFAULT_EPS_PREDICATE: f64 = 1e-10;
pub const DEFAULT_EPS_CONVERGE: f64 = 1e-8;

/// Tolerance on |v| - 1 accepted when parsing spherical coordinates.
const UNIT_NORM_SLACK: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    Hyperbolic,
    Spherical,
    /// Flat baseline, used for small-polygon limit checks.
    Euclidean,
}

impl GeometryKind {
    pub const ALL: [GeometryKind; 3] = [Self::Hyperbolic, Self::Spherical, Self::Euclidean];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Hyperbolic => "hyperbolic",
            Self::Spherical => "spherical",
            Self::Euclidean => "euclidean",
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GeometryKind {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hyperbolic" => Ok(Self::Hyperbolic),
            "spherical" => Ok(Self::Spherical),
            "euclidean" => Ok(Self::Euclidean),
            other => Err(GeomError::InvalidCoordinates(format!(
                "unknown geometry {other:?}"
            ))),
        }
    }
}

/// Numerical bands used by predicates and convergence tests.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    eps_predicate: f64,
    eps_converge: f64,
}

impl ToleranceConfig {
    /// Requires `0 < eps_predicate < eps_converge < 1`.
    pub fn new(eps_predicate: f64, eps_converge: f64) -> Result<Self> {
        if !(eps_predicate > 0.0 && eps_predicate < eps_converge && eps_converge < 1.0) {
            return Err(GeomError::InvalidTolerance(format!(
                "need 0 < eps_predicate ({eps_predicate}) < eps_converge ({eps_converge}) < 1"
            )));
        }
        Ok(Self {
            eps_predicate,
            eps_converge,
        })
    }

    pub fn eps_predicate(&self) -> f64 {
        self.eps_predicate
    }

    pub fn eps_converge(&self) -> f64 {
        self.eps_converge
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eps_predicate: DEFAULT_EPS_PREDICATE,
            eps_converge: DEFAULT_EPS_CONVERGE,
        }
    }
}

/// A point of the Poincaré disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint {
    z: Complex64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint {
        z: Complex64::new(0.0, 0.0),
    };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        let z = Complex64::new(x, y);
        if !(x.is_finite() && y.is_finite()) || z.norm() >= 1.0 - DEFAULT_EPS_PREDICATE {
            return Err(GeomError::OutsideDisk { x, y });
        }
        Ok(Self { z })
    }

    /// Images of disk isometries; the caller guarantees |z| < 1.
    pub(crate) fn from_complex(z: Complex64) -> Self {
        Self { z }
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }

    pub fn as_complex(&self) -> Complex64 {
        self.z
    }

    /// `1 - |z|^2`, evaluated as a product to keep digits near the boundary.
    pub(crate) fn conformal_gap(&self) -> f64 {
        let r = self.z.norm();
        (1.0 - r) * (1.0 + r)
    }
}

/// A unit vector in the open upper hemisphere `z > 0`.
///
/// Points produced inside a canonical frame (see [`super::Isometry`]) are
/// unit vectors but may sit outside the hemisphere; the hemisphere check is
/// applied by [`SPoint::new`] and by [`crate::Polygon`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SPoint {
    v: Vector3<f64>,
}

impl SPoint {
    pub const NORTH_POLE: SPoint = SPoint {
        v: Vector3::new(0.0, 0.0, 1.0),
    };

    /// Renormalizes `(x, y, z)` and enforces the hemisphere constraint.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vector3::new(x, y, z);
        let norm = v.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(GeomError::InvalidCoordinates(format!(
                "spherical point ({x}, {y}, {z}) has no direction"
            )));
        }
        let p = Self { v: v / norm };
        p.check_hemisphere()?;
        Ok(p)
    }

    /// Like [`SPoint::new`], but rejects vectors that are not already unit
    /// length (to within 1e-6). Used when reading coordinates from files.
    pub fn from_unit(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = Vector3::new(x, y, z).norm();
        if (norm - 1.0).abs() > UNIT_NORM_SLACK {
            return Err(GeomError::InvalidCoordinates(format!(
                "spherical point ({x}, {y}, {z}) has norm {norm}, expected 1"
            )));
        }
        Self::new(x, y, z)
    }

    pub(crate) fn from_vector(v: Vector3<f64>) -> Self {
        Self { v: v.normalize() }
    }

    pub(crate) fn check_hemisphere(&self) -> Result<()> {
        if self.v.z > DEFAULT_EPS_PREDICATE {
            Ok(())
        } else {
            Err(GeomError::HemisphereViolation { z: self.v.z })
        }
    }

    pub fn x(&self) -> f64 {
        self.v.x
    }

    pub fn y(&self) -> f64 {
        self.v.y
    }

    pub fn z(&self) -> f64 {
        self.v.z
    }

    pub fn as_vector(&self) -> &Vector3<f64> {
        &self.v
    }
}

/// Planar point of the flat baseline geometry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EPoint {
    pub x: f64,
    pub y: f64,
}

impl EPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(GeomError::InvalidCoordinates(format!("({x}, {y})")));
        }
        Ok(Self { x, y })
    }

    pub(crate) fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    Hyperbolic(HPoint),
    Spherical(SPoint),
    Euclidean(EPoint),
}

impl Point {
    pub fn hyperbolic(x: f64, y: f64) -> Result<Self> {
        HPoint::new(x, y).map(Point::Hyperbolic)
    }

    pub fn spherical(x: f64, y: f64, z: f64) -> Result<Self> {
        SPoint::new(x, y, z).map(Point::Spherical)
    }

    pub fn euclidean(x: f64, y: f64) -> Result<Self> {
        EPoint::new(x, y).map(Point::Euclidean)
    }

    /// Disk origin, north pole, or planar origin.
    pub fn center(g: GeometryKind) -> Self {
        match g {
            GeometryKind::Hyperbolic => Point::Hyperbolic(HPoint::ORIGIN),
            GeometryKind::Spherical => Point::Spherical(SPoint::NORTH_POLE),
            GeometryKind::Euclidean => Point::Euclidean(EPoint { x: 0.0, y: 0.0 }),
        }
    }

    pub fn geometry(&self) -> GeometryKind {
        match self {
            Point::Hyperbolic(_) => GeometryKind::Hyperbolic,
            Point::Spherical(_) => GeometryKind::Spherical,
            Point::Euclidean(_) => GeometryKind::Euclidean,
        }
    }

    /// Serialized coordinates: `[x, y]` or `[x, y, z]`.
    pub fn coords(&self) -> Vec<f64> {
        match self {
            Point::Hyperbolic(p) => vec![p.x(), p.y()],
            Point::Spherical(p) => vec![p.x(), p.y(), p.z()],
            Point::Euclidean(p) => vec![p.x, p.y],
        }
    }

    pub fn from_coords(g: GeometryKind, coords: &[f64]) -> Result<Self> {
        match (g, coords) {
            (GeometryKind::Hyperbolic, &[x, y]) => Point::hyperbolic(x, y),
            (GeometryKind::Spherical, &[x, y, z]) => {
                SPoint::from_unit(x, y, z).map(Point::Spherical)
            }
            (GeometryKind::Euclidean, &[x, y]) => Point::euclidean(x, y),
            _ => Err(GeomError::InvalidCoordinates(format!(
                "{g} point expects {} coordinates, got {}",
                if g == GeometryKind::Spherical { 3 } else { 2 },
                coords.len()
            ))),
        }
    }

    /// Signed offset from the θ = 0 reference geodesic of the canonical
    /// frame: disk `y`, sphere `y`, plane `y`.
    pub fn frame_side(&self) -> f64 {
        match self {
            Point::Hyperbolic(p) => p.y(),
            Point::Spherical(p) => p.y(),
            Point::Euclidean(p) => p.y,
        }
    }

    pub(crate) fn same_geometry(&self, other: &Point) -> Result<()> {
        if self.geometry() == other.geometry() {
            Ok(())
        } else {
            Err(GeomError::GeometryMismatch(
                self.geometry(),
                other.geometry(),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_rejects_boundary() {
        assert!(HPoint::new(0.999, 0.0).is_ok());
        assert!(matches!(
            HPoint::new(1.0, 0.0),
            Err(GeomError::OutsideDisk { .. })
        ));
        assert!(HPoint::new(0.6, 0.8).is_err());
        assert!(HPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn sphere_renormalizes_and_checks_hemisphere() {
        let p = SPoint::new(0.0, 3.0, 4.0).unwrap();
        assert!((p.as_vector().norm() - 1.0).abs() < 1e-12);
        assert!((p.z() - 0.8).abs() < 1e-15);
        assert!(matches!(
            SPoint::new(1.0, 0.0, 0.0),
            Err(GeomError::HemisphereViolation { .. })
        ));
        assert!(SPoint::new(0.0, 0.0, -1.0).is_err());
        assert!(SPoint::new(0.0, 0.0, 0.0).is_err());
        assert!(SPoint::from_unit(0.0, 0.0, 2.0).is_err());
    }

    #[test]
    fn tolerance_ordering() {
        assert!(ToleranceConfig::new(1e-10, 1e-8).is_ok());
        assert!(ToleranceConfig::new(1e-8, 1e-10).is_err());
        assert!(ToleranceConfig::new(0.0, 1e-8).is_err());
        assert!(ToleranceConfig::new(1e-3, 1.0).is_err());
    }

    #[test]
    fn coords_round_trip() {
        let p = Point::from_coords(GeometryKind::Hyperbolic, &[0.25, -0.5]).unwrap();
        assert_eq!(p.coords(), vec![0.25, -0.5]);
        assert!(Point::from_coords(GeometryKind::Spherical, &[0.1, 0.2]).is_err());
        assert!(Point::from_coords(GeometryKind::Euclidean, &[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn geometry_names_are_lowercase() {
        for g in GeometryKind::ALL {
            let json = serde_json::to_string(&g).unwrap();
            assert_eq!(json, format!("\"{g}\""));
            assert_eq!(g.as_str().parse::<GeometryKind>().unwrap(), g);
        }
    }
}
