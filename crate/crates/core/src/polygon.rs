//! Geodesic polygons: perimeter, interior angles, convexity, fan area and
//! the opposite-angle gap of quadrilaterals.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::kernel::{
    angle_at, distance, polar_point, to_canonical, GeometryKind, Isometry, Point,
    DEFAULT_EPS_PREDICATE,
};
use crate::triangle::area_from_vertices;

/// Rejection budget of [`sample_convex_polygon`].
pub const SAMPLE_TRIES: usize = 1000;

/// Ordered cycle of at least three vertices in one geometry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonFile", into = "PolygonFile")]
pub struct Polygon {
    geometry: GeometryKind,
    vertices: Vec<Point>,
}

/// On-disk form: `{"geometry": "...", "vertices": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub geometry: GeometryKind,
    pub vertices: Vec<Vec<f64>>,
}

impl TryFrom<PolygonFile> for Polygon {
    type Error = GeomError;

    fn try_from(file: PolygonFile) -> Result<Self> {
        let vertices = file
            .vertices
            .iter()
            .map(|c| Point::from_coords(file.geometry, c))
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices)
    }
}

impl From<Polygon> for PolygonFile {
    fn from(p: Polygon) -> Self {
        PolygonFile {
            geometry: p.geometry,
            vertices: p.vertices.iter().map(Point::coords).collect(),
        }
    }
}

/// Interior angles of a quadrilateral in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadAngles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl QuadAngles {
    /// `(A + C) - (B + D)`.
    pub fn gap(&self) -> f64 {
        (self.a + self.c) - (self.b + self.d)
    }
}

pub(crate) fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::InvalidPolygon(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        let geometry = vertices[0].geometry();
        for (i, v) in vertices.iter().enumerate() {
            if v.geometry() != geometry {
                return Err(GeomError::GeometryMismatch(geometry, v.geometry()));
            }
            if let Point::Spherical(s) = v {
                s.check_hemisphere()?;
            }
            if *v == vertices[(i + 1) % n] {
                return Err(GeomError::InvalidPolygon(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        Ok(Self { geometry, vertices })
    }

    pub fn geometry(&self) -> GeometryKind {
        self.geometry
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex `i`, with indices taken modulo `n`.
    pub fn vertex(&self, i: isize) -> &Point {
        let n = self.len() as isize;
        &self.vertices[i.rem_euclid(n) as usize]
    }

    /// Same cycle starting at vertex `k`.
    pub fn rotated(&self, k: usize) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(k % self.len());
        Polygon {
            geometry: self.geometry,
            vertices,
        }
    }

    pub fn reversed(&self) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Polygon {
            geometry: self.geometry,
            vertices,
        }
    }

    /// Image under an isometry. Spherical images must stay in the hemisphere.
    pub fn mapped(&self, f: &Isometry) -> Result<Polygon> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| f.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices)
    }

    pub(crate) fn with_vertices(&self, vertices: Vec<Point>) -> Result<Polygon> {
        Polygon::new(vertices)
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        let n = self.len() as isize;
        (0..n)
            .map(|i| distance(self.vertex(i), self.vertex(i + 1)).expect("same geometry"))
            .collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    pub fn is_convex(&self) -> bool {
        self.is_convex_with(DEFAULT_EPS_PREDICATE)
    }

    /// Every vertex off edge `(i, i+1)` must lie strictly (beyond `eps`) on
    /// the same side of that edge's geodesic, with the same side for all
    /// edges. The side is read in the canonical frame of the edge, which
    /// amounts to the disk chord test in the hyperbolic case and the
    /// normalized triple product on the sphere.
    pub fn is_convex_with(&self, eps: f64) -> bool {
        let n = self.len() as isize;
        let mut orientation = 0.0;
        for i in 0..n {
            let Ok(frame) = to_canonical(self.vertex(i), self.vertex(i + 1)) else {
                return false;
            };
            for j in 2..n {
                let Ok(img) = frame.apply(self.vertex(i + j)) else {
                    return false;
                };
                let side = img.frame_side();
                if side.abs() <= eps {
                    return false;
                }
                if orientation == 0.0 {
                    orientation = side.signum();
                } else if side.signum() != orientation {
                    return false;
                }
            }
        }
        true
    }

    fn require_convex(&self) -> Result<()> {
        if self.is_convex() {
            Ok(())
        } else {
            Err(GeomError::Nonconvex)
        }
    }

    /// `angle_at(v[i], v[i-1], v[i+1])` for each vertex of a convex polygon.
    pub fn interior_angles(&self) -> Result<Vec<f64>> {
        self.require_convex()?;
        Ok(self.angles_unchecked())
    }

    pub(crate) fn angles_unchecked(&self) -> Vec<f64> {
        let n = self.len() as isize;
        (0..n)
            .map(|i| {
                angle_at(self.vertex(i), self.vertex(i - 1), self.vertex(i + 1))
                    .expect("consecutive vertices are distinct")
            })
            .collect()
    }

    /// Fan triangulation from vertex 0.
    pub fn area_convex(&self) -> Result<f64> {
        self.require_convex()?;
        Ok(self.fan_area())
    }

    pub(crate) fn fan_area(&self) -> f64 {
        let apex = &self.vertices[0];
        self.vertices[1..]
            .windows(2)
            .map(|w| {
                area_from_vertices(apex, &w[0], &w[1])
                    .map(|a| a.value)
                    .unwrap_or(0.0)
            })
            .sum()
    }

    /// Area from the interior angle sum: `(n-2)π - Σ` in the disk and
    /// `Σ - (n-2)π` on the sphere. The plane has no defect, so the shoelace
    /// formula stands in as the independent route.
    pub fn gauss_bonnet_area(&self) -> Result<f64> {
        self.require_convex()?;
        let flat = (self.len() as f64 - 2.0) * PI;
        Ok(match self.geometry {
            GeometryKind::Hyperbolic => flat - self.angles_unchecked().iter().sum::<f64>(),
            GeometryKind::Spherical => self.angles_unchecked().iter().sum::<f64>() - flat,
            GeometryKind::Euclidean => {
                let twice: f64 = (0..self.len() as isize)
                    .map(|i| {
                        let (p, q) = (self.vertex(i).coords(), self.vertex(i + 1).coords());
                        p[0] * q[1] - p[1] * q[0]
                    })
                    .sum();
                0.5 * twice.abs()
            }
        })
    }

    pub fn quad_angles(&self) -> Result<QuadAngles> {
        if self.len() != 4 {
            return Err(GeomError::Arity {
                expected: 4,
                got: self.len(),
            });
        }
        let t = self.interior_angles()?;
        Ok(QuadAngles {
            a: t[0],
            b: t[1],
            c: t[2],
            d: t[3],
        })
    }

    /// `(A + C) - (B + D)` of a convex quadrilateral; zero exactly at the
    /// maximal-area shape for its side lengths.
    pub fn wimmer_gap(&self) -> Result<f64> {
        self.quad_angles().map(|q| q.gap())
    }

    pub fn side_spread(&self) -> f64 {
        spread(&self.side_lengths())
    }

    pub fn angle_spread(&self) -> Result<f64> {
        self.interior_angles().map(|a| spread(&a))
    }

    pub fn is_equilateral(&self, tol: f64) -> bool {
        self.side_spread() < tol
    }

    pub fn is_equiangular(&self, tol: f64) -> bool {
        self.angle_spread().is_ok_and(|s| s < tol)
    }

    pub fn is_regular(&self, tol: f64) -> bool {
        self.is_equilateral(tol) && self.is_equiangular(tol)
    }
}

/// Random convex polygon around the canonical center: sorted directions,
/// radii in `(scale/2, scale)`, resampled until convex. Deterministic per
/// seed.
pub fn sample_convex_polygon(n: usize, g: GeometryKind, scale: f64, seed: u64) -> Result<Polygon> {
    if n < 3 {
        return Err(GeomError::InvalidPolygon(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(GeomError::InvalidCoordinates(format!("scale {scale}")));
    }
    if g == GeometryKind::Spherical && scale >= PI / 2.0 {
        return Err(GeomError::HemisphereViolation { z: scale.cos() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_TRIES {
        let mut thetas: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        thetas.sort_by(f64::total_cmp);
        let vertices = thetas
            .iter()
            .map(|&t| polar_point(rng.random_range(0.5 * scale..scale), t, g))
            .collect::<Result<Vec<_>>>()?;
        if let Ok(p) = Polygon::new(vertices) {
            if p.is_convex() {
                return Ok(p);
            }
        }
    }
    Err(GeomError::SamplingExhausted(SAMPLE_TRIES))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use super::*;

    /// Octant triangle tilted so its centroid is the north pole.
    fn octant() -> Polygon {
        let (h, z) = ((2.0f64 / 3.0).sqrt(), 1.0 / 3f64.sqrt());
        Polygon::new(
            (0..3)
                .map(|k| {
                    let t = TAU * k as f64 / 3.0;
                    Point::spherical(h * t.cos(), h * t.sin(), z).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    fn square(g: GeometryKind, r: f64) -> Polygon {
        Polygon::new(
            (0..4)
                .map(|k| polar_point(r, FRAC_PI_2 * k as f64, g).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(Polygon::new(vec![Point::center(GeometryKind::Hyperbolic); 2]).is_err());
        let a = Point::hyperbolic(0.1, 0.0).unwrap();
        let b = Point::hyperbolic(0.0, 0.1).unwrap();
        assert!(Polygon::new(vec![a, a, b]).is_err());
        let e = Point::euclidean(1.0, 1.0).unwrap();
        assert!(matches!(
            Polygon::new(vec![a, b, e]),
            Err(GeomError::GeometryMismatch(..))
        ));
    }

    #[test]
    fn octant_measures() {
        let p = octant();
        for t in p.interior_angles().unwrap() {
            assert!((t - FRAC_PI_2).abs() < 1e-12);
        }
        assert!((p.perimeter() - 3.0 * FRAC_PI_2).abs() < 1e-12);
        assert!((p.area_convex().unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!((p.gauss_bonnet_area().unwrap() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn equatorial_vertices_rejected() {
        let eq = Point::Spherical(crate::kernel::SPoint::from_vector(nalgebra::Vector3::new(
            1.0, 0.0, 0.0,
        )));
        let p = Polygon::new(vec![
            Point::spherical(0.0, 0.0, 1.0).unwrap(),
            eq,
            Point::spherical(0.0, 0.5, 0.5).unwrap(),
        ]);
        assert!(matches!(p, Err(GeomError::HemisphereViolation { .. })));
    }

    #[test]
    fn square_is_convex_and_regular() {
        for g in GeometryKind::ALL {
            let sq = square(g, 0.8);
            assert!(sq.is_convex());
            assert!(sq.is_regular(1e-9));
            assert!(sq.wimmer_gap().unwrap().abs() < 1e-10);
            assert!((sq.perimeter() - sq.rotated(1).perimeter()).abs() < 1e-14);
        }
    }

    #[test]
    fn reflected_vertex_is_nonconvex() {
        let sq = square(GeometryKind::Hyperbolic, 0.8);
        // Reflect v0 across the geodesic v1 v3 (a diameter here).
        let c = sq.vertices()[0].coords();
        let dented = Polygon::new(vec![
            Point::hyperbolic(-c[0], c[1]).unwrap(),
            sq.vertices()[1],
            sq.vertices()[2],
            sq.vertices()[3],
        ])
        .unwrap();
        assert!(!dented.is_convex());
        assert_eq!(dented.interior_angles(), Err(GeomError::Nonconvex));
        assert_eq!(dented.area_convex(), Err(GeomError::Nonconvex));
    }

    #[test]
    fn pentagram_is_nonconvex() {
        let star = Polygon::new(
            (0..5)
                .map(|k| {
                    polar_point(0.5, 4.0 * PI * k as f64 / 5.0, GeometryKind::Hyperbolic).unwrap()
                })
                .collect(),
        )
        .unwrap();
        assert!(!star.is_convex());
    }

    #[test]
    fn wimmer_gap_arity_and_relabeling() {
        assert!(matches!(
            octant().wimmer_gap(),
            Err(GeomError::Arity {
                expected: 4,
                got: 3
            })
        ));
        let q = sample_convex_polygon(4, GeometryKind::Hyperbolic, 1.0, 7).unwrap();
        let gap = q.wimmer_gap().unwrap();
        // A one-step shift or a reversal swaps the opposite pairs; doing both
        // swaps them back.
        let shifted = q.rotated(1).wimmer_gap().unwrap();
        let reversed = q.reversed().wimmer_gap().unwrap();
        let both = q.reversed().rotated(1).wimmer_gap().unwrap();
        assert!((gap + shifted).abs() < 1e-12);
        assert!((gap + reversed).abs() < 1e-12);
        assert!((gap - both).abs() < 1e-12);
    }

    #[test]
    fn sampler_contract() {
        for g in GeometryKind::ALL {
            for n in 3..=8 {
                let a = sample_convex_polygon(n, g, 1.0, 42).unwrap();
                assert!(a.is_convex());
                assert_eq!(a.len(), n);
                assert_eq!(a, sample_convex_polygon(n, g, 1.0, 42).unwrap());
            }
        }
        assert!(sample_convex_polygon(5, GeometryKind::Spherical, 1.6, 0).is_err());
        assert!(sample_convex_polygon(2, GeometryKind::Hyperbolic, 1.0, 0).is_err());
    }

    #[test]
    fn json_shape() {
        let sq = square(GeometryKind::Hyperbolic, 0.5);
        let json = serde_json::to_value(&sq).unwrap();
        assert_eq!(json["geometry"], "hyperbolic");
        assert_eq!(json["vertices"].as_array().unwrap().len(), 4);
        let back: Polygon = serde_json::from_value(json).unwrap();
        assert_eq!(back, sq);
        let bad = r#"{"geometry":"hyperbolic","vertices":[[0.1,0],[2,0],[0,0.1]]}"#;
        assert!(serde_json::from_str::<Polygon>(bad).is_err());
    }
}
