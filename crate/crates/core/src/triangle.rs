//! Triangle areas from side lengths, with the angle defect/excess as an
//! independent cross-check.

use std::f64::consts::PI;

use crate::error::{GeomError, Result};
use crate::kernel::{angle_at, check_sides, distance, GeometryKind, Point};

/// Side lengths of a nondegenerate triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleSides {
    a: f64,
    b: f64,
    c: f64,
    geometry: GeometryKind,
}

impl TriangleSides {
    pub fn new(a: f64, b: f64, c: f64, geometry: GeometryKind) -> Result<Self> {
        check_sides(a, b, c, geometry)?;
        Ok(Self { a, b, c, geometry })
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn geometry(&self) -> GeometryKind {
        self.geometry
    }

    pub fn semi_perimeter(&self) -> f64 {
        0.5 * (self.a + self.b + self.c)
    }

    pub fn area(&self) -> f64 {
        let s = self.semi_perimeter();
        let [a, b, c] = self.sides();
        match self.geometry {
            GeometryKind::Spherical => {
                let t = |x: f64| (0.5 * x).tan();
                4.0 * (t(s) * t(s - a) * t(s - b) * t(s - c))
                    .max(0.0)
                    .sqrt()
                    .atan()
            }
            GeometryKind::Hyperbolic => {
                let t = |x: f64| (0.5 * x).tanh();
                4.0 * (t(s) * t(s - a) * t(s - b) * t(s - c))
                    .max(0.0)
                    .sqrt()
                    .atan()
            }
            GeometryKind::Euclidean => (s * (s - a) * (s - b) * (s - c)).max(0.0).sqrt(),
        }
    }
}

/// Area of the triangle with sides `t`: the spherical and hyperbolic
/// analogues of Heron's formula,
/// `tan(S/4) = sqrt(f(s/2) f((s-a)/2) f((s-b)/2) f((s-c)/2))` with
/// `f = tan` or `tanh`, and Heron's formula on the plane.
pub fn area_from_sides(t: &TriangleSides) -> f64 {
    t.area()
}

/// Convenience wrapper validating raw side lengths.
pub fn triangle_area(a: f64, b: f64, c: f64, g: GeometryKind) -> Result<f64> {
    TriangleSides::new(a, b, c, g).map(|t| t.area())
}

/// Relative triangle-inequality slack at or below which vertices count as
/// collinear.
const COLLINEAR_SLACK: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleArea {
    pub value: f64,
    /// Set when the pairwise distances meet the triangle inequality with
    /// (relative) equality, i.e. the vertices are collinear; `value` is then
    /// zero.
    pub degenerate: bool,
}

fn pairwise(p: &Point, q: &Point, r: &Point) -> Result<[f64; 3]> {
    let d = [distance(q, r)?, distance(p, r)?, distance(p, q)?];
    if d.contains(&0.0) {
        return Err(GeomError::Degenerate("coincident triangle vertices"));
    }
    Ok(d)
}

pub fn area_from_vertices(p: &Point, q: &Point, r: &Point) -> Result<TriangleArea> {
    let [a, b, c] = pairwise(p, q, r)?;
    let s = 0.5 * (a + b + c);
    let slack = (s - a).min(s - b).min(s - c);
    Ok(match TriangleSides::new(a, b, c, p.geometry()) {
        Ok(t) if slack > COLLINEAR_SLACK * s => TriangleArea {
            value: t.area(),
            degenerate: false,
        },
        _ => TriangleArea {
            value: 0.0,
            degenerate: true,
        },
    })
}

/// Area from the interior angles: `π - Σ` in the disk, `Σ - π` on the
/// sphere. The plane has no defect, so the shoelace formula stands in.
pub fn area_gauss_bonnet(p: &Point, q: &Point, r: &Point) -> Result<f64> {
    pairwise(p, q, r)?;
    let g = p.geometry();
    if g == GeometryKind::Euclidean {
        let (p, q, r) = (p.coords(), q.coords(), r.coords());
        let cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
        return Ok(0.5 * cross.abs());
    }
    let sum = angle_at(p, q, r)? + angle_at(q, r, p)? + angle_at(r, p, q)?;
    Ok(match g {
        GeometryKind::Hyperbolic => PI - sum,
        _ => sum - PI,
    })
}
