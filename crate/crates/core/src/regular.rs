//! Regular n-gons of prescribed perimeter, centered in the canonical frame.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::kernel::{law_of_cosines_angle, polar_point, GeometryKind};
use crate::polygon::Polygon;
use crate::triangle::triangle_area;

/// Upper end of the spherical circumradius bracket.
pub const SPHERICAL_RADIUS_CAP: f64 = FRAC_PI_2 - 1e-9;

const MAX_BISECTIONS: usize = 2000;

/// Side of the regular n-gon inscribed in a circle of radius `r`.
///
/// Each central triangle is isosceles with legs `r` and apex angle `2π/n`,
/// so by the law of cosines `cosh ℓ = cosh²r - sinh²r cos(2π/n)` (disk),
/// `cos ℓ = cos²r + sin²r cos(2π/n)` (sphere), `ℓ = 2r sin(π/n)` (plane).
/// Evaluated in the equivalent half-side form, e.g. `sinh(ℓ/2) = sinh r sin(π/n)`.
pub fn side_for_circumradius(n: usize, r: f64, g: GeometryKind) -> Result<f64> {
    if n < 3 {
        return Err(GeomError::InvalidPolygon(format!("n = {n}")));
    }
    if !(r >= 0.0 && r.is_finite()) || (g == GeometryKind::Spherical && r >= FRAC_PI_2) {
        return Err(GeomError::InvalidCoordinates(format!(
            "circumradius {r} outside the {g} domain"
        )));
    }
    let half = (PI / n as f64).sin();
    Ok(match g {
        GeometryKind::Hyperbolic => 2.0 * (r.sinh() * half).asinh(),
        GeometryKind::Spherical => 2.0 * (r.sin() * half).asin(),
        GeometryKind::Euclidean => 2.0 * r * half,
    })
}

/// Solves `n * side_for_circumradius(n, r) = perimeter` for `r` by bisection.
pub fn circumradius_for_perimeter(n: usize, perimeter: f64, g: GeometryKind) -> Result<f64> {
    let infeasible = || GeomError::InfeasiblePerimeter {
        n,
        perimeter,
        geometry: g,
    };
    if n < 3 {
        return Err(GeomError::InvalidPolygon(format!("n = {n}")));
    }
    if !(perimeter > 0.0 && perimeter.is_finite()) {
        return Err(infeasible());
    }
    let residual =
        |r: f64| -> Result<f64> { Ok(n as f64 * side_for_circumradius(n, r, g)? - perimeter) };

    let mut lo = 0.0;
    let mut hi = match g {
        GeometryKind::Spherical => {
            if perimeter >= TAU || residual(SPHERICAL_RADIUS_CAP)? < 0.0 {
                return Err(infeasible());
            }
            SPHERICAL_RADIUS_CAP
        }
        _ => {
            let mut hi = perimeter.max(1.0);
            while residual(hi)? < 0.0 {
                hi *= 2.0;
            }
            hi
        }
    };

    let target = 1e-12 * perimeter.max(1.0);
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let f = residual(mid)?;
        if f.abs() < target || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A solved regular n-gon: perimeter, side and circumradius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegularSpec {
    pub n: usize,
    pub perimeter: f64,
    pub geometry: GeometryKind,
    pub circumradius: f64,
    pub side: f64,
}

impl RegularSpec {
    pub fn new(n: usize, perimeter: f64, geometry: GeometryKind) -> Result<Self> {
        let circumradius = circumradius_for_perimeter(n, perimeter, geometry)?;
        Ok(Self {
            n,
            perimeter,
            geometry,
            circumradius,
            side: perimeter / n as f64,
        })
    }

    /// Interior angle: twice the base angle of a central triangle.
    pub fn interior_angle(&self) -> Result<f64> {
        let r = self.circumradius;
        Ok(2.0 * law_of_cosines_angle(r, self.side, r, self.geometry)?)
    }

    /// `n` copies of the central triangle with sides `(r, r, ℓ)`.
    pub fn area(&self) -> Result<f64> {
        let r = self.circumradius;
        Ok(self.n as f64 * triangle_area(r, r, self.side, self.geometry)?)
    }

    pub fn build(&self) -> Result<Polygon> {
        let vertices = (0..self.n)
            .map(|k| {
                polar_point(
                    self.circumradius,
                    TAU * k as f64 / self.n as f64,
                    self.geometry,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Polygon::new(vertices)
    }
}

pub fn build_regular(n: usize, perimeter: f64, g: GeometryKind) -> Result<Polygon> {
    RegularSpec::new(n, perimeter, g)?.build()
}

pub fn regular_area(n: usize, perimeter: f64, g: GeometryKind) -> Result<f64> {
    RegularSpec::new(n, perimeter, g)?.area()
}
