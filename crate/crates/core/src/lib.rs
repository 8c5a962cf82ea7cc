//! Polygons in the hyperbolic plane (Poincaré disk) and on the sphere (open
//! upper hemisphere), with a flat baseline.
//!
//! The crate provides closed-form triangle and regular-polygon areas, a
//! circumcurve classifier for the disk, and [`symmetrize`], which drives a
//! convex polygon toward the regular polygon of the same perimeter through
//! area-nondecreasing local moves. [`fuzz`] checks the isoperimetric
//! inequality on random convex polygons.

pub mod error;
pub mod fuzz;
pub mod kernel;
pub mod polygon;
pub mod regular;
pub mod symmetrize;
pub mod triangle;

pub use error::{GeomError, Result};
pub use fuzz::{fuzz, FuzzConfig, FuzzReport};
pub use kernel::{
    angle_at, circumcurve_through, distance, law_of_cosines_angle, lies_on, polar_point,
    third_vertex, to_canonical, CircumCurve, CurveKind, GeometryKind, HPoint, Isometry, Point,
    SPoint, Side, ToleranceConfig,
};
pub use polygon::{sample_convex_polygon, Polygon, PolygonFile, QuadAngles};
pub use regular::{
    build_regular, circumradius_for_perimeter, regular_area, side_for_circumradius, RegularSpec,
};
pub use symmetrize::{
    move_average_sides, move_flex_quad, solve_flex, spherical_concyclicity_residual, symmetrize,
    FlexProblem, SymmetrizationReport,
};
pub use triangle::{
    area_from_sides, area_from_vertices, area_gauss_bonnet, triangle_area, TriangleArea,
    TriangleSides,
};
