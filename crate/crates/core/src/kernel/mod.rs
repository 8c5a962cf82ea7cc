//! Points, metrics, angles and canonical frames for the Poincaré disk, the
//! unit sphere (upper hemisphere chart) and the flat baseline.

mod circumcurve;
mod isometry;
mod metric;
mod point;
mod trig;

pub use circumcurve::{
    circumcurve_through, circumcurve_through_with, lies_on, CircumCurve, CurveKind, CurveShape,
    CHORD_RADIUS_LIMIT,
};
pub use isometry::{to_canonical, Isometry};
pub use metric::{angle_at, distance};
pub use point::{
    EPoint, GeometryKind, HPoint, Point, SPoint, ToleranceConfig, DEFAULT_EPS_CONVERGE,
    DEFAULT_EPS_PREDICATE,
};
pub(crate) use trig::{check_sides, frame_point};
pub use trig::{law_of_cosines_angle, polar_point, third_vertex, Side};
