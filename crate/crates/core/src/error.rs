use thiserror::Error;

use crate::kernel::GeometryKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("geometry mismatch: {0} vs {1}")]
    GeometryMismatch(GeometryKind, GeometryKind),

    #[error("point ({x}, {y}) is not strictly inside the unit disk")]
    OutsideDisk { x: f64, y: f64 },

    #[error("spherical point violates the open-hemisphere constraint (z = {z})")]
    HemisphereViolation { z: f64 },

    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),

    #[error("degenerate angle: coincident points")]
    DegenerateAngle,

    #[error("invalid side lengths ({a}, {b}, {c}) for {geometry} triangle")]
    InvalidSides {
        a: f64,
        b: f64,
        c: f64,
        geometry: GeometryKind,
    },

    #[error("degenerate frame: anchor points coincide")]
    DegenerateFrame,

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("polygon is nonconvex")]
    Nonconvex,

    #[error("expected a polygon with {expected} vertices, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("infeasible perimeter {perimeter} for {geometry} regular {n}-gon")]
    InfeasiblePerimeter {
        n: usize,
        perimeter: f64,
        geometry: GeometryKind,
    },

    #[error("sampling budget exhausted after {0} tries")]
    SamplingExhausted(usize),

    #[error("diagonal {p} outside the feasible interval ({lo}, {hi})")]
    InvalidDiagonal { p: f64, lo: f64, hi: f64 },

    #[error("flex problem has an empty feasible interval")]
    InfeasibleFlex,

    #[error("move rejected: {0}")]
    MoveRejected(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
