//! Area-nondecreasing local moves and the round-robin loop that iterates
//! them toward the regular polygon.
//!
//! Two moves are used. [`move_average_sides`] replaces a vertex so that its
//! two incident sides both become their average; the chord between the
//! neighbours is kept, so the ear triangle keeps its base and gains area.
//! [`move_flex_quad`] keeps four consecutive side lengths and the chord
//! closing them, and flexes the quadrilateral to its maximal-area shape,
//! where the opposite-angle sums agree.
//!
//! Both moves preserve the perimeter. A move that would break convexity, or
//! that cannot be realized, is rejected and the polygon is left as is.

mod flex;

use log::debug;
use serde::Serialize;

pub use flex::{
    solve_flex, spherical_concyclicity_residual, FlexProblem, FlexSolution, COARSE_SCAN_POINTS,
    GOLDEN_WIDTH,
};

use crate::error::{GeomError, Result};
use crate::kernel::{distance, third_vertex, to_canonical, Side, ToleranceConfig};
use crate::polygon::{spread, Polygon, PolygonFile};
use crate::triangle::triangle_area;

fn rejected(reason: impl Into<String>) -> GeomError {
    GeomError::MoveRejected(reason.into())
}

fn require_convex(p: &Polygon) -> Result<()> {
    if p.is_convex() {
        Ok(())
    } else {
        Err(GeomError::Nonconvex)
    }
}

/// Replaces vertex `i` so that both incident sides equal their average.
///
/// The new vertex is built in the canonical frame of its two neighbours, on
/// the same side of their chord as the old one.
pub fn move_average_sides(p: &Polygon, i: usize) -> Result<Polygon> {
    require_convex(p)?;
    let i = i as isize;
    let (u, v, w) = (p.vertex(i - 1), p.vertex(i), p.vertex(i + 1));
    let a = distance(u, v)?;
    let b = distance(v, w)?;
    let c = distance(u, w)?;
    let g = p.geometry();
    let mean = 0.5 * (a + b);

    let before = triangle_area(a, b, c, g).map_err(|e| rejected(e.to_string()))?;
    let after = triangle_area(mean, mean, c, g).map_err(|e| rejected(e.to_string()))?;
    // Equal within rounding once the sides are nearly equal.
    if after < before - 1e-14 * before.max(1.0) {
        return Err(rejected(format!(
            "ear area would drop ({before} -> {after})"
        )));
    }

    let frame = to_canonical(u, w)?;
    let side = Side::of(frame.apply(v)?.frame_side());
    let apex = third_vertex(c, mean, mean, side, g).map_err(|e| rejected(e.to_string()))?;
    let replaced = frame.inverse().apply(&apex)?;

    let mut vertices = p.vertices().to_vec();
    vertices[i.rem_euclid(p.len() as isize) as usize] = replaced;
    let out = p
        .with_vertices(vertices)
        .map_err(|e| rejected(e.to_string()))?;
    if !out.is_convex() {
        return Err(rejected("convexity lost"));
    }
    Ok(out)
}

/// Flexes the quadrilateral `v[i-1] v[i] v[i+1] v[i+2]` to its maximal area
/// with `v[i-1]`, `v[i+2]` and all four of its side lengths held fixed.
pub fn move_flex_quad(p: &Polygon, i: usize) -> Result<Polygon> {
    require_convex(p)?;
    if p.len() < 4 {
        return Err(GeomError::Arity {
            expected: 4,
            got: p.len(),
        });
    }
    let i = i as isize;
    let (a, b, c, d) = (
        p.vertex(i - 1),
        p.vertex(i),
        p.vertex(i + 1),
        p.vertex(i + 2),
    );
    let g = p.geometry();
    let fp = FlexProblem::new(
        distance(a, b)?,
        distance(b, c)?,
        distance(c, d)?,
        distance(d, a)?,
        g,
    )
    .map_err(|e| rejected(e.to_string()))?;
    let current = distance(a, c)?;
    let current_area = fp.area(current).unwrap_or(f64::NEG_INFINITY);
    let best = solve_flex(&fp).map_err(|e| rejected(e.to_string()))?;
    if best.area <= current_area {
        return Ok(p.clone());
    }

    let frame = to_canonical(a, d)?;
    let side = Side::of(frame.apply(b)?.frame_side());
    let quad = fp
        .realize(best.diagonal, side)
        .map_err(|e| rejected(e.to_string()))?;
    let back = frame.inverse();
    let n = p.len() as isize;
    let mut vertices = p.vertices().to_vec();
    vertices[i.rem_euclid(n) as usize] = back.apply(&quad[1])?;
    vertices[(i + 1).rem_euclid(n) as usize] = back.apply(&quad[2])?;
    let out = p
        .with_vertices(vertices)
        .map_err(|e| rejected(e.to_string()))?;
    if !out.is_convex() {
        return Err(rejected("convexity lost"));
    }
    Ok(out)
}

/// Trace of a [`symmetrize`] run; entry 0 describes the input polygon and
/// entry `k` the polygon after pass `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetrizationReport {
    pub iterations: usize,
    pub converged: bool,
    pub area_trace: Vec<f64>,
    pub side_spread_trace: Vec<f64>,
    pub angle_spread_trace: Vec<f64>,
    pub perimeter_trace: Vec<f64>,
    pub rejected_moves: usize,
    #[serde(serialize_with = "serialize_polygon")]
    pub final_polygon: Polygon,
}

fn serialize_polygon<S: serde::Serializer>(
    p: &Polygon,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    PolygonFile::from(p.clone()).serialize(s)
}

impl SymmetrizationReport {
    /// CSV with header `iteration,area,side_spread,angle_spread`.
    pub fn trace_csv(&self) -> String {
        let mut out = String::from("iteration,area,side_spread,angle_spread\n");
        for (k, ((a, s), t)) in self
            .area_trace
            .iter()
            .zip(&self.side_spread_trace)
            .zip(&self.angle_spread_trace)
            .enumerate()
        {
            out.push_str(&format!("{k},{a},{s},{t}\n"));
        }
        out
    }

    pub fn final_area(&self) -> f64 {
        *self.area_trace.last().expect("trace has the initial entry")
    }
}

/// Alternates a full pass of side averaging with a full pass of
/// quadrilateral flexing (skipped for triangles) until both the side spread
/// and the angle spread drop below `eps_converge`, or `max_iter` passes run.
pub fn symmetrize(
    p: &Polygon,
    cfg: &ToleranceConfig,
    max_iter: usize,
) -> Result<SymmetrizationReport> {
    require_convex(p)?;
    let n = p.len();
    let mut current = p.clone();
    let mut report = SymmetrizationReport {
        iterations: 0,
        converged: false,
        area_trace: Vec::new(),
        side_spread_trace: Vec::new(),
        angle_spread_trace: Vec::new(),
        perimeter_trace: Vec::new(),
        rejected_moves: 0,
        final_polygon: p.clone(),
    };
    let done = |r: &SymmetrizationReport| {
        r.side_spread_trace.last().copied().unwrap_or(f64::INFINITY) < cfg.eps_converge()
            && r.angle_spread_trace
                .last()
                .copied()
                .unwrap_or(f64::INFINITY)
                < cfg.eps_converge()
    };
    record(&mut report, &current);

    while !done(&report) && report.iterations < max_iter {
        for i in 0..n {
            apply_move(&mut current, &mut report.rejected_moves, |q| {
                move_average_sides(q, i)
            });
        }
        if n >= 4 {
            for i in 0..n {
                apply_move(&mut current, &mut report.rejected_moves, |q| {
                    move_flex_quad(q, i)
                });
            }
        }
        report.iterations += 1;
        record(&mut report, &current);
    }
    report.converged = done(&report);
    report.final_polygon = current;
    Ok(report)
}

fn apply_move(
    current: &mut Polygon,
    rejections: &mut usize,
    step: impl Fn(&Polygon) -> Result<Polygon>,
) {
    match step(current) {
        Ok(next) => *current = next,
        Err(e) => {
            debug!("{e}");
            *rejections += 1;
        }
    }
}

fn record(report: &mut SymmetrizationReport, p: &Polygon) {
    report.area_trace.push(p.fan_area());
    report.side_spread_trace.push(p.side_spread());
    report
        .angle_spread_trace
        .push(spread(&p.angles_unchecked()));
    report.perimeter_trace.push(p.perimeter());
}
