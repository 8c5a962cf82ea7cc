use std::path::Path;

use isogon::kernel::circumcurve_through_with;
use isogon::{
    lies_on, regular_area, sample_convex_polygon, spherical_concyclicity_residual, CurveKind,
    FuzzConfig, GeometryKind, Polygon, PolygonFile, RegularSpec, SymmetrizationReport,
    ToleranceConfig,
};
use serde::Serialize;

use crate::render;
use crate::{CliError, Common, Format, Output, Status, SymmetrizeArgs};

/// Agreement required between a reported area and its angle-sum value.
const CROSS_CHECK_TOL: f64 = 1e-8;
/// Distance from the circumcurve at which a fourth vertex counts as on it.
const MEMBER_TOL: f64 = 1e-6;

fn read_polygon(path: &Path) -> Result<Polygon, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn require_convex(p: &Polygon, tol: &ToleranceConfig) -> Result<(), CliError> {
    if p.is_convex_with(tol.eps_predicate()) {
        Ok(())
    } else {
        Err(CliError::Input("nonconvex polygon".into()))
    }
}

fn cross_check(p: &Polygon, area: f64) -> Result<f64, CliError> {
    let gb = p.gauss_bonnet_area()?;
    if (gb - area).abs() > CROSS_CHECK_TOL * area.abs().max(1.0) {
        return Err(CliError::CrossCheck(format!(
            "area {area} vs angle-sum area {gb}"
        )));
    }
    Ok(gb)
}

fn positive(name: &str, x: f64) -> Result<(), CliError> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(CliError::Input(format!("{name} must be positive, got {x}")))
    }
}

#[derive(Serialize)]
struct AreaReport {
    geometry: GeometryKind,
    n: usize,
    perimeter: f64,
    area: f64,
    area_gauss_bonnet: f64,
    side_lengths: Vec<f64>,
    interior_angles: Vec<f64>,
    convex: bool,
    equilateral: bool,
    equiangular: bool,
    regular: bool,
}

pub(crate) fn area(input: &Path, c: &Common, tol: &ToleranceConfig) -> Result<Output, CliError> {
    let p = read_polygon(input)?;
    require_convex(&p, tol)?;
    let area = p.area_convex()?;
    let eps = tol.eps_converge();
    let r = AreaReport {
        geometry: p.geometry(),
        n: p.len(),
        perimeter: p.perimeter(),
        area,
        area_gauss_bonnet: cross_check(&p, area)?,
        side_lengths: p.side_lengths(),
        interior_angles: p.interior_angles()?,
        convex: true,
        equilateral: p.is_equilateral(eps),
        equiangular: p.is_equiangular(eps),
        regular: p.is_regular(eps),
    };
    let text = match c.format {
        Format::Json => render::json(&r)?,
        Format::Csv => render::csv(
            "geometry,n,perimeter,area,convex,equilateral,equiangular,regular",
            &[vec![
                r.geometry.to_string(),
                r.n.to_string(),
                r.perimeter.to_string(),
                r.area.to_string(),
                r.convex.to_string(),
                r.equilateral.to_string(),
                r.equiangular.to_string(),
                r.regular.to_string(),
            ]],
        ),
        Format::Human => render::human(&[
            ("geometry", r.geometry.to_string()),
            ("vertices", r.n.to_string()),
            ("perimeter", format!("{:.12}", r.perimeter)),
            ("area", format!("{:.12}", r.area)),
            ("angles", render::angles(&r.interior_angles, c.degrees)),
            ("convex", r.convex.to_string()),
            ("equilateral", r.equilateral.to_string()),
            ("equiangular", r.equiangular.to_string()),
            ("regular", r.regular.to_string()),
        ]),
    };
    Ok(Output {
        text,
        status: Status::Success,
    })
}

#[derive(Serialize)]
struct RegularReport {
    geometry: GeometryKind,
    n: usize,
    perimeter: f64,
    circumradius: f64,
    side: f64,
    interior_angle: f64,
    area: f64,
    area_gauss_bonnet: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<PolygonFile>,
}

pub(crate) fn regular(
    g: GeometryKind,
    n: usize,
    perimeter: f64,
    vertices: bool,
    c: &Common,
) -> Result<Output, CliError> {
    let spec = RegularSpec::new(n, perimeter, g)?;
    let area = spec.area()?;
    let polygon = spec.build()?;
    let r = RegularReport {
        geometry: g,
        n,
        perimeter,
        circumradius: spec.circumradius,
        side: spec.side,
        interior_angle: spec.interior_angle()?,
        area,
        area_gauss_bonnet: cross_check(&polygon, area)?,
        vertices: vertices.then(|| polygon.into()),
    };
    let text = match c.format {
        Format::Json => render::json(&r)?,
        Format::Csv => render::csv(
            "n,L,regular_area,interior_angle,circumradius,side",
            &[vec![
                n.to_string(),
                perimeter.to_string(),
                r.area.to_string(),
                r.interior_angle.to_string(),
                r.circumradius.to_string(),
                r.side.to_string(),
            ]],
        ),
        Format::Human => {
            let mut lines = vec![
                ("geometry", g.to_string()),
                ("n", n.to_string()),
                ("perimeter", format!("{perimeter:.12}")),
                ("circumradius", format!("{:.12}", r.circumradius)),
                ("side", format!("{:.12}", r.side)),
                ("interior angle", render::angle(r.interior_angle, c.degrees)),
                ("area", format!("{:.12}", r.area)),
                ("area (angles)", format!("{:.12}", r.area_gauss_bonnet)),
            ];
            if let Some(v) = &r.vertices {
                lines.push(("vertices", format!("{:?}", v.vertices)));
            }
            render::human(&lines)
        }
    };
    Ok(Output {
        text,
        status: Status::Success,
    })
}

#[derive(Serialize)]
struct SymmetrizeOutput<'a> {
    geometry: GeometryKind,
    n: usize,
    #[serde(flatten)]
    run: &'a SymmetrizationReport,
    regular_area: Option<f64>,
    relative_gap: Option<f64>,
}

pub(crate) fn symmetrize(
    args: &SymmetrizeArgs,
    c: &Common,
    tol: &ToleranceConfig,
) -> Result<Output, CliError> {
    let p = match &args.input {
        Some(path) => read_polygon(path)?,
        None => {
            positive("scale", args.scale)?;
            sample_convex_polygon(args.n, args.geometry, args.scale, args.seed)?
        }
    };
    require_convex(&p, tol)?;
    let run = isogon::symmetrize(&p, tol, args.max_iter)?;
    let area = run.final_area();
    cross_check(&run.final_polygon, area)?;
    let reference = regular_area(p.len(), p.perimeter(), p.geometry()).ok();
    let out = SymmetrizeOutput {
        geometry: p.geometry(),
        n: p.len(),
        run: &run,
        regular_area: reference,
        relative_gap: reference.map(|r| (r - area) / r),
    };
    let report = render::json(&out)?;
    let trace = run.trace_csv();
    if let Some(path) = &args.report {
        std::fs::write(path, &report)?;
    }
    if let Some(path) = &args.trace {
        std::fs::write(path, &trace)?;
    }
    let text = match c.format {
        Format::Json => report,
        Format::Csv => trace,
        Format::Human => {
            let last = |v: &[f64]| v.last().copied().unwrap_or(f64::NAN);
            render::human(&[
                ("geometry", out.geometry.to_string()),
                ("vertices", out.n.to_string()),
                ("converged", run.converged.to_string()),
                ("passes", run.iterations.to_string()),
                ("initial area", format!("{:.12}", run.area_trace[0])),
                ("final area", format!("{area:.12}")),
                (
                    "regular area",
                    reference.map_or("n/a".into(), |r| format!("{r:.12}")),
                ),
                (
                    "relative gap",
                    out.relative_gap
                        .map_or("n/a".into(), |g| format!("{g:.3e}")),
                ),
                (
                    "side spread",
                    format!("{:.3e}", last(&run.side_spread_trace)),
                ),
                (
                    "angle spread",
                    format!("{:.3e}", last(&run.angle_spread_trace)),
                ),
                ("rejected moves", run.rejected_moves.to_string()),
            ])
        }
    };
    Ok(Output {
        text,
        status: if run.converged {
            Status::Success
        } else {
            Status::Failure
        },
    })
}

pub(crate) fn fuzz(
    g: GeometryKind,
    n: Option<usize>,
    trials: usize,
    seed: u64,
    scale: f64,
    c: &Common,
) -> Result<Output, CliError> {
    if trials == 0 {
        return Err(CliError::Input("trials must be at least 1".into()));
    }
    if n.is_some_and(|n| n < 3) {
        return Err(CliError::Input("n must be at least 3".into()));
    }
    positive("scale", scale)?;
    let cfg = FuzzConfig {
        geometry: g,
        n,
        scale,
        trials,
        seed,
    };
    let r = isogon::fuzz(&cfg)?;
    if let Some(worst) = &r.worst {
        let p = Polygon::try_from(worst.clone())?;
        cross_check(&p, p.area_convex()?)?;
    }
    let text = match c.format {
        Format::Json => render::json(&r)?,
        Format::Csv => render::csv(
            "geometry,trials,skipped,violations,max_ratio",
            &[vec![
                g.to_string(),
                r.trials.to_string(),
                r.skipped.to_string(),
                r.violations.to_string(),
                r.max_ratio.to_string(),
            ]],
        ),
        Format::Human => render::human(&[
            ("geometry", g.to_string()),
            ("trials", r.trials.to_string()),
            ("skipped", r.skipped.to_string()),
            ("violations", r.violations.to_string()),
            ("max ratio", format!("{:.12}", r.max_ratio)),
        ]),
    };
    Ok(Output {
        text,
        status: if r.violations == 0 {
            Status::Success
        } else {
            Status::Failure
        },
    })
}

#[derive(Serialize)]
struct QuadReport {
    geometry: GeometryKind,
    gap: f64,
    angles: [f64; 4],
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<CurveKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    offset: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    concyclicity_residual: Option<f64>,
}

pub(crate) fn classify_quad(
    input: &Path,
    c: &Common,
    tol: &ToleranceConfig,
) -> Result<Output, CliError> {
    let p = read_polygon(input)?;
    if p.len() != 4 {
        return Err(CliError::Input(format!(
            "expected a quadrilateral, got {} vertices",
            p.len()
        )));
    }
    require_convex(&p, tol)?;
    let q = p.quad_angles()?;
    let v = p.vertices();
    let mut r = QuadReport {
        geometry: p.geometry(),
        gap: q.gap(),
        angles: [q.a, q.b, q.c, q.d],
        curve: None,
        member: None,
        offset: None,
        concyclicity_residual: None,
    };
    match p.geometry() {
        GeometryKind::Hyperbolic => {
            let curve = circumcurve_through_with(&v[0], &v[1], &v[2], tol)?;
            r.curve = Some(curve.kind);
            r.member = Some(lies_on(&curve, &v[3], MEMBER_TOL));
            r.offset = Some(curve.euclidean_offset(&v[3]));
        }
        GeometryKind::Spherical => {
            r.concyclicity_residual =
                Some(spherical_concyclicity_residual(&[v[0], v[1], v[2], v[3]])?);
        }
        GeometryKind::Euclidean => {
            return Err(CliError::Input(
                "classify-quad takes hyperbolic or spherical input".into(),
            ))
        }
    }
    let opt = |x: Option<String>| x.unwrap_or_default();
    let text = match c.format {
        Format::Json => render::json(&r)?,
        Format::Csv => render::csv(
            "geometry,gap,curve,member,offset,concyclicity_residual",
            &[vec![
                r.geometry.to_string(),
                r.gap.to_string(),
                opt(r.curve.map(|k| format!("{k:?}"))),
                opt(r.member.map(|m| m.to_string())),
                opt(r.offset.map(|x| x.to_string())),
                opt(r.concyclicity_residual.map(|x| x.to_string())),
            ]],
        ),
        Format::Human => {
            let mut lines = vec![
                ("geometry", r.geometry.to_string()),
                ("gap", format!("{:.3e}", r.gap)),
                ("angles", render::angles(&r.angles, c.degrees)),
            ];
            if let (Some(k), Some(m), Some(o)) = (r.curve, r.member, r.offset) {
                lines.push(("curve", format!("{k:?}")));
                lines.push(("fourth vertex on curve", m.to_string()));
                lines.push(("offset", format!("{o:.3e}")));
            }
            if let Some(x) = r.concyclicity_residual {
                lines.push(("concyclicity residual", format!("{x:.3e}")));
            }
            render::human(&lines)
        }
    };
    Ok(Output {
        text,
        status: Status::Success,
    })
}

#[derive(Serialize)]
struct SweepRow {
    n: usize,
    #[serde(rename = "L")]
    perimeter: f64,
    regular_area: f64,
    interior_angle: f64,
    circumradius: f64,
}

fn sweep_row(g: GeometryKind, n: usize, perimeter: f64) -> Result<SweepRow, CliError> {
    let spec = RegularSpec::new(n, perimeter, g)?;
    let area = spec.area()?;
    cross_check(&spec.build()?, area)?;
    Ok(SweepRow {
        n,
        perimeter,
        regular_area: area,
        interior_angle: spec.interior_angle()?,
        circumradius: spec.circumradius,
    })
}

pub(crate) fn sweep(
    g: GeometryKind,
    (n_min, n_max): (usize, usize),
    (l_min, l_max): (f64, f64),
    steps: usize,
    c: &Common,
) -> Result<Output, CliError> {
    if steps == 0 {
        return Err(CliError::Input("steps must be at least 1".into()));
    }
    if n_min < 3 || n_max < n_min {
        return Err(CliError::Input(format!(
            "bad vertex range {n_min}..={n_max}"
        )));
    }
    positive("perimeter", l_min)?;
    if !(l_max >= l_min && l_max.is_finite()) {
        return Err(CliError::Input(format!(
            "bad perimeter range {l_min}..={l_max}"
        )));
    }
    let perimeters: Vec<f64> = if steps == 1 {
        vec![l_min]
    } else {
        (0..steps)
            .map(|k| l_min + (l_max - l_min) * k as f64 / (steps - 1) as f64)
            .collect()
    };
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        for &l in &perimeters {
            match sweep_row(g, n, l) {
                Ok(row) => rows.push(row),
                Err(CliError::Input(msg)) => log::warn!("skipping n={n} L={l}: {msg}"),
                Err(e) => return Err(e),
            }
        }
    }
    let text = match c.format {
        Format::Json => render::json(&rows)?,
        Format::Csv => render::csv(
            "n,L,regular_area,interior_angle,circumradius",
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.perimeter.to_string(),
                        r.regular_area.to_string(),
                        r.interior_angle.to_string(),
                        r.circumradius.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Human => {
            let mut s = format!(
                "{:>4}  {:>16}  {:>16}  {:>20}  {:>16}\n",
                "n", "L", "area", "interior angle", "circumradius"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:>4}  {:>16.10}  {:>16.10}  {:>20}  {:>16.10}\n",
                    r.n,
                    r.perimeter,
                    r.regular_area,
                    render::angle(r.interior_angle, c.degrees),
                    r.circumradius
                ));
            }
            s
        }
    };
    Ok(Output {
        text,
        status: Status::Success,
    })
}
