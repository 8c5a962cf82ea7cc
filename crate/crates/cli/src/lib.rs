//! Argument parsing and command dispatch for the `isogon` binary.
//!
//! Exit codes: 0 on success, 1 when a run fails to converge, the fuzzer
//! finds a violation or an area fails its angle-sum cross-check, and 2 on
//! any input error.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isogon::kernel::{DEFAULT_EPS_CONVERGE, DEFAULT_EPS_PREDICATE};
use isogon::{GeometryKind, ToleranceConfig};

mod commands;
mod render;

#[derive(Parser, Debug)]
#[command(
    name = "isogon",
    version,
    about = "Hyperbolic and spherical polygon toolkit"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Write the formatted output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_EPS_PREDICATE, global = true)]
    pub eps_predicate: f64,
    /// Convergence threshold, also used for the regularity flags.
    #[arg(long, default_value_t = DEFAULT_EPS_CONVERGE, global = true)]
    pub eps_converge: f64,
    /// Show angles in degrees (human output only).
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Perimeter, area, angles and regularity flags of a polygon file.
    Area { input: PathBuf },
    /// Circumradius, side, angle and area of the regular n-gon of perimeter L.
    Regular {
        #[arg(long, default_value = "hyperbolic")]
        geometry: GeometryKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perimeter: f64,
        /// Include the vertex coordinates.
        #[arg(long)]
        vertices: bool,
    },
    /// Drive a convex polygon toward the regular polygon of equal perimeter.
    Symmetrize(SymmetrizeArgs),
    /// Compare random convex polygons against the regular polygon.
    Fuzz {
        #[arg(long, default_value = "hyperbolic")]
        geometry: GeometryKind,
        /// Fixed vertex count; cycles through 3..=8 when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Angle gap and circumcurve of a quadrilateral file.
    ClassifyQuad { input: PathBuf },
    /// Table of regular polygons over ranges of n and L.
    Sweep {
        #[arg(long, default_value = "hyperbolic")]
        geometry: GeometryKind,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Last vertex count (inclusive); defaults to --n.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 1.0)]
        perimeter: f64,
        /// Last perimeter (inclusive); defaults to --perimeter.
        #[arg(long)]
        perimeter_max: Option<f64>,
        /// Number of evenly spaced perimeters.
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
}

#[derive(Args, Debug)]
pub struct SymmetrizeArgs {
    /// Polygon file; a polygon is sampled from --seed when omitted.
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "hyperbolic")]
    pub geometry: GeometryKind,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long, default_value_t = 500)]
    pub max_iter: usize,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Write the CSV trace here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Failure,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Failure => 1,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    /// An emitted area disagreed with its angle-sum counterpart.
    CrossCheck(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::CrossCheck(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::CrossCheck(msg) => write!(f, "cross-check failed: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<isogon::GeomError> for CliError {
    fn from(e: isogon::GeomError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub(crate) struct Output {
    pub text: String,
    pub status: Status,
}

/// Runs one command, writing its output to `--out` or to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let c = &cli.common;
    let tol = ToleranceConfig::new(c.eps_predicate, c.eps_converge)?;
    let out = match &cli.command {
        Command::Area { input } => commands::area(input, c, &tol)?,
        Command::Regular {
            geometry,
            n,
            perimeter,
            vertices,
        } => commands::regular(*geometry, *n, *perimeter, *vertices, c)?,
        Command::Symmetrize(args) => commands::symmetrize(args, c, &tol)?,
        Command::Fuzz {
            geometry,
            n,
            trials,
            seed,
            scale,
        } => commands::fuzz(*geometry, *n, *trials, *seed, *scale, c)?,
        Command::ClassifyQuad { input } => commands::classify_quad(input, c, &tol)?,
        Command::Sweep {
            geometry,
            n,
            n_max,
            perimeter,
            perimeter_max,
            steps,
        } => commands::sweep(
            *geometry,
            (*n, n_max.unwrap_or(*n)),
            (*perimeter, perimeter_max.unwrap_or(*perimeter)),
            *steps,
            c,
        )?,
    };
    match &c.out {
        Some(path) => std::fs::write(path, &out.text)?,
        None => stdout.write_all(out.text.as_bytes())?,
    }
    Ok(out.status)
}
