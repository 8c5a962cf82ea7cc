//! Randomized check that no sampled convex polygon beats the regular polygon
//! of the same perimeter and vertex count.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::kernel::GeometryKind;
use crate::polygon::{sample_convex_polygon, PolygonFile};
use crate::regular::regular_area;

/// Relative slack allowed before a trial counts as a violation.
pub const FUZZ_REL_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub geometry: GeometryKind,
    /// Fixed vertex count; `None` cycles through `3..=8`.
    pub n: Option<usize>,
    pub scale: f64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzReport {
    pub geometry: GeometryKind,
    pub trials: usize,
    pub skipped: usize,
    /// Largest `area / regular_area(n, perimeter)` observed.
    pub max_ratio: f64,
    pub worst: Option<PolygonFile>,
    pub violations: usize,
}

impl FuzzConfig {
    pub fn n_for_trial(&self, trial: usize) -> usize {
        self.n.unwrap_or(3 + trial % 6)
    }

    /// Per-trial seed, so results do not depend on scheduling.
    pub fn seed_for_trial(&self, trial: usize) -> u64 {
        self.seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(trial as u64)
    }
}

enum Trial {
    Done { ratio: f64, polygon: PolygonFile },
    Skipped,
}

fn run_trial(cfg: &FuzzConfig, trial: usize) -> Result<Trial> {
    let n = cfg.n_for_trial(trial);
    let Ok(p) = sample_convex_polygon(n, cfg.geometry, cfg.scale, cfg.seed_for_trial(trial)) else {
        return Ok(Trial::Skipped);
    };
    let area = p.area_convex()?;
    let reference = regular_area(n, p.perimeter(), cfg.geometry)?;
    Ok(Trial::Done {
        ratio: area / reference,
        polygon: p.into(),
    })
}

pub fn fuzz(cfg: &FuzzConfig) -> Result<FuzzReport> {
    let trials = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t))
        .collect::<Result<Vec<_>>>()?;

    let mut report = FuzzReport {
        geometry: cfg.geometry,
        trials: cfg.trials,
        skipped: 0,
        max_ratio: f64::NEG_INFINITY,
        worst: None,
        violations: 0,
    };
    for t in trials {
        match t {
            Trial::Skipped => report.skipped += 1,
            Trial::Done { ratio, polygon } => {
                if ratio > 1.0 + FUZZ_REL_TOL {
                    report.violations += 1;
                }
                if ratio > report.max_ratio {
                    report.max_ratio = ratio;
                    report.worst = Some(polygon);
                }
            }
        }
    }
    Ok(report)
}
