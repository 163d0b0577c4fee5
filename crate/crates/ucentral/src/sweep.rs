//! Horizon sweeps: score every node over a log-spaced grid of horizons and
//! correlate the resulting rankings against the structural measures.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::reference_centralities;
use crate::error::Result;
use crate::graph::{laplacian, Graph};
use crate::rank::{kendall_tau, kendall_tau_distinct};
use crate::spectral::decompose;
use crate::ucentrality::u_centrality;

/// Sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOptions {
    pub tf_min: f64,
    pub tf_max: f64,
    pub points: usize,
    pub c: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            tf_min: 1e-3,
            tf_max: 1e3,
            points: 7,
            c: 1.0,
        }
    }
}

/// Rank agreement between the swept scores and one reference measure, per
/// grid point. `tau` is tie-corrected tau-b over all pairs; `tau_distinct`
/// counts only pairs the reference itself separates; `degenerate` flags grid
/// points where the coefficient was undefined and reported as zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureCorrelation {
    pub measure: String,
    pub tau: Vec<f64>,
    pub tau_distinct: Vec<f64>,
    pub degenerate: Vec<bool>,
}

/// Full sweep output. `scores[p][i]` is node `i`'s score at grid point `p`;
/// `ranks` holds the matching 1-based competition ranks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub nodes: Vec<String>,
    pub c: f64,
    pub tf_grid: Vec<f64>,
    pub scores: Vec<Vec<f64>>,
    pub ranks: Vec<Vec<usize>>,
    pub central_nodes: Vec<Vec<String>>,
    pub correlations: Vec<MeasureCorrelation>,
}

/// Strictly increasing log-spaced grid with exact endpoints.
fn log_grid(tf_min: f64, tf_max: f64, points: usize) -> Vec<f64> {
    let (log_min, log_max) = (tf_min.ln(), tf_max.ln());
    let step = (log_max - log_min) / (points - 1) as f64;
    (0..points)
        .map(|i| {
            if i == 0 {
                tf_min
            } else if i == points - 1 {
                tf_max
            } else {
                (log_min + i as f64 * step).exp()
            }
        })
        .collect()
}

/// Runs a sweep on a connected graph. Grid points are independent and are
/// evaluated in parallel.
///
/// Panics on invalid options (the CLI validates them first); fails with
/// `Disconnected` on disconnected input.
pub fn run_sweep(g: &Graph, opts: &SweepOptions) -> Result<SweepReport> {
    assert!(opts.points >= 2, "a sweep needs at least two grid points");
    assert!(
        opts.tf_min > 0.0 && opts.tf_min < opts.tf_max && opts.tf_max.is_finite(),
        "need 0 < tf_min < tf_max"
    );
    assert!(
        opts.c > 0.0 && opts.c.is_finite(),
        "threshold must be positive and finite"
    );

    let dec = decompose(&laplacian(g))?;
    let references = reference_centralities(g)?;
    let grid = log_grid(opts.tf_min, opts.tf_max, opts.points);

    struct PointResult {
        scores: Vec<f64>,
        ranks: Vec<usize>,
        central: Vec<String>,
        taus: Vec<(f64, f64, bool)>,
    }

    let evaluated: Vec<PointResult> = grid
        .par_iter()
        .map(|&tf| {
            let cv = u_centrality(&dec, tf, opts.c).centrality();
            let taus = references
                .iter()
                .map(|reference| {
                    let full = kendall_tau(
                        cv.scores(),
                        cv.orientation(),
                        reference.scores(),
                        reference.orientation(),
                    );
                    let distinct = kendall_tau_distinct(
                        cv.scores(),
                        cv.orientation(),
                        reference.scores(),
                        reference.orientation(),
                    );
                    (full.tau, distinct.tau, full.degenerate)
                })
                .collect();
            PointResult {
                ranks: cv.ranks(),
                central: cv
                    .central_set()
                    .iter()
                    .map(|&i| g.label(i).to_string())
                    .collect(),
                scores: cv.scores().to_vec(),
                taus,
            }
        })
        .collect();

    let correlations = references
        .iter()
        .enumerate()
        .map(|(r, reference)| MeasureCorrelation {
            measure: reference.measure().id().to_string(),
            tau: evaluated.iter().map(|p| p.taus[r].0).collect(),
            tau_distinct: evaluated.iter().map(|p| p.taus[r].1).collect(),
            degenerate: evaluated.iter().map(|p| p.taus[r].2).collect(),
        })
        .collect();

    Ok(SweepReport {
        nodes: g.labels().to_vec(),
        c: opts.c,
        tf_grid: grid,
        scores: evaluated.iter().map(|p| p.scores.clone()).collect(),
        ranks: evaluated.iter().map(|p| p.ranks.clone()).collect(),
        central_nodes: evaluated.iter().map(|p| p.central.clone()).collect(),
        correlations,
    })
}
