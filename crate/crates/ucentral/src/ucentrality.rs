//! The horizon-dependent centrality measure and its two asymptotic regimes.
//!
//! Controlling a single node `i` with the minimum-energy input that brings
//! the aggregate state to `c` at time `t_f` lands the system at a terminal
//! state `x_fi`. The distance from `x_fi` to the consensus point `(c/n) 1`
//! scores node `i`: the smaller the distance, the more central the node. In
//! the small-horizon limit the scores order nodes by degree; in the large-
//! horizon limit they order nodes by the column norms of the Laplacian
//! pseudoinverse, for which trees admit a hop-distance closed form.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::measure::{CentralityVector, Measure, Orientation};
use crate::spectral::{pseudoinverse, PseudoinverseMatrix, SpectralDecomposition};

/// Below this argument the two-term series of `phi` is exact to double
/// precision.
const PHI_SERIES_CUTOFF: f64 = 1e-8;

/// The spectral filter `phi(z) = (1 - e^{-z}) / z`, continued with
/// `phi(0) = 1`.
///
/// Strictly decreasing with `0 < phi(z) <= 1` for `z >= 0`. Evaluated through
/// `exp_m1` so no precision is lost at small arguments, with the two-term
/// series `1 - z/2` below the cutoff.
pub fn phi(z: f64) -> f64 {
    assert!(
        z >= 0.0 && z.is_finite(),
        "phi is defined for finite z >= 0"
    );
    if z == 0.0 {
        1.0
    } else if z < PHI_SERIES_CUTOFF {
        1.0 - 0.5 * z
    } else {
        -(-z).exp_m1() / z
    }
}

/// Terminal deviation `x_fi - (c/n) 1` when only node `i` is controlled:
/// `c * sum_{k>=2} phi(lambda_k t_f) (u_k' e_i) u_k`.
///
/// The result is orthogonal to the all-ones vector.
pub fn terminal_deviation(
    dec: &SpectralDecomposition,
    node: usize,
    horizon: f64,
    threshold: f64,
) -> DVector<f64> {
    assert!(
        horizon > 0.0 && horizon.is_finite(),
        "horizon must be positive and finite"
    );
    assert!(
        threshold > 0.0 && threshold.is_finite(),
        "threshold must be positive and finite"
    );
    let n = dec.n();
    let mut deviation = DVector::zeros(n);
    for k in 1..n {
        let weight = threshold * phi(dec.eigenvalues()[k] * horizon) * dec.component(node, k);
        deviation.axpy(weight, &dec.basis().column(k), 1.0);
    }
    deviation
}

/// All per-node terminal deviations at one horizon, with their norms.
#[derive(Debug, Clone, PartialEq)]
pub struct UCentralityProfile {
    horizon: f64,
    threshold: f64,
    /// Column `i` holds `x_fi - (c/n) 1`.
    deviations: DMatrix<f64>,
    scores: Vec<f64>,
}

impl UCentralityProfile {
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Deviation vector of node `i`.
    pub fn deviation(&self, i: usize) -> DVector<f64> {
        self.deviations.column(i).clone_owned()
    }

    /// Euclidean norms of the deviation columns.
    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// The profile as a centrality vector (lower is central).
    pub fn centrality(&self) -> CentralityVector {
        CentralityVector::new(Measure::U, self.scores.clone(), Orientation::LowerIsCentral)
    }
}

/// Scores every node at the given horizon and threshold. Per-node columns
/// are independent, so they are computed in parallel.
pub fn u_centrality(
    dec: &SpectralDecomposition,
    horizon: f64,
    threshold: f64,
) -> UCentralityProfile {
    let n = dec.n();
    let columns: Vec<DVector<f64>> = (0..n)
        .into_par_iter()
        .map(|i| terminal_deviation(dec, i, horizon, threshold))
        .collect();
    let mut deviations = DMatrix::zeros(n, n);
    let mut scores = Vec::with_capacity(n);
    for (i, column) in columns.iter().enumerate() {
        deviations.set_column(i, column);
        scores.push(column.norm());
    }
    UCentralityProfile {
        horizon,
        threshold,
        deviations,
        scores,
    }
}

/// Exact first-order rate at which node `i`'s score departs from the common
/// small-horizon value `c sqrt((n-1)/n)`: `-(c/2) sqrt(n/(n-1)) d_i`.
pub fn small_tf_slope(g: &Graph, threshold: f64) -> Vec<f64> {
    let n = g.node_count() as f64;
    let factor = -(threshold / 2.0) * (n / (n - 1.0)).sqrt();
    g.degrees().iter().map(|&d| factor * d as f64).collect()
}

/// Column norms of the Laplacian pseudoinverse (lower is central); the shape
/// the horizon-dependent scores converge to as the horizon grows.
pub fn laplacian_inverse_centrality(pinv: &PseudoinverseMatrix) -> CentralityVector {
    CentralityVector::new(
        Measure::LaplacianInverse,
        pinv.column_norms(),
        Orientation::LowerIsCentral,
    )
}

/// Large-horizon approximation of the per-node scores:
/// `(c / t_f) * ||pinv column i||`.
pub fn large_tf_asymptote(dec: &SpectralDecomposition, horizon: f64, threshold: f64) -> Vec<f64> {
    assert!(
        horizon > 0.0 && horizon.is_finite(),
        "horizon must be positive and finite"
    );
    let factor = threshold / horizon;
    pseudoinverse(dec)
        .column_norms()
        .iter()
        .map(|norm| factor * norm)
        .collect()
}

fn require_tree(dist: &DistanceMatrix) -> Result<()> {
    // Unit distances mark edges; a connected graph is a tree iff it has
    // exactly n - 1 of them. Connectivity is guaranteed by construction of
    // the distance matrix.
    let n = dist.n();
    let mut edges = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if dist.get(i, j) == 1 {
                edges += 1;
            }
        }
    }
    if n >= 1 && edges == n - 1 {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Pseudoinverse of a tree Laplacian from hop distances alone:
/// `pinv_ij = ((D_i + D_j)/n - d_ij - W/n^2) / 2`.
pub fn tree_pseudoinverse(dist: &DistanceMatrix) -> Result<PseudoinverseMatrix> {
    require_tree(dist)?;
    let n = dist.n();
    let nf = n as f64;
    let total_term = dist.total() as f64 / (nf * nf);
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let row_term = (dist.row_sum(i) + dist.row_sum(j)) as f64 / nf;
            let value = 0.5 * (row_term - dist.get(i, j) as f64 - total_term);
            m[(i, j)] = value;
            m[(j, i)] = value;
        }
    }
    Ok(PseudoinverseMatrix::from_matrix(m))
}

/// The three groupings of `4 ||pinv e_i||^2` on a tree. `common` is shared by
/// every node; `variance` is the empirical variance of node `i`'s distances;
/// `cross` couples node `i`'s distance profile with the other nodes' totals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeScoreTerms {
    pub common: f64,
    pub variance: f64,
    pub cross: f64,
}

impl TreeScoreTerms {
    /// Reassembles `||pinv e_i||^2`.
    pub fn reconstruct(&self) -> f64 {
        0.25 * (self.common + self.variance + self.cross)
    }
}

/// Splits `4 ||pinv e_i||^2` on a tree into its distance-based terms:
/// `sum_j D_j^2/n^2 - W^2/n^3` (common), `sum_j (D_i/n - d_ij)^2` (variance)
/// and `2 sum_j (D_j/n)(D_i/n - d_ij)` (cross).
pub fn tree_score_decomposition(dist: &DistanceMatrix, node: usize) -> Result<TreeScoreTerms> {
    require_tree(dist)?;
    let n = dist.n();
    let nf = n as f64;
    let mean_i = dist.row_sum(node) as f64 / nf;
    let total = dist.total() as f64;

    let mut row_square_sum = 0.0;
    let mut variance = 0.0;
    let mut cross = 0.0;
    for j in 0..n {
        let row_j = dist.row_sum(j) as f64;
        row_square_sum += row_j * row_j;
        let gap = mean_i - dist.get(node, j) as f64;
        variance += gap * gap;
        cross += 2.0 * (row_j / nf) * gap;
    }
    let common = row_square_sum / (nf * nf) - total * total / (nf * nf * nf);
    Ok(TreeScoreTerms {
        common,
        variance,
        cross,
    })
}
