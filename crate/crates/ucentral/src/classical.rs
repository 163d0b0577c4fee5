//! Structural comparison measures: degree, eigenvector, closeness, variance,
//! and the resistance-based current-flow pair.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::measure::{CentralityVector, Measure, Orientation};
use crate::spectral::PseudoinverseMatrix;

/// Degree centrality: the raw degree of each node, higher is central.
pub fn degree_centrality(g: &Graph) -> CentralityVector {
    let scores = g.degrees().iter().map(|&d| d as f64).collect();
    CentralityVector::new(Measure::Degree, scores, Orientation::HigherIsCentral)
}

/// Perron vector of the adjacency matrix by power iteration, normalized to
/// unit Euclidean norm, higher is central.
///
/// Iterates on `A + I`, which leaves the Perron vector unchanged but removes
/// the sign oscillation bipartite graphs would otherwise exhibit. Starts from
/// the all-ones vector and stops when successive iterates differ by less than
/// `tol` in max-norm.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iters: usize) -> Result<CentralityVector> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.node_count();
    let shifted = g.adjacency_matrix() + DMatrix::<f64>::identity(n, n);
    let mut v = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    for _ in 0..max_iters {
        let mut next = &shifted * &v;
        next.normalize_mut();
        let diff = (&next - &v).amax();
        v = next;
        if diff < tol {
            return Ok(CentralityVector::new(
                Measure::Eigenvector,
                v.iter().copied().collect(),
                Orientation::HigherIsCentral,
            ));
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iters,
    })
}

/// Default power-iteration settings used by the CLI.
pub const EIGENVECTOR_TOL: f64 = 1e-12;
pub const EIGENVECTOR_MAX_ITERS: usize = 100_000;

/// Closeness centrality: the distance row sum `D_i`, lower is central.
pub fn closeness_centrality(dist: &DistanceMatrix) -> CentralityVector {
    let scores = (0..dist.n()).map(|i| dist.row_sum(i) as f64).collect();
    CentralityVector::new(Measure::Closeness, scores, Orientation::LowerIsCentral)
}

/// Variance centrality: `sum_j (D_i/n - d_ij)^2`, lower is central.
pub fn variance_centrality(dist: &DistanceMatrix) -> CentralityVector {
    let n = dist.n();
    let scores = (0..n)
        .map(|i| {
            let mean = dist.row_sum(i) as f64 / n as f64;
            (0..n).map(|j| (mean - dist.get(i, j) as f64).powi(2)).sum()
        })
        .collect();
    CentralityVector::new(Measure::Variance, scores, Orientation::LowerIsCentral)
}

/// Effective resistances between all node pairs (unit-conductance edges).
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    matrix: DMatrix<f64>,
}

impl ResistanceMatrix {
    /// Dimension (node count).
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Resistance between nodes `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    /// Row sum `R_i = sum_j R_ij`.
    pub fn row_sum(&self, i: usize) -> f64 {
        self.matrix.row(i).sum()
    }
}

/// Entrywise `R_ij = pinv_ii + pinv_jj - 2 pinv_ij`; symmetric with a zero
/// diagonal.
pub fn resistance_distances(pinv: &PseudoinverseMatrix) -> ResistanceMatrix {
    let n = pinv.n();
    let mut matrix = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let r = pinv.get(i, i) + pinv.get(j, j) - 2.0 * pinv.get(i, j);
            matrix[(i, j)] = r;
            matrix[(j, i)] = r;
        }
    }
    ResistanceMatrix { matrix }
}

/// Current-flow closeness: resistance row sums, lower is central.
pub fn current_flow_closeness(r: &ResistanceMatrix) -> CentralityVector {
    let scores = (0..r.n()).map(|i| r.row_sum(i)).collect();
    CentralityVector::new(
        Measure::CurrentFlowCloseness,
        scores,
        Orientation::LowerIsCentral,
    )
}

/// Current-flow variance: `sum_j (R_i/n - R_ij)^2`, lower is central.
pub fn current_flow_variance(r: &ResistanceMatrix) -> CentralityVector {
    let n = r.n();
    let scores = (0..n)
        .map(|i| {
            let mean = r.row_sum(i) / n as f64;
            (0..n).map(|j| (mean - r.get(i, j)).powi(2)).sum()
        })
        .collect();
    CentralityVector::new(
        Measure::CurrentFlowVariance,
        scores,
        Orientation::LowerIsCentral,
    )
}
