//! Control-horizon centrality for Laplacian consensus dynamics.
//!
//! For a connected undirected graph running consensus dynamics
//! `x' = -L x + B u`, the minimum-energy input that drives the aggregate
//! state from zero to a threshold `c` at time `t_f` through a single node
//! lands the system at a node-dependent terminal state. Its distance from
//! the consensus point scores the node: small distance, central node. The
//! measure interpolates between degree centrality (short horizons) and the
//! column norms of the Laplacian pseudoinverse (long horizons).
//!
//! The crate provides:
//!
//! - graph ingestion, Laplacians, hop distances ([`graph`]);
//! - a pinned-kernel symmetric eigendecomposition and the Moore-Penrose
//!   pseudoinverse ([`spectral`]);
//! - the minimum-energy control solution plus an independent verification
//!   path through quadrature Gramians and RK4 simulation ([`control`]);
//! - the horizon-dependent scores, their asymptotic regimes and the tree
//!   closed form ([`ucentrality`]);
//! - six structural comparison measures ([`classical`]);
//! - horizon sweeps with Kendall rank correlations ([`sweep`], [`rank`]);
//! - deterministic graph generators and report serialization ([`generate`],
//!   [`report`]).

pub mod analysis;
pub mod classical;
pub mod control;
pub mod error;
pub mod generate;
pub mod graph;
pub mod measure;
pub mod rank;
pub mod report;
pub mod spectral;
pub mod sweep;
pub mod ucentrality;

pub use analysis::{compute_measure, reference_centralities, REFERENCE_MEASURES};
pub use error::{Error, ParseKind, Result};
pub use graph::{
    all_pairs_hop_distances, laplacian, parse_edge_list, DistanceMatrix, Graph, LaplacianMatrix,
};
pub use measure::{CentralityVector, Measure, Orientation};
pub use spectral::{decompose, pseudoinverse, PseudoinverseMatrix, SpectralDecomposition};
