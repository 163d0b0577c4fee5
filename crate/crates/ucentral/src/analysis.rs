//! One-call evaluation of any measure on a graph, plus the bundle of
//! structural references the sweep compares against.

use crate::classical::{
    closeness_centrality, current_flow_closeness, current_flow_variance, degree_centrality,
    eigenvector_centrality, resistance_distances, variance_centrality, EIGENVECTOR_MAX_ITERS,
    EIGENVECTOR_TOL,
};
use crate::error::Result;
use crate::graph::{all_pairs_hop_distances, laplacian, Graph};
use crate::measure::{CentralityVector, Measure};
use crate::spectral::{decompose, pseudoinverse};
use crate::ucentrality::{laplacian_inverse_centrality, u_centrality};

/// Computes one measure. `horizon` is consulted only by the horizon-dependent
/// measure and must be present for it; every measure except degree requires a
/// connected graph.
pub fn compute_measure(
    g: &Graph,
    measure: Measure,
    horizon: Option<f64>,
    threshold: f64,
) -> Result<CentralityVector> {
    match measure {
        Measure::Degree => Ok(degree_centrality(g)),
        Measure::Eigenvector => eigenvector_centrality(g, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITERS),
        Measure::Closeness => Ok(closeness_centrality(&all_pairs_hop_distances(g)?)),
        Measure::Variance => Ok(variance_centrality(&all_pairs_hop_distances(g)?)),
        Measure::U => {
            let horizon = horizon.expect("the u measure needs a horizon");
            let dec = decompose(&laplacian(g))?;
            Ok(u_centrality(&dec, horizon, threshold).centrality())
        }
        Measure::LaplacianInverse => {
            let dec = decompose(&laplacian(g))?;
            Ok(laplacian_inverse_centrality(&pseudoinverse(&dec)))
        }
        Measure::CurrentFlowCloseness => {
            let dec = decompose(&laplacian(g))?;
            Ok(current_flow_closeness(&resistance_distances(
                &pseudoinverse(&dec),
            )))
        }
        Measure::CurrentFlowVariance => {
            let dec = decompose(&laplacian(g))?;
            Ok(current_flow_variance(&resistance_distances(
                &pseudoinverse(&dec),
            )))
        }
    }
}

/// The seven structural measures, in the order sweeps report them.
pub const REFERENCE_MEASURES: [Measure; 7] = [
    Measure::Degree,
    Measure::Eigenvector,
    Measure::Closeness,
    Measure::Variance,
    Measure::CurrentFlowCloseness,
    Measure::CurrentFlowVariance,
    Measure::LaplacianInverse,
];

/// Evaluates all structural reference measures at once, sharing the spectral
/// and distance computations.
pub fn reference_centralities(g: &Graph) -> Result<Vec<CentralityVector>> {
    let dist = all_pairs_hop_distances(g)?;
    let dec = decompose(&laplacian(g))?;
    let pinv = pseudoinverse(&dec);
    let resistance = resistance_distances(&pinv);
    Ok(vec![
        degree_centrality(g),
        eigenvector_centrality(g, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITERS)?,
        closeness_centrality(&dist),
        variance_centrality(&dist),
        current_flow_closeness(&resistance),
        current_flow_variance(&resistance),
        laplacian_inverse_centrality(&pinv),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::parse_edge_list;

    #[test]
    fn every_measure_computes_on_a_connected_graph() {
        let g = parse_edge_list("a b\nb c\nc d\nd a").unwrap();
        for measure in Measure::ALL {
            let cv = compute_measure(&g, measure, Some(1.0), 1.0).unwrap();
            assert_eq!(cv.len(), 4);
            assert_eq!(cv.measure(), measure);
        }
    }

    #[test]
    fn only_degree_tolerates_disconnection() {
        let g = parse_edge_list("a b\nc d").unwrap();
        assert!(compute_measure(&g, Measure::Degree, None, 1.0).is_ok());
        for measure in Measure::ALL.into_iter().filter(|m| *m != Measure::Degree) {
            let err = compute_measure(&g, measure, Some(1.0), 1.0).unwrap_err();
            assert_eq!(err, Error::Disconnected);
        }
    }

    #[test]
    fn reference_order_matches_ids() {
        let g = parse_edge_list("a b\nb c").unwrap();
        let refs = reference_centralities(&g).unwrap();
        assert_eq!(refs.len(), REFERENCE_MEASURES.len());
        for (cv, measure) in refs.iter().zip(REFERENCE_MEASURES) {
            assert_eq!(cv.measure(), measure);
        }
    }
}
