//! Kendall rank correlation between centrality score vectors.

use crate::measure::{scores_tied, Orientation};

/// A tau value plus a degeneracy flag for inputs where the coefficient is
/// undefined (no comparable pairs); such inputs report `tau = 0.0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankCorrelation {
    pub tau: f64,
    pub degenerate: bool,
}

fn oriented(scores: &[f64], orientation: Orientation) -> Vec<f64> {
    match orientation {
        Orientation::HigherIsCentral => scores.to_vec(),
        Orientation::LowerIsCentral => scores.iter().map(|s| -s).collect(),
    }
}

/// Tie-corrected Kendall tau-b between two score vectors, computed after
/// flipping each input so that higher always means more central. Scores
/// within the crate-wide tie tolerance count as tied. O(n^2) pair counting.
pub fn kendall_tau(
    scores_a: &[f64],
    orientation_a: Orientation,
    scores_b: &[f64],
    orientation_b: Orientation,
) -> RankCorrelation {
    assert_eq!(
        scores_a.len(),
        scores_b.len(),
        "score vectors must have equal length"
    );
    assert!(scores_a.len() >= 2, "need at least two nodes to rank");
    let a = oriented(scores_a, orientation_a);
    let b = oriented(scores_b, orientation_b);

    let n = a.len();
    let total_pairs = (n * (n - 1) / 2) as f64;
    let mut concordant = 0.0f64;
    let mut discordant = 0.0f64;
    let mut tied_a = 0.0f64;
    let mut tied_b = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let a_tied = scores_tied(a[i], a[j]);
            let b_tied = scores_tied(b[i], b[j]);
            if a_tied {
                tied_a += 1.0;
            }
            if b_tied {
                tied_b += 1.0;
            }
            if !a_tied && !b_tied {
                if (a[i] - a[j]).signum() == (b[i] - b[j]).signum() {
                    concordant += 1.0;
                } else {
                    discordant += 1.0;
                }
            }
        }
    }
    let denominator = (total_pairs - tied_a) * (total_pairs - tied_b);
    if denominator <= 0.0 {
        return RankCorrelation {
            tau: 0.0,
            degenerate: true,
        };
    }
    RankCorrelation {
        tau: ((concordant - discordant) / denominator.sqrt()).clamp(-1.0, 1.0),
        degenerate: false,
    }
}

/// Kendall tau restricted to pairs whose *second* (reference) scores are
/// distinct: `(C - D) / P` over those `P` pairs. Equals 1 exactly when every
/// reference-distinct pair is ordered the same way by both inputs.
pub fn kendall_tau_distinct(
    scores_a: &[f64],
    orientation_a: Orientation,
    scores_b: &[f64],
    orientation_b: Orientation,
) -> RankCorrelation {
    assert_eq!(
        scores_a.len(),
        scores_b.len(),
        "score vectors must have equal length"
    );
    assert!(scores_a.len() >= 2, "need at least two nodes to rank");
    let a = oriented(scores_a, orientation_a);
    let b = oriented(scores_b, orientation_b);

    let n = a.len();
    let mut comparable = 0.0f64;
    let mut balance = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            if scores_tied(b[i], b[j]) {
                continue;
            }
            comparable += 1.0;
            if !scores_tied(a[i], a[j]) {
                if (a[i] - a[j]).signum() == (b[i] - b[j]).signum() {
                    balance += 1.0;
                } else {
                    balance -= 1.0;
                }
            }
        }
    }
    if comparable == 0.0 {
        return RankCorrelation {
            tau: 0.0,
            degenerate: true,
        };
    }
    RankCorrelation {
        tau: balance / comparable,
        degenerate: false,
    }
}
