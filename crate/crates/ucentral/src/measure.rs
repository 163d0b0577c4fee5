//! Shared centrality vocabulary: measure identifiers, orientation, score
//! vectors, rankings and tie sets.

use std::fmt;
use std::str::FromStr;

/// Whether smaller or larger scores mean "more central".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    LowerIsCentral,
    HigherIsCentral,
}

impl Orientation {
    /// The identifier used in serialized reports.
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::LowerIsCentral => "lower",
            Orientation::HigherIsCentral => "higher",
        }
    }
}

/// The measures exposed by the library and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    U,
    LaplacianInverse,
    Degree,
    Eigenvector,
    Closeness,
    Variance,
    CurrentFlowCloseness,
    CurrentFlowVariance,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::U,
        Measure::LaplacianInverse,
        Measure::Degree,
        Measure::Eigenvector,
        Measure::Closeness,
        Measure::Variance,
        Measure::CurrentFlowCloseness,
        Measure::CurrentFlowVariance,
    ];

    /// Command-line identifier.
    pub fn id(self) -> &'static str {
        match self {
            Measure::U => "u",
            Measure::LaplacianInverse => "linv",
            Measure::Degree => "degree",
            Measure::Eigenvector => "eigenvector",
            Measure::Closeness => "closeness",
            Measure::Variance => "variance",
            Measure::CurrentFlowCloseness => "cf-closeness",
            Measure::CurrentFlowVariance => "cf-variance",
        }
    }

    /// Orientation of the measure's raw scores.
    pub fn orientation(self) -> Orientation {
        match self {
            Measure::Degree | Measure::Eigenvector => Orientation::HigherIsCentral,
            _ => Orientation::LowerIsCentral,
        }
    }

    /// True for measures that depend only on graph structure (every measure
    /// except the horizon-dependent one).
    pub fn is_structural(self) -> bool {
        !matches!(self, Measure::U)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| format!("unknown measure {s:?}"))
    }
}

/// Relative tolerance under which two scores count as tied.
///
/// Bit-exact ties do not survive floating-point spectral computations even
/// for automorphic nodes, so tie detection allows this much relative slack.
pub const TIE_RTOL: f64 = 1e-9;

/// True if `a` and `b` are tied under [`TIE_RTOL`].
pub fn scores_tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_RTOL * a.abs().max(b.abs())
}

/// Per-node scores of one measure, with the orientation needed to interpret
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    measure: Measure,
    scores: Vec<f64>,
    orientation: Orientation,
}

impl CentralityVector {
    /// Wraps finite per-node scores. Panics on non-finite entries.
    pub fn new(measure: Measure, scores: Vec<f64>, orientation: Orientation) -> Self {
        assert!(
            scores.iter().all(|s| s.is_finite()),
            "centrality scores must be finite"
        );
        CentralityVector {
            measure,
            scores,
            orientation,
        }
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Every index attaining the extremum (argmin for lower-is-central,
    /// argmax otherwise), as a full tie set sorted by index.
    pub fn central_set(&self) -> Vec<usize> {
        if self.scores.is_empty() {
            return Vec::new();
        }
        let best = match self.orientation {
            Orientation::LowerIsCentral => {
                self.scores.iter().copied().fold(f64::INFINITY, f64::min)
            }
            Orientation::HigherIsCentral => self
                .scores
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max),
        };
        (0..self.scores.len())
            .filter(|&i| scores_tied(self.scores[i], best))
            .collect()
    }

    /// Node indices ordered most-central first; exact score ties keep index
    /// order.
    pub fn ranking(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.scores.len()).collect();
        order.sort_by(|&a, &b| {
            let cmp = match self.orientation {
                Orientation::LowerIsCentral => self.scores[a].total_cmp(&self.scores[b]),
                Orientation::HigherIsCentral => self.scores[b].total_cmp(&self.scores[a]),
            };
            cmp.then(a.cmp(&b))
        });
        order
    }

    /// 1-based competition ranks per node: the most central node has rank 1,
    /// tied nodes share the rank of the first of their group.
    pub fn ranks(&self) -> Vec<usize> {
        let order = self.ranking();
        let mut ranks = vec![0; self.scores.len()];
        let mut current = 1;
        for (position, &node) in order.iter().enumerate() {
            if position > 0 && !scores_tied(self.scores[node], self.scores[order[position - 1]]) {
                current = position + 1;
            }
            ranks[node] = current;
        }
        ranks
    }
}
