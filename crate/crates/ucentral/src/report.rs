//! Serialized output formats: the JSON centrality report, CSV tables and
//! DOT export with nodes colored by centrality.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::measure::{CentralityVector, Orientation};
use crate::sweep::SweepReport;

/// JSON report for a single measure. Field order is part of the format.
/// `tf` is `null` for structural measures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityReport {
    pub nodes: Vec<String>,
    pub measure: String,
    pub tf: Option<f64>,
    pub c: f64,
    pub orientation: String,
    pub values: Vec<f64>,
    pub ranking: Vec<String>,
    pub central_nodes: Vec<String>,
}

impl CentralityReport {
    pub fn new(g: &Graph, cv: &CentralityVector, tf: Option<f64>, c: f64) -> Self {
        let label = |&i: &usize| g.label(i).to_string();
        CentralityReport {
            nodes: g.labels().to_vec(),
            measure: cv.measure().id().to_string(),
            tf,
            c,
            orientation: cv.orientation().as_str().to_string(),
            values: cv.scores().to_vec(),
            ranking: cv.ranking().iter().map(label).collect(),
            central_nodes: cv.central_set().iter().map(label).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// CSV with fixed columns `node,score,rank`.
pub fn centrality_csv(g: &Graph, cv: &CentralityVector) -> String {
    let ranks = cv.ranks();
    let mut out = String::from("node,score,rank\n");
    for (i, score) in cv.scores().iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", g.label(i), score, ranks[i]));
    }
    out
}

/// Sweep CSV with fixed columns `tf,node,score,rank`, one row per grid point
/// and node.
pub fn sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from("tf,node,score,rank\n");
    for (p, &tf) in report.tf_grid.iter().enumerate() {
        for (i, node) in report.nodes.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                tf, node, report.scores[p][i], report.ranks[p][i]
            ));
        }
    }
    out
}

/// Eight-bucket palette from warm (most central) to cool (least central).
pub const PALETTE: [&str; 8] = [
    "#d73027", "#f46d43", "#fdae61", "#fee090", "#e0f3f8", "#abd9e9", "#74add1", "#4575b4",
];

fn quote(label: &str) -> String {
    let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

/// Undirected DOT output with each node filled by its centrality bucket.
/// Scores are min-max normalized with the measure's orientation so warm
/// always means central; a degenerate (constant) range maps every node to
/// the warmest bucket.
pub fn dot_export(g: &Graph, cv: &CentralityVector) -> String {
    let scores = cv.scores();
    let min = scores.iter().copied().fold(f64::INFINITY, f64::min);
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let intensity = |score: f64| -> f64 {
        if max <= min {
            return 1.0;
        }
        match cv.orientation() {
            Orientation::LowerIsCentral => (max - score) / (max - min),
            Orientation::HigherIsCentral => (score - min) / (max - min),
        }
    };
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for (i, label) in g.labels().iter().enumerate() {
        let bucket = (((1.0 - intensity(scores[i])) * 8.0).floor() as usize).min(7);
        out.push_str(&format!(
            "  {} [fillcolor={}];\n",
            quote(label),
            quote(PALETTE[bucket])
        ));
    }
    for &(i, j) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            quote(g.label(i)),
            quote(g.label(j))
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::compute_measure;
    use crate::graph::parse_edge_list;
    use crate::measure::Measure;

    fn p3() -> Graph {
        parse_edge_list("a b\nb c").unwrap()
    }

    #[test]
    fn json_report_round_trips() {
        let g = p3();
        let cv = compute_measure(&g, Measure::U, Some(1.0), 1.0).unwrap();
        let report = CentralityReport::new(&g, &cv, Some(1.0), 1.0);
        let back: CentralityReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(report, back);
        assert_eq!(report.central_nodes, vec!["b"]);
        assert_eq!(report.ranking[0], "b");
        assert_eq!(report.orientation, "lower");
    }

    #[test]
    fn structural_measures_report_null_tf() {
        let g = p3();
        let cv = compute_measure(&g, Measure::Degree, None, 1.0).unwrap();
        let report = CentralityReport::new(&g, &cv, None, 1.0);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert!(value["tf"].is_null());
        assert_eq!(value["values"], serde_json::json!([1.0, 2.0, 1.0]));
    }

    #[test]
    fn csv_layout_is_fixed() {
        let g = p3();
        let cv = compute_measure(&g, Measure::Degree, None, 1.0).unwrap();
        let csv = centrality_csv(&g, &cv);
        assert_eq!(csv, "node,score,rank\na,1,2\nb,2,1\nc,1,2\n");
    }

    #[test]
    fn dot_marks_the_central_node_warmest() {
        let g = p3();
        let cv = compute_measure(&g, Measure::U, Some(1.0), 1.0).unwrap();
        let dot = dot_export(&g, &cv);
        assert!(dot.contains(&format!("\"b\" [fillcolor=\"{}\"];", PALETTE[0])));
        assert!(!dot.contains(&format!("\"a\" [fillcolor=\"{}\"];", PALETTE[0])));
        assert!(dot.contains("\"a\" -- \"b\";"));
    }

    #[test]
    fn dot_maps_constant_scores_to_the_warmest_bucket() {
        let g = parse_edge_list("a b\nb c\nc a").unwrap();
        let cv = compute_measure(&g, Measure::Degree, None, 1.0).unwrap();
        let dot = dot_export(&g, &cv);
        for label in ["a", "b", "c"] {
            assert!(dot.contains(&format!("\"{label}\" [fillcolor=\"{}\"];", PALETTE[0])));
        }
    }

    #[test]
    fn dot_quotes_awkward_labels() {
        let g = Graph::new(vec!["with\"quote", "plain"], &[(0, 1)]).unwrap();
        let cv = compute_measure(&g, Measure::Degree, None, 1.0).unwrap();
        let dot = dot_export(&g, &cv);
        assert!(dot.contains("\"with\\\"quote\" -- \"plain\";"));
    }
}
