//! Graph representation, edge-list ingestion, Laplacian construction and
//! hop-distance computation.
//!
//! Graphs are simple and undirected: string labels map to dense indices in
//! first-appearance order, edges are unordered index pairs without self-loops
//! or duplicates. All values are immutable after construction and safe to
//! share across threads.

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{Error, ParseKind, Result};

/// A simple undirected graph with labelled nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    labels: Vec<String>,
    /// Normalized edges: `(i, j)` with `i < j`, sorted, deduplicated.
    edges: Vec<(usize, usize)>,
    /// Sorted adjacency lists, one per node.
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from labels and index edges. Edges may appear in either
    /// orientation and duplicates are collapsed.
    pub fn new<S: Into<String>>(labels: Vec<S>, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if seen.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate label {label:?}")));
            }
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} nodes"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at node {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &normalized {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            labels,
            edges: normalized,
            neighbors,
        })
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of (undirected) edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Node labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of node `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the node carrying `label`, if any.
    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Normalized edge list: `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of node `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Degree of node `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    /// Degree vector.
    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let n = self.node_count();
        let mut a = DMatrix::zeros(n, n);
        for &(i, j) in &self.edges {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        a
    }

    /// True iff every node is reachable from node 0. The empty graph counts
    /// as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        reachable_count(&self.neighbors, 0) == n
    }

    /// True iff the graph is connected and cycle-free (|E| = n - 1).
    pub fn is_tree(&self) -> bool {
        self.node_count() >= 1 && self.edge_count() == self.node_count() - 1 && self.is_connected()
    }
}

fn reachable_count(neighbors: &[Vec<usize>], start: usize) -> usize {
    let mut seen = vec![false; neighbors.len()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    let mut count = 0;
    while let Some(u) = queue.pop_front() {
        count += 1;
        for &v in &neighbors[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    count
}

/// Parses an edge list: one edge per line as two whitespace-separated label
/// tokens. Blank lines and lines starting with `#` are ignored. Labels are
/// assigned dense indices in first-appearance order; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                kind: ParseKind::TokenCount(tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Parse {
                line: lineno + 1,
                kind: ParseKind::SelfLoop,
            });
        }
        let mut id = |token: &str| -> usize {
            *index.entry(token.to_string()).or_insert_with(|| {
                labels.push(token.to_string());
                labels.len() - 1
            })
        };
        let a = id(tokens[0]);
        let b = id(tokens[1]);
        edges.push((a, b));
    }
    Graph::new(labels, &edges)
}

/// Graph Laplacian `L = diag(d) - A` together with the integer degree vector.
///
/// Rows sum to zero exactly (integer arithmetic embedded in f64), the matrix
/// is symmetric and positive semidefinite, and `L 1 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix {
    matrix: DMatrix<f64>,
    degrees: Vec<usize>,
}

impl LaplacianMatrix {
    /// Dimension (node count).
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// The dense Laplacian.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Integer degrees.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Adjacency structure recovered from the off-diagonal pattern.
    pub(crate) fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut lists = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if self.matrix[(i, j)] != 0.0 {
                    lists[i].push(j);
                    lists[j].push(i);
                }
            }
        }
        lists
    }

    /// True iff the off-diagonal pattern describes a connected graph.
    pub(crate) fn pattern_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        reachable_count(&self.neighbor_lists(), 0) == n
    }
}

/// Builds the Laplacian of a graph.
pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.node_count();
    let mut m = DMatrix::zeros(n, n);
    for &(i, j) in g.edges() {
        m[(i, j)] = -1.0;
        m[(j, i)] = -1.0;
    }
    let degrees = g.degrees();
    for (i, &d) in degrees.iter().enumerate() {
        m[(i, i)] = d as f64;
    }
    LaplacianMatrix { matrix: m, degrees }
}

/// All-pairs hop distances of a connected graph, with per-node row sums and
/// the grand total.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<usize>,
    row_sums: Vec<usize>,
    total: usize,
}

impl DistanceMatrix {
    /// Dimension (node count).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance between nodes `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.dist[i * self.n + j]
    }

    /// Row sum `D_i = sum_j d_ij`.
    pub fn row_sum(&self, i: usize) -> usize {
        self.row_sums[i]
    }

    /// Grand total `W = sum_i D_i`.
    pub fn total(&self) -> usize {
        self.total
    }
}

/// BFS from every node. Fails with `Disconnected` if any pair is unreachable.
/// Sources are processed in parallel; the result is deterministic.
pub fn all_pairs_hop_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.node_count();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|source| {
            let mut row = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            row[source] = 0;
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if row[v] == usize::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            row
        })
        .collect();
    let mut dist = Vec::with_capacity(n * n);
    let mut row_sums = Vec::with_capacity(n);
    for row in rows {
        let sum: usize = row.iter().sum();
        row_sums.push(sum);
        dist.extend(row);
    }
    let total = row_sums.iter().sum();
    Ok(DistanceMatrix {
        n,
        dist,
        row_sums,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        parse_edge_list("a b\nb c\n").unwrap()
    }

    fn k3() -> Graph {
        parse_edge_list("a b\nb c\nc a\n").unwrap()
    }

    #[test]
    fn parse_assigns_indices_in_first_appearance_order() {
        let g = p3();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_collapses_duplicate_edges_in_both_orientations() {
        let g = parse_edge_list("a b\nb a\na b\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parse_rejects_self_loop_with_line_number() {
        let err = parse_edge_list("a a\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                kind: ParseKind::SelfLoop
            }
        );
    }

    #[test]
    fn parse_rejects_wrong_token_count_with_line_number() {
        let err = parse_edge_list("a b\nc\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                kind: ParseKind::TokenCount(1)
            }
        );
        // Three tokens also rejected: no weighted edges.
        let err = parse_edge_list("a b 2.5\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                kind: ParseKind::TokenCount(3)
            }
        );
    }

    #[test]
    fn parse_skips_blanks_and_comments_but_counts_their_lines() {
        let err = parse_edge_list("# header\n\na b\nx x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 4,
                kind: ParseKind::SelfLoop
            }
        );
    }

    #[test]
    fn laplacian_of_path() {
        let l = laplacian(&p3());
        let expected =
            DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        assert_eq!(l.matrix(), &expected);
        assert_eq!(l.degrees(), &[1, 2, 1]);
    }

    #[test]
    fn laplacian_of_triangle() {
        let l = laplacian(&k3());
        let expected =
            DMatrix::from_row_slice(3, 3, &[2.0, -1.0, -1.0, -1.0, 2.0, -1.0, -1.0, -1.0, 2.0]);
        assert_eq!(l.matrix(), &expected);
    }

    #[test]
    fn laplacian_of_edgeless_graph_is_zero() {
        let g = Graph::new(vec!["a", "b"], &[]).unwrap();
        let l = laplacian(&g);
        assert_eq!(l.matrix(), &DMatrix::zeros(2, 2));
    }

    #[test]
    fn connectivity_and_tree_checks() {
        assert!(p3().is_connected());
        assert!(p3().is_tree());
        assert!(k3().is_connected());
        assert!(!k3().is_tree()); // 3 edges, n - 1 = 2
        let disjoint = parse_edge_list("a b\nc d\n").unwrap();
        assert!(!disjoint.is_connected());
        assert!(!disjoint.is_tree());
    }

    #[test]
    fn hop_distances_on_path() {
        let d = all_pairs_hop_distances(&p3()).unwrap();
        let expected = [0, 1, 2, 1, 0, 1, 2, 1, 0];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), expected[i * 3 + j]);
            }
        }
        assert_eq!((d.row_sum(0), d.row_sum(1), d.row_sum(2)), (3, 2, 3));
        assert_eq!(d.total(), 8);
    }

    #[test]
    fn hop_distances_on_triangle() {
        let d = all_pairs_hop_distances(&k3()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), usize::from(i != j));
            }
        }
        assert_eq!(d.total(), 6);
    }

    #[test]
    fn hop_distances_on_star() {
        // Center first: D_center = 3, D_leaf = 1 + 2 + 2 = 5, W = 18.
        let g = parse_edge_list("hub a\nhub b\nhub c\n").unwrap();
        let d = all_pairs_hop_distances(&g).unwrap();
        assert_eq!(d.row_sum(0), 3);
        for leaf in 1..4 {
            assert_eq!(d.row_sum(leaf), 5);
        }
        assert_eq!(d.total(), 18);
    }

    #[test]
    fn hop_distances_reject_disconnected() {
        let g = parse_edge_list("a b\nc d\n").unwrap();
        assert_eq!(
            all_pairs_hop_distances(&g).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Graph::new(vec!["a", "a"], &[]).is_err());
        assert!(Graph::new(vec!["a", "b"], &[(0, 2)]).is_err());
        assert!(Graph::new(vec!["a", "b"], &[(1, 1)]).is_err());
    }
}
