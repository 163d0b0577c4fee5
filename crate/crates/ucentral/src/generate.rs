//! Built-in graph generators. Nodes are labelled "0", "1", ... in index
//! order; random generators are fully determined by their seed.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn with_numeric_labels(n: usize, edges: &[(usize, usize)]) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Graph::new(labels, edges).expect("generator produced an invalid graph")
}

/// Path graph on `n >= 1` nodes: 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path needs at least one node");
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    with_numeric_labels(n, &edges)
}

/// Star graph on `n >= 1` nodes with node 0 as the hub.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1, "star needs at least one node");
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    with_numeric_labels(n, &edges)
}

/// Cycle graph on `n >= 3` nodes.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three nodes");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    with_numeric_labels(n, &edges)
}

/// Complete graph on `n >= 1` nodes.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one node");
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    with_numeric_labels(n, &edges)
}

/// Uniform random tree on `n >= 1` nodes, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "tree needs at least one node");
    if n == 1 {
        return with_numeric_labels(1, &[]);
    }
    if n == 2 {
        return with_numeric_labels(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();

    let mut degree = vec![1u32; n];
    for &a in &prufer {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| degree[i] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in &prufer {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains while decoding");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    with_numeric_labels(n, &edges)
}

/// Erdős–Rényi G(n, p) conditioned on connectivity by rejection sampling.
/// Panics if no connected sample appears within the attempt budget, which
/// indicates `p` is far too small for `n`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "graph needs at least one node");
    assert!(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        let g = with_numeric_labels(n, &edges);
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected G({n}, {p}) sample in 10000 attempts");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p = path(4);
        assert_eq!((p.node_count(), p.edge_count()), (4, 3));
        assert_eq!(p.degrees(), vec![1, 2, 2, 1]);

        let s = star(5);
        assert_eq!(s.degree(0), 4);
        assert!(s.is_tree());

        let c = cycle(5);
        assert_eq!(c.degrees(), vec![2; 5]);
        assert!(!c.is_tree());

        let k = complete(5);
        assert_eq!(k.edge_count(), 10);

        assert_eq!(path(1).node_count(), 1);
        assert_eq!(star(2).edge_count(), 1);
    }

    #[test]
    fn random_trees_are_trees_and_seed_deterministic() {
        for seed in 0..20 {
            let t = random_tree(30, seed);
            assert!(t.is_tree());
            assert_eq!(t, random_tree(30, seed));
        }
        assert_ne!(random_tree(30, 1), random_tree(30, 2));
    }

    #[test]
    fn random_connected_is_connected_and_deterministic() {
        for seed in 0..10 {
            let g = random_connected(12, 0.3, seed);
            assert!(g.is_connected());
            assert_eq!(g, random_connected(12, 0.3, seed));
        }
    }
}
