//! Structural invariants of graphs, Laplacians, distances and the spectral
//! decomposition, exercised over seeded random graphs.

use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ucentral::generate::{random_connected, random_tree};
use ucentral::graph::{all_pairs_hop_distances, laplacian, Graph};
use ucentral::spectral::{decompose, pseudoinverse};

fn random_graph(n: usize, seed: u64) -> Graph {
    random_connected(n, 0.4, seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laplacian_rows_sum_to_zero_exactly(n in 2usize..12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let l = laplacian(&g);
        let m = l.matrix();
        for i in 0..n {
            prop_assert_eq!(m.row(i).sum(), 0.0);
            for j in 0..n {
                prop_assert_eq!(m[(i, j)], m[(j, i)]);
            }
        }
    }

    #[test]
    fn laplacian_quadratic_form_is_nonnegative(n in 2usize..12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let m = laplacian(&g).matrix().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..100 {
            let mut x = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
            if x.norm() == 0.0 {
                continue;
            }
            x.normalize_mut();
            let quad = (x.transpose() * &m * &x)[(0, 0)];
            prop_assert!(quad >= -1e-12);
        }
    }

    #[test]
    fn distances_are_symmetric_and_metric(n in 2usize..12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let d = all_pairs_hop_distances(&g).unwrap();
        for i in 0..n {
            prop_assert_eq!(d.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(d.get(i, j), d.get(j, i));
                for k in 0..n {
                    prop_assert!(d.get(i, j) <= d.get(i, k) + d.get(k, j));
                }
            }
        }
    }

    #[test]
    fn tree_edges_are_all_bridges(n in 2usize..40, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb41d);
        for _ in 0..10usize.min(g.edge_count()) {
            let drop = rng.random_range(0..g.edge_count());
            let remaining: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(e, _)| *e != drop)
                .map(|(_, &edge)| edge)
                .collect();
            let labels: Vec<String> = g.labels().to_vec();
            let cut = Graph::new(labels, &remaining).unwrap();
            prop_assert!(!cut.is_connected());
        }
    }

    #[test]
    fn decomposition_reconstructs_and_is_orthonormal(n in 2usize..12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let l = laplacian(&g);
        let dec = decompose(&l).unwrap();

        prop_assert_eq!(dec.eigenvalues()[0], 0.0);
        prop_assert!(dec.eigenvalues()[1] > 0.0);
        prop_assert!(dec.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        let uniform = 1.0 / (n as f64).sqrt();
        for i in 0..n {
            prop_assert_eq!(dec.component(i, 0), uniform);
        }

        let reconstructed = dec.filter_matrix(|l| l);
        let scale = l.matrix().norm().max(1.0);
        prop_assert!((reconstructed - l.matrix()).norm() <= 1e-10 * scale);

        let basis = dec.basis();
        let gram = basis.transpose() * basis;
        prop_assert!((gram - DMatrix::identity(n, n)).norm() <= 1e-10);
    }

    #[test]
    fn pseudoinverse_satisfies_moore_penrose(n in 2usize..12, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let l = laplacian(&g);
        let dec = decompose(&l).unwrap();
        let pinv = pseudoinverse(&dec);
        let (lm, pm) = (l.matrix(), pinv.matrix());

        let centering = DMatrix::identity(n, n) - DMatrix::from_element(n, n, 1.0 / n as f64);
        prop_assert!((lm * pm - &centering).norm() <= 1e-9);
        prop_assert!((pm * lm - &centering).norm() <= 1e-9);
        prop_assert!((lm * pm * lm - lm).norm() <= 1e-9);
        prop_assert!((pm * lm * pm - pm).norm() <= 1e-9);
        prop_assert!(((lm * pm).transpose() - lm * pm).norm() <= 1e-9);
        prop_assert!(((pm * lm).transpose() - pm * lm).norm() <= 1e-9);

        // Rows sum to zero: the kernel direction stays annihilated.
        let ones = DVector::from_element(n, 1.0);
        prop_assert!((pm * ones).norm() <= 1e-10);
    }

    #[test]
    fn decomposition_is_reproducible(n in 2usize..10, seed in any::<u64>()) {
        let g = random_graph(n, seed);
        let l = laplacian(&g);
        prop_assert_eq!(decompose(&l).unwrap(), decompose(&l).unwrap());
    }
}
