//! Symmetric eigendecomposition of the Laplacian with the zero eigenpair
//! handled analytically, and the Moore-Penrose pseudoinverse built from the
//! spectrum.
//!
//! Connectivity is established combinatorially before any numerics run, so
//! the zero eigenvalue and its eigenvector `1/sqrt(n)` are pinned exactly
//! rather than recovered from thresholded floating-point output. Remaining
//! eigenvectors are re-orthogonalized against the pinned vector and carry a
//! deterministic sign, making the decomposition bit-reproducible for a given
//! input.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::LaplacianMatrix;

/// Relative threshold under which a second eigenvalue contradicts the
/// combinatorial connectivity check.
const SPECTRAL_GAP_RTOL: f64 = 1e-9;

/// Ascending eigenvalues and orthonormal eigenvectors of a connected graph's
/// Laplacian. `eigenvalues()[0]` is exactly `0.0` and the first basis column
/// is exactly `1/sqrt(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    basis: DMatrix<f64>,
}

impl SpectralDecomposition {
    /// Dimension (node count).
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues in ascending order; the first is exactly zero.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Orthonormal eigenvector matrix, one eigenvector per column, aligned
    /// with `eigenvalues()`.
    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    /// Entry `i` of eigenvector `k`.
    pub fn component(&self, i: usize, k: usize) -> f64 {
        self.basis[(i, k)]
    }

    /// Spectral filter `U diag(f(lambda)) U^T`, symmetrized. All matrix
    /// functions of the Laplacian used in this crate (heat kernel,
    /// pseudoinverse, Gramian factors) are built through this.
    pub fn filter_matrix<F: Fn(f64) -> f64>(&self, f: F) -> DMatrix<f64> {
        let weights = DVector::from_iterator(self.n(), self.eigenvalues.iter().map(|&l| f(l)));
        let m = &self.basis * DMatrix::from_diagonal(&weights) * self.basis.transpose();
        symmetrize(m)
    }

    /// Heat kernel `exp(-L t)` evaluated through the spectrum.
    pub fn heat_kernel(&self, t: f64) -> DMatrix<f64> {
        self.filter_matrix(|l| (-l * t).exp())
    }
}

fn symmetrize(mut m: DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
    m
}

/// Flips an eigenvector so its largest-magnitude entry is positive, ties
/// broken by lowest index. The tie window tolerates last-ulp noise so that
/// mirror-symmetric vectors pick a reproducible representative.
fn fix_sign(column: &mut DVector<f64>) {
    let max_mag = column.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    if max_mag == 0.0 {
        return;
    }
    let window = max_mag * (1.0 - 1e-12);
    let pivot = column
        .iter()
        .position(|&v| v.abs() >= window)
        .expect("max magnitude entry exists");
    if column[pivot] < 0.0 {
        column.neg_mut();
    }
}

/// Eigendecomposition of the Laplacian of a connected graph.
///
/// Fails with `Disconnected` if the off-diagonal pattern is not connected, or
/// if the computed second eigenvalue falls below `1e-9 * lambda_max`, which
/// would contradict connectivity.
pub fn decompose(l: &LaplacianMatrix) -> Result<SpectralDecomposition> {
    let n = l.n();
    if !l.pattern_connected() {
        return Err(Error::Disconnected);
    }
    if n == 1 {
        return Ok(SpectralDecomposition {
            eigenvalues: vec![0.0],
            basis: DMatrix::from_element(1, 1, 1.0),
        });
    }

    let eigen = nalgebra::SymmetricEigen::new(l.matrix().clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]));

    let mut eigenvalues: Vec<f64> = order.iter().map(|&k| eigen.eigenvalues[k]).collect();
    let mut basis = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        basis.set_column(dst, &eigen.eigenvectors.column(src));
    }

    if eigenvalues[1] <= SPECTRAL_GAP_RTOL * eigenvalues[n - 1] {
        return Err(Error::Disconnected);
    }

    // Zero eigenpair pinned analytically.
    eigenvalues[0] = 0.0;
    let uniform = 1.0 / (n as f64).sqrt();
    basis.set_column(0, &DVector::from_element(n, uniform));

    // Re-orthogonalize the remaining eigenvectors against 1/sqrt(n) and fix
    // their signs.
    for k in 1..n {
        let mut column = basis.column(k).clone_owned();
        let mean = column.sum() / n as f64;
        column.add_scalar_mut(-mean);
        column.normalize_mut();
        fix_sign(&mut column);
        basis.set_column(k, &column);
    }

    Ok(SpectralDecomposition { eigenvalues, basis })
}

/// Moore-Penrose pseudoinverse of a connected graph's Laplacian: symmetric,
/// positive semidefinite, rows summing to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoinverseMatrix {
    matrix: DMatrix<f64>,
}

impl PseudoinverseMatrix {
    pub(crate) fn from_matrix(matrix: DMatrix<f64>) -> Self {
        PseudoinverseMatrix { matrix }
    }

    /// Dimension (node count).
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// The dense pseudoinverse.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    /// Euclidean norms of the columns.
    pub fn column_norms(&self) -> Vec<f64> {
        (0..self.n())
            .map(|i| self.matrix.column(i).norm())
            .collect()
    }
}

/// Pseudoinverse from the spectrum: the inverse-eigenvalue filter over the
/// nonzero eigenvalues.
pub fn pseudoinverse(dec: &SpectralDecomposition) -> PseudoinverseMatrix {
    let matrix = dec.filter_matrix(|l| if l == 0.0 { 0.0 } else { 1.0 / l });
    PseudoinverseMatrix { matrix }
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use nalgebra::DMatrix;

    use super::*;
    use crate::graph::{laplacian, parse_edge_list};

    fn decompose_of(edge_list: &str) -> SpectralDecomposition {
        decompose(&laplacian(&parse_edge_list(edge_list).unwrap())).unwrap()
    }

    #[test]
    fn path_spectrum_matches_characteristic_polynomial() {
        // P3 Laplacian eigenvalues are the roots of -x(x-1)(x-3).
        let dec = decompose_of("a b\nb c");
        assert_eq!(dec.eigenvalues()[0], 0.0);
        assert_abs_diff_eq!(dec.eigenvalues()[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(dec.eigenvalues()[2], 3.0, epsilon = 1e-12);

        let s2 = 1.0 / 2.0f64.sqrt();
        let s6 = 1.0 / 6.0f64.sqrt();
        // Sign convention: largest-magnitude entry positive, lowest index on
        // near-ties.
        for (i, &expected) in [s2, 0.0, -s2].iter().enumerate() {
            assert_abs_diff_eq!(dec.component(i, 1), expected, epsilon = 1e-12);
        }
        for (i, &expected) in [-s6, 2.0 * s6, -s6].iter().enumerate() {
            assert_abs_diff_eq!(dec.component(i, 2), expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn triangle_spectrum_is_degenerate() {
        let dec = decompose_of("a b\nb c\nc a");
        assert_eq!(dec.eigenvalues()[0], 0.0);
        assert_abs_diff_eq!(dec.eigenvalues()[1], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(dec.eigenvalues()[2], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn single_edge_spectrum() {
        let dec = decompose_of("a b");
        assert_eq!(dec.eigenvalues()[0], 0.0);
        assert_abs_diff_eq!(dec.eigenvalues()[1], 2.0, epsilon = 1e-14);
        let s2 = 1.0 / 2.0f64.sqrt();
        assert_abs_diff_eq!(dec.component(0, 1), s2, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.component(1, 1), -s2, epsilon = 1e-14);
    }

    #[test]
    fn zero_eigenpair_is_pinned_exactly() {
        let dec = decompose_of("a b\nb c\nc d\nd a");
        assert_eq!(dec.eigenvalues()[0], 0.0);
        let uniform = 1.0 / 2.0;
        for i in 0..4 {
            assert_eq!(dec.component(i, 0), uniform);
        }
    }

    #[test]
    fn decompose_rejects_disconnected_pattern() {
        let g = parse_edge_list("a b\nc d").unwrap();
        assert_eq!(decompose(&laplacian(&g)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn decompose_is_bit_deterministic() {
        let g = parse_edge_list("a b\nb c\nc d\nd a\na c").unwrap();
        let l = laplacian(&g);
        let first = decompose(&l).unwrap();
        let second = decompose(&l).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn path_pseudoinverse_matches_tree_closed_form() {
        let pinv = pseudoinverse(&decompose_of("a b\nb c"));
        let expected =
            DMatrix::from_row_slice(3, 3, &[5.0, -1.0, -4.0, -1.0, 2.0, -1.0, -4.0, -1.0, 5.0])
                / 9.0;
        assert_abs_diff_eq!(pinv.matrix(), &expected, epsilon = 1e-12);
    }

    #[test]
    fn triangle_pseudoinverse_is_basis_independent() {
        // K3: inverting on the complement of span{1} gives (1/3)(I - J/3).
        let pinv = pseudoinverse(&decompose_of("a b\nb c\nc a"));
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 2.0 / 9.0 } else { -1.0 / 9.0 };
                assert_abs_diff_eq!(pinv.get(i, j), expected, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn single_edge_pseudoinverse() {
        let pinv = pseudoinverse(&decompose_of("a b"));
        let expected = DMatrix::from_row_slice(2, 2, &[0.25, -0.25, -0.25, 0.25]);
        assert_abs_diff_eq!(pinv.matrix(), &expected, epsilon = 1e-14);
    }

    #[test]
    fn moore_penrose_conditions_on_small_graphs() {
        for edges in ["a b\nb c", "a b\nb c\nc a", "a b\nb c\nc d\nd a\na c"] {
            let l = laplacian(&parse_edge_list(edges).unwrap());
            let dec = decompose(&l).unwrap();
            let pinv = pseudoinverse(&dec);
            let (lm, pm) = (l.matrix(), pinv.matrix());
            let n = l.n();
            let centering = DMatrix::identity(n, n) - DMatrix::from_element(n, n, 1.0 / n as f64);
            assert!(((lm * pm) - &centering).norm() <= 1e-9);
            assert!((lm * pm * lm - lm).norm() <= 1e-9);
            assert!((pm * lm * pm - pm).norm() <= 1e-9);
            assert!(((lm * pm).transpose() - lm * pm).norm() <= 1e-9);
            assert!(((pm * lm).transpose() - pm * lm).norm() <= 1e-9);
        }
    }
}
