//! Minimum-energy control of the aggregate state under Laplacian dynamics,
//! plus the independent verification path: a quadrature Gramian and an RK4
//! integrator that confirm the closed-form energies and terminal states.
//!
//! The dynamics are `x' = -L x + B u` from `x(0) = 0`, with `B` selecting a
//! set of controlled nodes, and the target is a terminal aggregate state
//! `1' x(t_f) >= c`. The KKT conditions of the induced quadratic program give
//! the unique optimum in closed form; everything here either evaluates that
//! closed form or checks it numerically.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::LaplacianMatrix;
use crate::spectral::{decompose, SpectralDecomposition};
use crate::ucentrality::phi;

/// Which nodes are driven, for how long, and the aggregate threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSetup {
    controlled: Vec<usize>,
    horizon: f64,
    threshold: f64,
}

impl ControlSetup {
    /// Builds a setup from a nonempty controlled-node set, a strictly
    /// positive horizon and a strictly positive threshold. The node set is
    /// sorted and deduplicated.
    ///
    /// Panics if the set is empty or the scalars are not strictly positive
    /// and finite; callers validate user input before reaching here.
    pub fn new(mut controlled: Vec<usize>, horizon: f64, threshold: f64) -> Self {
        assert!(
            !controlled.is_empty(),
            "controlled node set must be nonempty"
        );
        assert!(
            horizon > 0.0 && horizon.is_finite(),
            "horizon must be positive and finite"
        );
        assert!(
            threshold > 0.0 && threshold.is_finite(),
            "threshold must be positive and finite"
        );
        controlled.sort_unstable();
        controlled.dedup();
        ControlSetup {
            controlled,
            horizon,
            threshold,
        }
    }

    /// Control a single node.
    pub fn single_node(node: usize, horizon: f64, threshold: f64) -> Self {
        Self::new(vec![node], horizon, threshold)
    }

    /// Control every node of an `n`-node graph.
    pub fn all_nodes(n: usize, horizon: f64, threshold: f64) -> Self {
        Self::new((0..n).collect(), horizon, threshold)
    }

    /// Controlled node indices, sorted.
    pub fn controlled(&self) -> &[usize] {
        &self.controlled
    }

    /// Control horizon `t_f`.
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Aggregate-state threshold `c`.
    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

/// Reachability Gramian in closed form through the spectrum:
/// `W = sum_{a,b} g_ab (u_a' B B' u_b) u_a u_b'` with
/// `g_ab = t_f * phi((lambda_a + lambda_b) t_f)`.
pub fn gramian_spectral(dec: &SpectralDecomposition, setup: &ControlSetup) -> DMatrix<f64> {
    let n = dec.n();
    let p = setup.controlled().len();
    let tf = setup.horizon();

    // Columns of U' B are the controlled rows of U.
    let mut modes = DMatrix::zeros(n, p);
    for (j, &node) in setup.controlled().iter().enumerate() {
        for a in 0..n {
            modes[(a, j)] = dec.component(node, a);
        }
    }
    let overlap = &modes * modes.transpose();

    let eigenvalues = dec.eigenvalues();
    let mut core = DMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let g = tf * phi((eigenvalues[a] + eigenvalues[b]) * tf);
            core[(a, b)] = g * overlap[(a, b)];
        }
    }
    let w = dec.basis() * core * dec.basis().transpose();
    symmetrize(w)
}

/// Reachability Gramian by composite Simpson integration of the defining
/// integral, with the matrix exponential evaluated exactly through the
/// spectrum. This is the independent route against `gramian_spectral`.
///
/// `panels` must be even and at least 2. Panics otherwise.
pub fn gramian_quadrature(
    l: &LaplacianMatrix,
    setup: &ControlSetup,
    panels: usize,
) -> Result<DMatrix<f64>> {
    assert!(
        panels >= 2 && panels.is_multiple_of(2),
        "Simpson rule needs an even panel count >= 2"
    );
    let dec = decompose(l)?;
    let n = dec.n();
    let tf = setup.horizon();
    let h = tf / panels as f64;

    // Integrand F(tau) = (e^{-L tau} B)(e^{-L tau} B)'.
    let eval = |tau: f64| -> DMatrix<f64> {
        let p = setup.controlled().len();
        let mut driven = DMatrix::zeros(n, p);
        for (j, &node) in setup.controlled().iter().enumerate() {
            let coeffs = DVector::from_iterator(
                n,
                (0..n).map(|a| (-dec.eigenvalues()[a] * tau).exp() * dec.component(node, a)),
            );
            driven.set_column(j, &(dec.basis() * coeffs));
        }
        &driven * driven.transpose()
    };

    let mut acc = eval(0.0) + eval(tf);
    for m in 1..panels {
        let weight = if m % 2 == 1 { 4.0 } else { 2.0 };
        acc += eval(m as f64 * h) * weight;
    }
    Ok(symmetrize(acc * (h / 3.0)))
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

/// Optimum of the constrained minimum-energy problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSolution {
    /// Reachability Gramian the solution was computed from.
    pub gramian: DMatrix<f64>,
    /// Minimum control energy `c^2 / (1'W1)`.
    pub energy: f64,
    /// Terminal state `x_f = (c / (1'W1)) W 1`; satisfies `1' x_f = c`.
    pub terminal_state: DVector<f64>,
    /// Multiplier vector `eta_f = (c / (1'W1)) 1` with `x_f = W eta_f`.
    pub multiplier: DVector<f64>,
    /// Dual multiplier `mu = 2c / (1'W1)`; nonzero, so the constraint binds.
    pub dual_multiplier: f64,
}

/// Solves the KKT system of the minimum-energy program for a given Gramian
/// and threshold. Fails with `DegenerateGramian` if `1'W1 <= 0`.
pub fn solve_min_energy(gramian: DMatrix<f64>, threshold: f64) -> Result<ControlSolution> {
    assert!(
        threshold > 0.0 && threshold.is_finite(),
        "threshold must be positive and finite"
    );
    let n = gramian.nrows();
    let quad_form = gramian.sum(); // 1'W1
    if quad_form.is_nan() || quad_form <= 0.0 {
        return Err(Error::DegenerateGramian);
    }
    let scale = threshold / quad_form;
    let multiplier = DVector::from_element(n, scale);
    let terminal_state = &gramian * &multiplier;
    Ok(ControlSolution {
        energy: threshold * threshold / quad_form,
        terminal_state,
        multiplier,
        dual_multiplier: 2.0 * threshold / quad_form,
        gramian,
    })
}

/// Constant level of the optimal input at each controlled node.
///
/// Because `e^{-L tau} 1 = 1`, the optimal input `B' e^{-L(t_f - t)} eta_f`
/// is constant in time and equal to `c / (1'W1)` at every controlled node
/// (`c / t_f` in the single-node case).
pub fn constant_optimal_input(setup: &ControlSetup, gramian: &DMatrix<f64>) -> Vec<f64> {
    let quad_form = gramian.sum();
    let level = setup.threshold() / quad_form;
    vec![level; setup.controlled().len()]
}

/// A uniformly sampled state trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DVector<f64>>,
}

impl Trajectory {
    /// State at the final grid point.
    pub fn terminal(&self) -> &DVector<f64> {
        self.states
            .last()
            .expect("trajectory has at least the initial state")
    }
}

/// Classical fourth-order Runge-Kutta on `x' = -L x + B u_const` from the
/// origin, with `steps` uniform steps over the setup's horizon.
pub fn simulate(
    l: &LaplacianMatrix,
    setup: &ControlSetup,
    input_levels: &[f64],
    steps: usize,
) -> Trajectory {
    simulate_from(l, DVector::zeros(l.n()), setup, input_levels, steps)
}

/// Same integrator from an arbitrary initial state.
pub fn simulate_from(
    l: &LaplacianMatrix,
    initial: DVector<f64>,
    setup: &ControlSetup,
    input_levels: &[f64],
    steps: usize,
) -> Trajectory {
    assert!(steps >= 1, "need at least one step");
    assert_eq!(
        input_levels.len(),
        setup.controlled().len(),
        "one input level per controlled node"
    );
    let n = l.n();
    let mut forcing = DVector::zeros(n);
    for (&node, &level) in setup.controlled().iter().zip(input_levels) {
        forcing[node] += level;
    }
    let lm = l.matrix();
    let rate = |x: &DVector<f64>| -> DVector<f64> { -(lm * x) + &forcing };

    let h = setup.horizon() / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut x = initial;
    times.push(0.0);
    states.push(x.clone());
    for m in 0..steps {
        let k1 = rate(&x);
        let k2 = rate(&(&x + &k1 * (h / 2.0)));
        let k3 = rate(&(&x + &k2 * (h / 2.0)));
        let k4 = rate(&(&x + &k3 * h));
        x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        times.push((m + 1) as f64 * h);
        states.push(x.clone());
    }
    Trajectory { times, states }
}
