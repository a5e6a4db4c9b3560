//! Partial derivatives ∂b_k/∂b_u of the dependent power sums along a
//! stratum, by the cofactor formula
//!
//!   ∂b_k/∂b_u = k · Σᵢ mᵢ xᵢ^{k−1} A_{u,i} / w
//!
//! where w and A_{u,i} are the determinant and cofactors of the weighted
//! Vandermonde Jacobian in conjugate-root coordinates, together with an
//! independent finite-difference route used to validate it.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::jacobian::{jacobian_rows, Chart};
use super::vieta::power_sums;
use super::{ComplexPair, RealRoot, RootConfiguration};

/// Two parameter roots closer than this route through the perturbation
/// limit instead of the raw quotient.
const COINCIDENCE_TOL: f64 = 1e-7;

/// The value of the cofactor formula at a configuration whose parameter
/// roots are pairwise distinct. `k` and `u` are 1-based; `u` must index an
/// independent coordinate (u ≤ n − r), while `k` may be any power-sum index,
/// including k > n. For k ≤ n − r the value is the Kronecker delta.
pub fn graph_partials_interior(cfg: &RootConfiguration, k: usize, u: usize) -> f64 {
    clustered_partial(cfg, &singleton_clusters(cfg), k, u)
}

/// ∂b_k/∂b_u with degenerate configurations handled: when two parameter
/// roots (nearly) coincide the singularity of the quotient is removable, and
/// the value is computed as the extrapolated limit along a small separating
/// perturbation of the pairs.
pub fn graph_partials(cfg: &RootConfiguration, k: usize, u: usize) -> f64 {
    if min_param_separation(cfg) > COINCIDENCE_TOL {
        return graph_partials_interior(cfg, k, u);
    }
    // Separate every pair by a distinct epsilon offset and extrapolate to 0.
    let values: Vec<f64> = (0..8)
        .map(|m| {
            let eps = 1e-2 * 0.5f64.powi(m);
            graph_partials_interior(&separate_pairs(cfg, eps), k, u)
        })
        .collect();
    super::limits::richardson_limit(&values, 0.5).0
}

pub(crate) fn min_param_separation(cfg: &RootConfiguration) -> f64 {
    let roots = cfg.param_roots();
    let mut min = f64::INFINITY;
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            min = min.min((roots[i].0 - roots[j].0).norm());
        }
    }
    min
}

fn separate_pairs(cfg: &RootConfiguration, eps: f64) -> RootConfiguration {
    let pairs: Vec<ComplexPair> = cfg
        .complex_pairs()
        .iter()
        .enumerate()
        .map(|(idx, p)| ComplexPair {
            alpha: p.alpha + eps * idx as f64,
            beta: p.beta + eps,
        })
        .collect();
    RootConfiguration::new(cfg.real_roots().to_vec(), pairs).expect("perturbation keeps validity")
}

pub(crate) fn singleton_clusters(cfg: &RootConfiguration) -> Vec<Vec<usize>> {
    (0..cfg.param_count()).map(|i| vec![i]).collect()
}

/// The cofactor formula evaluated on clustered columns: each cluster of
/// parameter roots contributes the sum of its members' columns. With
/// singleton clusters this is the plain formula; coarser clusterings give
/// the chart of a boundary stratum whose roots the clusters merge into.
pub(crate) fn clustered_partial(
    cfg: &RootConfiguration,
    clusters: &[Vec<usize>],
    k: usize,
    u: usize,
) -> f64 {
    let roots = cfg.param_roots();
    let size = clusters.len();
    assert!(u >= 1 && u <= size, "u must index an independent coordinate");
    let mut m = DMatrix::<Complex64>::zeros(size, size);
    for (col, cluster) in clusters.iter().enumerate() {
        for &i in cluster {
            let (x, w) = roots[i];
            let mut p = Complex64::new(w, 0.0);
            for j in 1..=size {
                m[(j - 1, col)] += (j as f64) * p;
                p *= x;
            }
        }
    }
    let w = m.clone().determinant();
    let mut numer = Complex64::new(0.0, 0.0);
    for (col, cluster) in clusters.iter().enumerate() {
        let minor = m.clone().remove_row(u - 1).remove_column(col);
        let sign = if (u - 1 + col) % 2 == 0 { 1.0 } else { -1.0 };
        let cof = Complex64::new(sign, 0.0) * minor.determinant();
        let mut term = Complex64::new(0.0, 0.0);
        for &i in cluster {
            let (x, wt) = roots[i];
            term += wt * x.powu((k - 1) as u32);
        }
        numer += term * cof;
    }
    let value = (k as f64) * numer / w;
    debug_assert!(
        value.im.abs() <= 1e-6 * (1.0 + value.re.abs()),
        "partial should be real, got {}",
        value
    );
    value.re
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// Newton iteration failed to reach the residual tolerance.
    NoConvergence { residual: f64 },
    /// An iterate left the chart (roots crossed or beta became nonpositive).
    LeftChart,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoConvergence { residual } => {
                write!(f, "Newton did not converge (residual {:.3e})", residual)
            }
            SolveError::LeftChart => write!(f, "iterate left the root chart"),
        }
    }
}

impl std::error::Error for SolveError {}

fn params_of(cfg: &RootConfiguration) -> DVector<f64> {
    let mut v = Vec::with_capacity(cfg.param_count());
    for r in cfg.real_roots() {
        v.push(r.y);
    }
    for p in cfg.complex_pairs() {
        v.push(p.alpha);
        v.push(p.beta);
    }
    DVector::from_vec(v)
}

fn config_from_params(
    template: &RootConfiguration,
    params: &DVector<f64>,
) -> Option<RootConfiguration> {
    let q = template.real_roots().len();
    let real: Vec<RealRoot> = template
        .real_roots()
        .iter()
        .enumerate()
        .map(|(i, r)| RealRoot {
            y: params[i],
            mult: r.mult,
        })
        .collect();
    let pairs: Vec<ComplexPair> = (0..template.complex_pairs().len())
        .map(|k| ComplexPair {
            alpha: params[q + 2 * k],
            beta: params[q + 2 * k + 1],
        })
        .collect();
    RootConfiguration::new(real, pairs).ok()
}

/// Solves for the configuration on the same stratum whose independent power
/// sums (b_1, …, b_{n−r}) equal `b_target`, by damped Newton from `cfg`.
pub fn solve_params_for_b(
    cfg: &RootConfiguration,
    b_target: &[f64],
) -> Result<RootConfiguration, SolveError> {
    let size = cfg.param_count();
    assert_eq!(b_target.len(), size);
    let mut current = cfg.clone();
    let mut params = params_of(&current);
    let mut residual = residual_of(&current, b_target);
    for _ in 0..60 {
        if residual.amax() <= 1e-13 {
            return Ok(current);
        }
        let j = jacobian_real(&current, size);
        let Some(step) = j.lu().solve(&residual) else {
            return Err(SolveError::NoConvergence {
                residual: residual.amax(),
            });
        };
        let mut lambda = 1.0;
        let mut advanced = false;
        for _ in 0..30 {
            let trial = &params - lambda * &step;
            if let Some(cfg_trial) = config_from_params(&current, &trial) {
                let r_trial = residual_of(&cfg_trial, b_target);
                if r_trial.norm() < residual.norm() {
                    params = trial;
                    current = cfg_trial;
                    residual = r_trial;
                    advanced = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !advanced {
            return Err(SolveError::NoConvergence {
                residual: residual.amax(),
            });
        }
    }
    if residual.amax() <= 1e-11 {
        Ok(current)
    } else {
        Err(SolveError::NoConvergence {
            residual: residual.amax(),
        })
    }
}

fn residual_of(cfg: &RootConfiguration, b_target: &[f64]) -> DVector<f64> {
    let b = power_sums(cfg, b_target.len());
    DVector::from_iterator(b_target.len(), b.iter().zip(b_target).map(|(x, t)| x - t))
}

fn jacobian_real(cfg: &RootConfiguration, rows: usize) -> DMatrix<f64> {
    let m = jacobian_rows(cfg, Chart::AlphaBeta, rows);
    DMatrix::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)].re)
}

/// Independent finite-difference route for ∂b_k/∂b_u: perturb b_u by ±h and
/// ±h/2 holding the other independent power sums fixed (re-solving the root
/// parameters each time), then combine the two central differences by one
/// Richardson step. Never touches the cofactor formula.
pub fn graph_partial_fd(
    cfg: &RootConfiguration,
    k: usize,
    u: usize,
    h: f64,
) -> Result<f64, SolveError> {
    let size = cfg.param_count();
    let b0 = power_sums(cfg, size);
    let eval = |delta: f64| -> Result<f64, SolveError> {
        let mut target = b0.clone();
        target[u - 1] += delta;
        let solved = solve_params_for_b(cfg, &target)?;
        Ok(power_sums(&solved, k)[k - 1])
    };
    let d_h = (eval(h)? - eval(-h)?) / (2.0 * h);
    let d_h2 = (eval(h / 2.0)? - eval(-h / 2.0)?) / h;
    Ok((4.0 * d_h2 - d_h) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg(real: &[(f64, u32)], pairs: &[(f64, f64)]) -> RootConfiguration {
        RootConfiguration::new(
            real.iter().map(|&(y, mult)| RealRoot { y, mult }).collect(),
            pairs
                .iter()
                .map(|&(alpha, beta)| ComplexPair { alpha, beta })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn parabola_slope() {
        // n=2, stratum [2] at root t: b_1 = 2t, b_2 = 2t^2, so db_2/db_1 = 2t
        for t in [-1.5, -0.25, 0.0, 0.6, 2.0] {
            let c = cfg(&[(t, 2)], &[]);
            assert_relative_eq!(graph_partials(&c, 2, 1), 2.0 * t, epsilon = 1e-12);
        }
    }

    #[test]
    fn kronecker_delta_for_independent_rows() {
        let c = cfg(&[(-1.0, 1), (0.5, 2)], &[(0.2, 0.9)]);
        let size = c.param_count();
        for k in 1..=size {
            for u in 1..=size {
                let expected = if k == u { 1.0 } else { 0.0 };
                assert_relative_eq!(
                    graph_partials_interior(&c, k, u),
                    expected,
                    epsilon = 1e-9
                );
            }
        }
    }

    #[test]
    fn matches_finite_differences_on_double_double() {
        // n=4, stratum [2,2] at roots ∓1
        let c = cfg(&[(-1.0, 2), (1.0, 2)], &[]);
        for k in 3..=4 {
            for u in 1..=2 {
                let eq = graph_partials(&c, k, u);
                let fd = graph_partial_fd(&c, k, u, 1e-3).unwrap();
                assert_relative_eq!(eq, fd, epsilon = 1e-8, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn matches_finite_differences_with_pairs() {
        let c = cfg(&[(0.3, 3)], &[(-0.7, 1.2)]);
        let n = c.degree(); // 5, r = 2, independent: b_1..b_3
        for k in 4..=n {
            for u in 1..=3 {
                let eq = graph_partials(&c, k, u);
                let fd = graph_partial_fd(&c, k, u, 1e-4).unwrap();
                assert_relative_eq!(eq, fd, epsilon = 1e-7, max_relative = 1e-7);
            }
        }
    }

    #[test]
    fn coincident_pair_limit_is_finite() {
        // two equal complex pairs inside stratum []: the raw quotient is 0/0
        // but the limit exists
        let degenerate = cfg(&[], &[(0.4, 0.8), (0.4, 0.8)]);
        let v = graph_partials(&degenerate, 5, 1);
        assert!(v.is_finite());
        // approaching configurations agree with the limit
        let near = cfg(&[], &[(0.4, 0.8), (0.4 + 1e-5, 0.8 + 1e-5)]);
        let v_near = graph_partials(&near, 5, 1);
        assert_relative_eq!(v, v_near, epsilon = 1e-3);
    }

    #[test]
    fn newton_solver_recovers_targets() {
        let c = cfg(&[(-0.9, 1), (0.4, 2)], &[(0.1, 1.0)]);
        let size = c.param_count();
        let mut target = power_sums(&c, size);
        target[0] += 0.02;
        target[2] -= 0.015;
        let solved = solve_params_for_b(&c, &target).unwrap();
        let got = power_sums(&solved, size);
        for (g, t) in got.iter().zip(&target) {
            assert_relative_eq!(g, t, epsilon = 1e-10);
        }
        // solution stays on the stratum
        assert_eq!(solved.mv(), c.mv());
    }
}
