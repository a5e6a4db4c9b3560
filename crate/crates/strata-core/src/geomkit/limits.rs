//! Boundary-limit probes: evaluate the graph partials along a shrinking
//! path, check Cauchy behaviour, and extrapolate the limit.

use super::partials::{clustered_partial, singleton_clusters};
use super::RootConfiguration;

/// A one-parameter family of configurations; `at(eps)` must be a valid
/// configuration for every probed eps > 0, degenerating as eps → 0 onto a
/// lower-dimensional stratum or a complex-coincidence locus.
pub struct ApproachPath<'a> {
    pub describe: String,
    pub at: Box<dyn Fn(f64) -> RootConfiguration + 'a>,
    /// Optional grouping of the parameter-root columns into the clusters
    /// that merge in the limit; when present, the partials of the limit
    /// stratum's chart are probed instead of the ambient stratum's own.
    pub clusters: Option<Vec<Vec<usize>>>,
}

impl<'a> ApproachPath<'a> {
    pub fn new(describe: impl Into<String>, at: impl Fn(f64) -> RootConfiguration + 'a) -> Self {
        ApproachPath {
            describe: describe.into(),
            at: Box::new(at),
            clusters: None,
        }
    }

    pub fn with_clusters(mut self, clusters: Vec<Vec<usize>>) -> Self {
        self.clusters = Some(clusters);
        self
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ProbeOptions {
    /// Largest path parameter.
    pub eps0: f64,
    /// Geometric shrink factor per step.
    pub ratio: f64,
    /// Number of path points (at least 6 for a meaningful extrapolation).
    pub steps: usize,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            eps0: 1e-1,
            ratio: 0.5,
            steps: 8,
        }
    }
}

/// Convergence data for one (k, u) target along a path.
#[derive(Debug, Clone)]
pub struct TargetReport {
    pub k: usize,
    pub u: usize,
    /// Raw values at eps0·ratio^m, m = 0, 1, ….
    pub values: Vec<f64>,
    /// Richardson-extrapolated limit.
    pub limit: f64,
    /// Whether successive differences shrink (geometric Cauchy behaviour).
    pub cauchy: bool,
    /// Magnitude of the last extrapolation correction.
    pub est_error: f64,
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub describe: String,
    pub targets: Vec<TargetReport>,
}

impl ConvergenceReport {
    pub fn all_cauchy(&self) -> bool {
        self.targets.iter().all(|t| t.cauchy)
    }

    pub fn limit_for(&self, k: usize, u: usize) -> Option<f64> {
        self.targets
            .iter()
            .find(|t| t.k == k && t.u == u)
            .map(|t| t.limit)
    }
}

/// Evaluates ∂b_k/∂b_u along the path at geometrically shrinking parameters
/// and extrapolates each target to eps = 0.
pub fn boundary_limit_probe(
    path: &ApproachPath<'_>,
    targets: &[(usize, usize)],
    opts: &ProbeOptions,
) -> ConvergenceReport {
    assert!(opts.steps >= 3);
    let configs: Vec<RootConfiguration> = (0..opts.steps)
        .map(|m| (path.at)(opts.eps0 * opts.ratio.powi(m as i32)))
        .collect();
    let targets = targets
        .iter()
        .map(|&(k, u)| {
            let values: Vec<f64> = configs
                .iter()
                .map(|cfg| {
                    let clusters = path
                        .clusters
                        .clone()
                        .unwrap_or_else(|| singleton_clusters(cfg));
                    clustered_partial(cfg, &clusters, k, u)
                })
                .collect();
            let (limit, est_error) = richardson_limit(&values, opts.ratio);
            TargetReport {
                k,
                u,
                cauchy: is_cauchy(&values),
                values,
                limit,
                est_error,
            }
        })
        .collect();
    ConvergenceReport {
        describe: path.describe.clone(),
        targets,
    }
}

/// Richardson extrapolation for v(eps) smooth in eps sampled at
/// eps0 · ratio^m. Returns the deepest diagonal value and the magnitude of
/// its last correction.
pub(crate) fn richardson_limit(values: &[f64], ratio: f64) -> (f64, f64) {
    let mut row = values.to_vec();
    let mut last_correction = 0.0;
    let inv = 1.0 / ratio;
    for level in 1..row.len() {
        let factor = inv.powi(level as i32);
        for i in (level..row.len()).rev() {
            let refined = (factor * row[i] - row[i - 1]) / (factor - 1.0);
            if i == row.len() - 1 {
                last_correction = (refined - row[i]).abs();
            }
            row[i] = refined;
        }
    }
    (*row.last().unwrap(), last_correction)
}

/// Successive differences must shrink for the sequence to be considered
/// Cauchy; an exactly constant tail counts as converged.
pub(crate) fn is_cauchy(values: &[f64]) -> bool {
    let diffs: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    if diffs.is_empty() {
        return false;
    }
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    if diffs.iter().all(|d| *d <= 1e-12 * scale) {
        return true;
    }
    let first = diffs.first().copied().unwrap();
    let last = diffs.last().copied().unwrap();
    // overall decay plus (weak) monotone trend over the tail
    let tail_ok = diffs
        .windows(2)
        .skip(diffs.len().saturating_sub(4))
        .all(|w| w[1] <= w[0] * 1.05 + 1e-12 * scale);
    last < 0.25 * first + 1e-12 * scale && tail_ok
}
