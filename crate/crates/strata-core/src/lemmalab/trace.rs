//! Tracing adjacent-stratum curves by Newton continuation in root space.
//!
//! The perturbation that realizes a cover label keeps one degree of freedom
//! frozen — the gap between the two split roots, or the imaginary part of
//! the new complex pair — and Newton adjusts the remaining parameters to
//! restore the pinned coefficients a_1..a_s. Constraints are polynomial in
//! the root parameters, with the Jacobian available in closed form, which
//! stays well conditioned near multiple roots where coefficient-space
//! continuation would not.

use std::fmt;

use nalgebra::{DMatrix, DVector};

use crate::geomkit::{coefficient_jacobian, vieta_coeffs, ComplexPair, RealRoot, RootConfiguration};
use crate::stratlat::CoverLabel;

use super::{AdjacentCurve, CurveLabel, CurvePoint, SectionSetup};

#[derive(Debug, Clone, PartialEq)]
pub enum TraceError {
    /// Newton failed on every scale of the ladder.
    AllScalesFailed { label: String },
    /// The traced points changed side along the ladder.
    SideFlip { label: String },
    /// Fewer than 4 scales survived; no reliable extrapolation.
    TooFewPoints { label: String, kept: usize },
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::AllScalesFailed { label } => {
                write!(f, "curve {}: no scale converged", label)
            }
            TraceError::SideFlip { label } => {
                write!(f, "curve {}: projection side flipped along the ladder", label)
            }
            TraceError::TooFewPoints { label, kept } => {
                write!(f, "curve {}: only {} scales converged", label, kept)
            }
        }
    }
}

impl std::error::Error for TraceError {}

const RESIDUAL_TOL: f64 = 1e-12;
const RESIDUAL_ACCEPT: f64 = 1e-10;

/// The perturbed chart for one cover label: unknown vector z plus a frozen
/// scale delta, mapping to a configuration on the upper stratum.
struct PerturbChart<'a> {
    base: &'a RootConfiguration,
    label: CoverLabel,
}

impl PerturbChart<'_> {
    fn unknown_count(&self) -> usize {
        self.base.param_count()
    }

    fn initial(&self) -> DVector<f64> {
        let mut z = Vec::with_capacity(self.unknown_count());
        match self.label {
            CoverLabel::Split { .. } => {
                for r in self.base.real_roots() {
                    z.push(r.y);
                }
                for p in self.base.complex_pairs() {
                    z.push(p.alpha);
                    z.push(p.beta);
                }
            }
            CoverLabel::Delete2 { component } => {
                for (idx, r) in self.base.real_roots().iter().enumerate() {
                    if idx + 1 != component {
                        z.push(r.y);
                    }
                }
                for p in self.base.complex_pairs() {
                    z.push(p.alpha);
                    z.push(p.beta);
                }
                // center of the new pair
                z.push(self.base.real_roots()[component - 1].y);
            }
        }
        DVector::from_vec(z)
    }

    /// Assembles the configuration at unknowns z and frozen scale delta.
    /// None when the iterate leaves the chart (order or beta violated).
    fn config(&self, z: &DVector<f64>, delta: f64) -> Option<RootConfiguration> {
        match self.label {
            CoverLabel::Split { component, left } => {
                let q = self.base.real_roots().len();
                let mut real = Vec::with_capacity(q + 1);
                for (idx, r) in self.base.real_roots().iter().enumerate() {
                    if idx + 1 == component {
                        let total = f64::from(r.mult);
                        let jl = f64::from(left);
                        let jr = total - jl;
                        let c = z[idx];
                        // multiplicity-weighted centroid stays at c
                        real.push(RealRoot {
                            y: c - delta * jr / total,
                            mult: left,
                        });
                        real.push(RealRoot {
                            y: c + delta * jl / total,
                            mult: r.mult - left,
                        });
                    } else {
                        real.push(RealRoot {
                            y: z[idx],
                            mult: r.mult,
                        });
                    }
                }
                let pairs = self.pairs_from(z, q);
                RootConfiguration::new(real, pairs).ok()
            }
            CoverLabel::Delete2 { component } => {
                let q = self.base.real_roots().len();
                let mut real = Vec::with_capacity(q - 1);
                let mut zi = 0;
                for (idx, r) in self.base.real_roots().iter().enumerate() {
                    if idx + 1 != component {
                        real.push(RealRoot {
                            y: z[zi],
                            mult: r.mult,
                        });
                        zi += 1;
                    }
                }
                let mut pairs = self.pairs_from(z, q - 1);
                pairs.push(ComplexPair {
                    alpha: z[self.unknown_count() - 1],
                    beta: delta,
                });
                RootConfiguration::new(real, pairs).ok()
            }
        }
    }

    fn pairs_from(&self, z: &DVector<f64>, offset: usize) -> Vec<ComplexPair> {
        (0..self.base.complex_pairs().len())
            .map(|k| ComplexPair {
                alpha: z[offset + 2 * k],
                beta: z[offset + 2 * k + 1],
            })
            .collect()
    }

    /// ∂(a_1..a_s)/∂z at the configuration, by the chain rule through the
    /// configuration's own parameter Jacobian.
    fn constraint_jacobian(&self, cfg: &RootConfiguration, s: usize) -> DMatrix<f64> {
        let full = coefficient_jacobian(cfg); // n × (params of cfg)
        let m = self.unknown_count();
        let mut j = DMatrix::zeros(s, m);
        match self.label {
            CoverLabel::Split { component, .. } => {
                let q = self.base.real_roots().len();
                // cfg real slots: 0..q+1 with (component-1, component) driven
                // by the same center unknown
                for zi in 0..q {
                    let cols: &[usize] = if zi + 1 == component {
                        &[zi, zi + 1]
                    } else if zi + 1 < component {
                        &[zi]
                    } else {
                        &[zi + 1]
                    };
                    for &c in cols {
                        for row in 0..s {
                            j[(row, zi)] += full[(row, c)];
                        }
                    }
                }
                for pk in 0..2 * self.base.complex_pairs().len() {
                    for row in 0..s {
                        j[(row, q + pk)] = full[(row, q + 1 + pk)];
                    }
                }
            }
            CoverLabel::Delete2 { .. } => {
                let q_new = self.base.real_roots().len() - 1;
                let p_old = self.base.complex_pairs().len();
                for zi in 0..q_new {
                    for row in 0..s {
                        j[(row, zi)] = full[(row, zi)];
                    }
                }
                for pk in 0..2 * p_old {
                    for row in 0..s {
                        j[(row, q_new + pk)] = full[(row, q_new + pk)];
                    }
                }
                // last unknown: alpha of the appended pair; its beta column
                // (the very last of cfg's params) is frozen
                let alpha_col = full.ncols() - 2;
                for row in 0..s {
                    j[(row, m - 1)] = full[(row, alpha_col)];
                }
            }
        }
        j
    }
}

/// Default geometric scale ladder for a label at a base point: an eighth of
/// the room around the perturbed root, halved 8 times.
pub fn default_scales(setup: &SectionSetup, label: &CoverLabel) -> Vec<f64> {
    let cfg = &setup.base.config;
    let component = match *label {
        CoverLabel::Split { component, .. } | CoverLabel::Delete2 { component } => component,
    };
    let y = cfg.real_roots()[component - 1].y;
    let mut room = f64::INFINITY;
    if component >= 2 {
        room = room.min(y - cfg.real_roots()[component - 2].y);
    }
    if component < cfg.real_roots().len() {
        room = room.min(cfg.real_roots()[component].y - y);
    }
    if !room.is_finite() {
        room = 1.0;
    }
    let base = match label {
        CoverLabel::Split { .. } => 0.125 * room.min(1.0),
        // the new pair must stay away from the existing ones (beta >= 0.2
        // under the default box)
        CoverLabel::Delete2 { .. } => 0.1 * room.min(1.0),
    };
    (0..9).map(|m| base * 0.5f64.powi(m)).collect()
}

/// Traces one adjacent curve through the declared scales.
pub fn trace_adjacent_curve(
    setup: &SectionSetup,
    label: &CoverLabel,
    scales: &[f64],
) -> Result<AdjacentCurve, TraceError> {
    let chart = PerturbChart {
        base: &setup.base.config,
        label: *label,
    };
    let s = setup.s;
    let a_base = &setup.base.a;
    let curve_label = CurveLabel::from_cover(label, setup.stratum.mv());
    let mut points = Vec::with_capacity(scales.len());
    for &delta in scales {
        let Some(solution) = newton_solve(&chart, delta, s, a_base) else {
            continue; // scale dropped
        };
        let a = vieta_coeffs(&solution);
        let residual = (0..s)
            .map(|u| (a[u] - a_base[u]).abs())
            .fold(0.0f64, f64::max);
        if residual > RESIDUAL_ACCEPT {
            continue;
        }
        points.push(CurvePoint {
            scale: delta,
            d1: a[s] - a_base[s],
            d2: a[s + 1] - a_base[s + 1],
            residual,
        });
    }
    let label_str = curve_label.to_string();
    if points.is_empty() {
        return Err(TraceError::AllScalesFailed { label: label_str });
    }
    if points.len() < 4 {
        return Err(TraceError::TooFewPoints {
            label: label_str,
            kept: points.len(),
        });
    }
    let side = points[0].d1.signum() as i8;
    if points.iter().any(|p| p.d1.signum() as i8 != side || p.d1 == 0.0) {
        return Err(TraceError::SideFlip { label: label_str });
    }
    let slopes: Vec<f64> = points.iter().map(|p| p.d2 / p.d1).collect();
    let (slope, est_error) = aitken_limit(&slopes);
    let cauchy = slopes_are_cauchy(&slopes);
    let theta = a_base[s + 1] - slope * a_base[s];
    Ok(AdjacentCurve {
        label: curve_label,
        cover_label: *label,
        upper_mv: crate::stratlat::upward_neighbors(&setup.stratum)
            .into_iter()
            .find(|c| c.labels.contains(label))
            .map(|c| c.upper)
            .expect("label comes from a cover"),
        points,
        slope,
        theta,
        side,
        slope_cauchy: cauchy,
        slope_est_error: est_error,
    })
}

/// Traces every adjacent curve of the setup (one per cover label).
pub fn trace_all_curves(setup: &SectionSetup) -> Result<Vec<AdjacentCurve>, TraceError> {
    let mut curves = Vec::new();
    for cover in crate::stratlat::upward_neighbors(&setup.stratum) {
        for label in &cover.labels {
            let scales = default_scales(setup, label);
            curves.push(trace_adjacent_curve(setup, label, &scales)?);
        }
    }
    Ok(curves)
}

fn newton_solve(
    chart: &PerturbChart<'_>,
    delta: f64,
    s: usize,
    a_base: &[f64],
) -> Option<RootConfiguration> {
    let mut z = chart.initial();
    let mut cfg = chart.config(&z, delta)?;
    let mut residual = residual_vec(&cfg, s, a_base);
    for _ in 0..60 {
        if residual.amax() <= RESIDUAL_TOL {
            return Some(cfg);
        }
        let j = chart.constraint_jacobian(&cfg, s);
        let step = j.lu().solve(&residual)?;
        let mut lambda = 1.0f64;
        let mut advanced = false;
        for _ in 0..30 {
            let trial = &z - lambda * &step;
            if let Some(cfg_trial) = chart.config(&trial, delta) {
                let r_trial = residual_vec(&cfg_trial, s, a_base);
                if r_trial.norm() < residual.norm() {
                    z = trial;
                    cfg = cfg_trial;
                    residual = r_trial;
                    advanced = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !advanced {
            break;
        }
    }
    if residual.amax() <= RESIDUAL_ACCEPT {
        Some(cfg)
    } else {
        None
    }
}

fn residual_vec(cfg: &RootConfiguration, s: usize, a_base: &[f64]) -> DVector<f64> {
    let a = vieta_coeffs(cfg);
    DVector::from_iterator(s, (0..s).map(|u| a[u] - a_base[u]))
}

/// Successive slope differences must shrink by a factor of at least 1.5 on
/// (geometric) average; an exactly constant sequence counts as converged.
pub(crate) fn slopes_are_cauchy(slopes: &[f64]) -> bool {
    let scale = slopes.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let diffs: Vec<f64> = slopes
        .windows(2)
        .map(|w| (w[1] - w[0]).abs())
        .collect();
    if diffs.iter().all(|d| *d <= 1e-13 * scale) {
        return true;
    }
    let mut log_ratio_sum = 0.0;
    let mut count = 0usize;
    for w in diffs.windows(2) {
        let denom = w[1].max(1e-300);
        log_ratio_sum += (w[0] / denom).max(1e-6).ln();
        count += 1;
    }
    count > 0 && (log_ratio_sum / count as f64) >= 1.5f64.ln()
}

/// Iterated Aitken Δ² acceleration: handles the sum of geometric modes a
/// halved-scale ladder produces. Returns the accelerated limit and the size
/// of the last correction.
pub(crate) fn aitken_limit(values: &[f64]) -> (f64, f64) {
    let mut row = values.to_vec();
    let mut last = *row.last().unwrap();
    let mut correction = 0.0;
    while row.len() >= 3 {
        let mut next = Vec::with_capacity(row.len() - 2);
        for w in row.windows(3) {
            let (x0, x1, x2) = (w[0], w[1], w[2]);
            let denom = x2 - 2.0 * x1 + x0;
            if denom.abs() < 1e-300 {
                next.push(x2);
            } else {
                next.push(x2 - (x2 - x1) * (x2 - x1) / denom);
            }
        }
        let new_last = *next.last().unwrap();
        correction = (new_last - last).abs();
        // stop when acceleration no longer changes anything measurable
        if correction == 0.0 {
            return (new_last, 0.0);
        }
        last = new_last;
        row = next;
    }
    (last, correction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomkit::StratumPoint;
    use crate::lemmalab::section_setup_from_point;
    use crate::polycore::MultiplicityVector;
    use crate::stratlat::Stratum;
    use approx::assert_relative_eq;

    fn setup_for(real: &[(f64, u32)], pairs: &[(f64, f64)]) -> SectionSetup {
        let cfg = RootConfiguration::new(
            real.iter().map(|&(y, mult)| RealRoot { y, mult }).collect(),
            pairs
                .iter()
                .map(|&(alpha, beta)| ComplexPair { alpha, beta })
                .collect(),
        )
        .unwrap();
        section_setup_from_point(StratumPoint::from_config(cfg)).unwrap()
    }

    #[test]
    fn rejects_too_large_dimension() {
        let cfg = RootConfiguration::new(
            vec![RealRoot { y: -1.0, mult: 1 }, RealRoot { y: 1.0, mult: 1 }],
            vec![],
        )
        .unwrap();
        assert!(section_setup_from_point(StratumPoint::from_config(cfg)).is_err());
    }

    #[test]
    fn triple_root_curves_share_the_slope_minus_t() {
        // U = [3] at root t (n=3, s=1): both split curves have limit slope −t
        // in the (a_2, a_3) plane, with opposite cubic corrections.
        let t = 0.7;
        let setup = setup_for(&[(t, 3)], &[]);
        assert_eq!(setup.s, 1);
        let curves = trace_all_curves(&setup).unwrap();
        assert_eq!(curves.len(), 2);
        for c in &curves {
            assert_relative_eq!(c.slope, -t, epsilon = 1e-8);
            assert_eq!(c.side, -1, "odd family projects left");
            assert!(c.slope_cauchy, "slopes: {:?}", c.points);
            for p in &c.points {
                assert!(p.residual <= 1e-10);
            }
        }
    }

    #[test]
    fn double_double_slopes_are_plus_minus_one() {
        // U = [2,2] at roots ∓1 (n=4, s=2): the curves at the right root
        // (family i=1) have slope +1, at the left root (family i=2) −1.
        let setup = setup_for(&[(-1.0, 2), (1.0, 2)], &[]);
        let curves = trace_all_curves(&setup).unwrap();
        assert_eq!(curves.len(), 4); // two splits + two deletions
        for c in &curves {
            let expected = match c.label.family() {
                1 => 1.0,
                2 => -1.0,
                _ => unreachable!(),
            };
            assert_relative_eq!(c.slope, expected, epsilon = 1e-7);
        }
        // V_i sits opposite U_{i,1}
        for i in 1..=2 {
            let u = curves
                .iter()
                .find(|c| c.label == CurveLabel::Split { i, j: 1 })
                .unwrap();
            let v = curves
                .iter()
                .find(|c| c.label == CurveLabel::Delete { i })
                .unwrap();
            assert_eq!(u.side * v.side, -1);
        }
    }

    #[test]
    fn quartic_cusp_updown_order() {
        // U = [4] at t = 0.3 (n=4, s=1): the three split curves order by j
        // at matching offsets; all project left (family 1 is odd).
        let setup = setup_for(&[(0.3, 4)], &[]);
        let curves = trace_all_curves(&setup).unwrap();
        assert_eq!(curves.len(), 3);
        for c in &curves {
            assert_eq!(c.side, -1);
        }
        // compare d2 at the same scale index (same |d1| up to O(δ³): the
        // j=1 and j=3 curves share |d1| exactly in leading order)
        let by_j = |j: u32| {
            curves
                .iter()
                .find(|c| c.label == CurveLabel::Split { i: 1, j })
                .unwrap()
        };
        let (c1, c3) = (by_j(1), by_j(3));
        for (p1, p3) in c1.points.iter().zip(&c3.points) {
            assert!(
                p3.d2 > p1.d2,
                "larger j must sit above for an odd family: {:?} vs {:?}",
                p3,
                p1
            );
        }
    }

    #[test]
    fn aitken_accelerates_geometric_tails() {
        let values: Vec<f64> = (0..9)
            .map(|m| {
                let d = 0.2 * 0.5f64.powi(m);
                1.5 - 0.3 * d + 0.1 * d * d
            })
            .collect();
        let (limit, err) = aitken_limit(&values);
        assert_relative_eq!(limit, 1.5, epsilon = 1e-10);
        assert!(err < 1e-8);
    }
}
