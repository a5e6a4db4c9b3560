//! Tangent frames of strata in coefficient coordinates.
//!
//! A stratum of codimension r is the graph of an r-dimensional function over
//! the first n−r coefficients; its tangent space at an interior point is
//! spanned by the derivatives of the Vieta map with respect to the n−r real
//! parameters. The transversality margin quantifies how far the frame is
//! from containing a direction inside the last-r coordinate plane.

use std::fmt;

use nalgebra::DMatrix;

use super::poly64::Poly64;
use super::vieta::expanded;
use super::{RootConfiguration, StratumPoint};

#[derive(Debug, Clone, PartialEq)]
pub enum FrameError {
    /// The parameter Jacobian lost rank beyond tolerance; does not happen at
    /// interior points (distinct real roots, beta > 0).
    RankDeficient { sigma_min: f64 },
}

impl fmt::Display for FrameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameError::RankDeficient { sigma_min } => {
                write!(f, "tangent basis is rank deficient (sigma_min {:.3e})", sigma_min)
            }
        }
    }
}

impl std::error::Error for FrameError {}

/// An orthonormal basis of the tangent space at a stratum point, in
/// a-coordinates, together with the graph gradient and the transversality
/// margin.
#[derive(Debug, Clone)]
pub struct TangentFrame {
    pub point: StratumPoint,
    /// n − r orthonormal vectors of length n spanning the tangent space.
    pub basis: Vec<Vec<f64>>,
    /// r × (n − r) matrix G with G[k][u] = ∂a_{n−r+k+1}/∂a_{u+1} along the
    /// stratum (0-based storage of the 1-based coefficient indices).
    pub graph_gradient: Vec<Vec<f64>>,
    /// Smallest singular value of the first n−r rows of the orthonormalized
    /// basis. Positive iff the tangent space is transversal to the
    /// coordinate plane of the last r coefficients.
    pub margin: f64,
}

/// Derivative of the coefficient vector with respect to each real parameter:
/// an n × (n−r) matrix. Columns come from exact polynomial differentiation
/// of the Vieta product.
pub(crate) fn coefficient_jacobian(cfg: &RootConfiguration) -> DMatrix<f64> {
    let n = cfg.degree();
    let p = expanded(cfg);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(cfg.param_count());
    for r in cfg.real_roots() {
        // d/dy Π = −m · P / (x − y)
        let quotient = p.div_monic(&Poly64::linear(r.y));
        columns.push(quotient.scale(-f64::from(r.mult)).as_coefficient_column(n));
    }
    for pair in cfg.complex_pairs() {
        let quad = Poly64::conjugate_quadratic(pair.alpha, pair.beta);
        let quotient = p.div_monic(&quad);
        // d/dα (x² − 2αx + α² + β²) = −2(x − α); d/dβ … = 2β
        let dalpha = quotient
            .mul(&Poly64::from_ascending(vec![2.0 * pair.alpha, -2.0]))
            .as_coefficient_column(n);
        let dbeta = quotient.scale(2.0 * pair.beta).as_coefficient_column(n);
        columns.push(dalpha);
        columns.push(dbeta);
    }
    DMatrix::from_fn(n, columns.len(), |row, col| columns[col][row])
}

/// Computes the tangent frame at an interior stratum point.
pub fn tangent_frame(point: &StratumPoint) -> Result<TangentFrame, FrameError> {
    let d = coefficient_jacobian(&point.config);
    frame_from_jacobian(point, &d)
}

fn frame_from_jacobian(point: &StratumPoint, d: &DMatrix<f64>) -> Result<TangentFrame, FrameError> {
    let n = d.nrows();
    let p = d.ncols(); // n − r
    let svd = d.clone().svd(false, false);
    let sigma_min = svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    if !(sigma_min > 1e-12 * sigma_max.max(1.0)) {
        return Err(FrameError::RankDeficient { sigma_min });
    }

    // Orthonormalize the columns.
    let qr = d.clone().qr();
    let q = qr.q();
    let basis: Vec<Vec<f64>> = (0..p).map(|c| q.column(c).iter().cloned().collect()).collect();

    // Margin: smallest singular value of the top (n−r)-row block of Q.
    let top = q.rows(0, p).into_owned();
    let margin = top
        .svd(false, false)
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);

    // Graph gradient: rows n−r+1..n of D times the inverse of the top block
    // of D.
    let d_top = d.rows(0, p).into_owned();
    let d_bot = d.rows(p, n - p).into_owned();
    let top_inv = d_top
        .lu()
        .try_inverse()
        .ok_or(FrameError::RankDeficient { sigma_min })?;
    let g = d_bot * top_inv;
    let graph_gradient: Vec<Vec<f64>> = (0..n - p)
        .map(|row| g.row(row).iter().cloned().collect())
        .collect();

    Ok(TangentFrame {
        point: point.clone(),
        basis,
        graph_gradient,
        margin,
    })
}

/// The frame at a boundary or coincidence point, as the extrapolated limit
/// of the graph gradient along a declared approach path. The returned basis
/// is the graph basis [I; G] of the extrapolated gradient, orthonormalized.
pub fn tangent_frame_limit(
    path: &super::limits::ApproachPath<'_>,
    opts: &super::limits::ProbeOptions,
) -> Result<TangentFrame, FrameError> {
    let configs: Vec<RootConfiguration> = (0..opts.steps)
        .map(|m| (path.at)(opts.eps0 * opts.ratio.powi(m as i32)))
        .collect();
    let limit_point = StratumPoint::from_config(configs.last().unwrap().clone());
    let n = limit_point.config.degree();
    let p = limit_point.config.param_count();

    // Extrapolate each gradient entry along the path.
    let mut grids: Vec<Vec<Vec<f64>>> = Vec::new();
    for cfg in &configs {
        let point = StratumPoint::from_config(cfg.clone());
        let frame = tangent_frame(&point)?;
        grids.push(frame.graph_gradient);
    }
    let mut g = DMatrix::zeros(n - p, p);
    for row in 0..n - p {
        for col in 0..p {
            let series: Vec<f64> = grids.iter().map(|m| m[row][col]).collect();
            g[(row, col)] = super::limits::richardson_limit(&series, opts.ratio).0;
        }
    }
    let mut d = DMatrix::zeros(n, p);
    for c in 0..p {
        d[(c, c)] = 1.0;
    }
    for row in 0..n - p {
        for col in 0..p {
            d[(p + row, col)] = g[(row, col)];
        }
    }
    frame_from_jacobian(&limit_point, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomkit::limits::{ApproachPath, ProbeOptions};
    use crate::geomkit::{ComplexPair, RealRoot};
    use approx::assert_relative_eq;

    fn point(real: &[(f64, u32)], pairs: &[(f64, f64)]) -> StratumPoint {
        StratumPoint::from_config(
            RootConfiguration::new(
                real.iter().map(|&(y, mult)| RealRoot { y, mult }).collect(),
                pairs
                    .iter()
                    .map(|&(alpha, beta)| ComplexPair { alpha, beta })
                    .collect(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn parabola_tangent() {
        // n=2, stratum [2] at t: (a_1, a_2) = (−2t, t²), tangent ∝ (−2, 2t)
        for t in [-1.0, 0.0, 0.8] {
            let frame = tangent_frame(&point(&[(t, 2)], &[])).unwrap();
            let v = &frame.basis[0];
            // direction matches (−2, 2t) up to normalization
            let cross = v[0] * (2.0 * t) - v[1] * (-2.0);
            assert_relative_eq!(cross, 0.0, epsilon = 1e-12);
            assert!(frame.margin > 0.0);
            // graph gradient da_2/da_1 = −t on the parabola a_2 = a_1²/4
            assert_relative_eq!(frame.graph_gradient[0][0], -t, epsilon = 1e-12);
        }
    }

    #[test]
    fn limit_frame_at_the_origin_of_the_cusp_line() {
        // n=4, stratum [4] approaching t=0: direction of (−4, 12t², …)
        // degenerates to (−4, 0, 0, 0); the limit frame stays transversal to
        // the last three coordinates.
        let path = ApproachPath::new("along [4] to the origin", |eps| {
            RootConfiguration::new(vec![RealRoot { y: eps, mult: 4 }], vec![]).unwrap()
        });
        let frame = tangent_frame_limit(&path, &ProbeOptions::default()).unwrap();
        assert!(frame.margin > 0.9, "margin {}", frame.margin);
        let v = &frame.basis[0];
        assert_relative_eq!(v[0].abs(), 1.0, epsilon = 1e-6);
        for k in 1..4 {
            assert_relative_eq!(v[k], 0.0, epsilon = 1e-5);
        }
    }

    #[test]
    fn interior_margins_are_positive() {
        let samples = [
            point(&[(-1.3, 1), (0.2, 2), (1.4, 1)], &[]),
            point(&[(0.5, 3)], &[(-0.4, 0.8)]),
            point(&[], &[(0.0, 1.0), (0.7, 0.5)]),
        ];
        for p in samples {
            let frame = tangent_frame(&p).unwrap();
            assert!(frame.margin > 1e-8, "margin {}", frame.margin);
        }
    }

    #[test]
    fn two_sheets_give_distinct_limit_frames() {
        // stratum [2] (n=4) approaching the double-double point (x²−1)²
        // along its two local sheets: the limit tangent planes differ.
        let sheet = |sign: f64| {
            ApproachPath::new("sheet", move |eps| {
                RootConfiguration::new(
                    vec![RealRoot { y: sign, mult: 2 }],
                    vec![ComplexPair {
                        alpha: -sign,
                        beta: eps,
                    }],
                )
                .unwrap()
            })
        };
        let opts = ProbeOptions {
            eps0: 0.05,
            ..ProbeOptions::default()
        };
        let f1 = tangent_frame_limit(&sheet(1.0), &opts).unwrap();
        let f2 = tangent_frame_limit(&sheet(-1.0), &opts).unwrap();
        let mut max_diff = 0.0f64;
        for (r1, r2) in f1.graph_gradient.iter().zip(&f2.graph_gradient) {
            for (x, y) in r1.iter().zip(r2) {
                max_diff = max_diff.max((x - y).abs());
            }
        }
        assert!(max_diff > 1e-3, "sheets should disagree, diff {}", max_diff);
    }
}
