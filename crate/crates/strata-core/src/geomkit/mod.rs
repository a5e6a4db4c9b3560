//! The geometry of strata: root-chart sampling, Vieta and power-sum
//! coordinate changes, the multiplicity-weighted Vandermonde Jacobian,
//! graph partials and their boundary limits, tangent frames, and the
//! real/complex factor splitting.
//!
//! Everything here is floating point (the exact layer lives in
//! [`crate::polycore`]); f64 comfortably covers every tolerance the
//! verification suite pins.

mod jacobian;
mod limits;
mod partials;
mod poly64;
mod sample;
mod split;
pub mod symbolic;
mod tangent;
mod vieta;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::polycore::{MultiplicityVector, Rat, RationalRootConfig};
use crate::stratlat::Stratum;

pub use jacobian::{jacobian, Chart, JacobianReport};
pub use limits::{boundary_limit_probe, ApproachPath, ConvergenceReport, ProbeOptions, TargetReport};
pub use partials::{
    graph_partial_fd, graph_partials, graph_partials_interior, solve_params_for_b,
};
pub use poly64::Poly64;
pub use sample::{sample_config, sample_stratum, SampleBox, SampleError};
pub use split::{split_real_complex, RealComplexSplit};
pub use tangent::{tangent_frame, tangent_frame_limit, FrameError, TangentFrame};
pub(crate) use tangent::coefficient_jacobian;
pub use vieta::{newton_a_to_b, newton_b_to_a, power_sums, vieta_coeffs};

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    NonPositiveMultiplicity { index: usize },
    NonIncreasingPositions { index: usize },
    NonPositiveBeta { index: usize },
    EmptyConfiguration,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::NonPositiveMultiplicity { index } => {
                write!(f, "real root {} has multiplicity 0", index)
            }
            ConfigError::NonIncreasingPositions { index } => {
                write!(f, "real root positions must be strictly increasing at index {}", index)
            }
            ConfigError::NonPositiveBeta { index } => {
                write!(f, "complex pair {} must have beta > 0", index)
            }
            ConfigError::EmptyConfiguration => write!(f, "configuration has degree 0"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// A real root position with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealRoot {
    pub y: f64,
    pub mult: u32,
}

/// One complex conjugate pair α ± iβ, β > 0, counted once.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPair {
    pub alpha: f64,
    pub beta: f64,
}

impl ComplexPair {
    pub fn upper(&self) -> Complex64 {
        Complex64::new(self.alpha, self.beta)
    }
}

/// The parameter chart of a stratum: distinct ordered real roots with
/// multiplicities plus complex conjugate pairs. The free parameters
/// (q positions plus 2 per pair) number exactly the stratum dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct RootConfiguration {
    real: Vec<RealRoot>,
    pairs: Vec<ComplexPair>,
}

impl RootConfiguration {
    pub fn new(real: Vec<RealRoot>, pairs: Vec<ComplexPair>) -> Result<Self, ConfigError> {
        for (index, r) in real.iter().enumerate() {
            if r.mult == 0 {
                return Err(ConfigError::NonPositiveMultiplicity { index });
            }
        }
        for (index, w) in real.windows(2).enumerate() {
            if !(w[0].y < w[1].y) {
                return Err(ConfigError::NonIncreasingPositions { index: index + 1 });
            }
        }
        for (index, p) in pairs.iter().enumerate() {
            if !(p.beta > 0.0) {
                return Err(ConfigError::NonPositiveBeta { index });
            }
        }
        if real.is_empty() && pairs.is_empty() {
            return Err(ConfigError::EmptyConfiguration);
        }
        Ok(RootConfiguration { real, pairs })
    }

    pub fn real_roots(&self) -> &[RealRoot] {
        &self.real
    }

    pub fn complex_pairs(&self) -> &[ComplexPair] {
        &self.pairs
    }

    /// Ambient degree n = Σ multiplicities + 2 · #pairs.
    pub fn degree(&self) -> usize {
        self.real.iter().map(|r| r.mult as usize).sum::<usize>() + 2 * self.pairs.len()
    }

    pub fn mv(&self) -> MultiplicityVector {
        MultiplicityVector::new(self.real.iter().map(|r| r.mult).collect())
            .expect("positive multiplicities")
    }

    pub fn stratum(&self) -> Stratum {
        Stratum::new(self.mv(), self.degree() as u32).expect("consistent by construction")
    }

    /// Number of free parameters: q + 2·#pairs = n − r.
    pub fn param_count(&self) -> usize {
        self.real.len() + 2 * self.pairs.len()
    }

    /// The parameter roots (x_1, …, x_{n−r}) with weights: each distinct real
    /// root with its multiplicity, then for each pair the root and its
    /// conjugate, each with weight 1.
    pub fn param_roots(&self) -> Vec<(Complex64, f64)> {
        let mut out = Vec::with_capacity(self.param_count());
        for r in &self.real {
            out.push((Complex64::new(r.y, 0.0), f64::from(r.mult)));
        }
        for p in &self.pairs {
            out.push((p.upper(), 1.0));
            out.push((p.upper().conj(), 1.0));
        }
        out
    }

    /// Exact rational view (every finite f64 is a rational).
    pub fn to_rational(&self) -> RationalRootConfig {
        let to_rat = |x: f64| Rat::from_float(x).expect("finite");
        RationalRootConfig::new(
            self.real.iter().map(|r| (to_rat(r.y), r.mult)).collect(),
            self.pairs
                .iter()
                .map(|p| (to_rat(p.alpha), to_rat(p.beta)))
                .collect(),
        )
        .expect("validated")
    }
}

/// A sampled point of a stratum: the root chart plus its coefficient vector
/// a = (a_1, …, a_n) and power-sum vector b = (b_1, …, b_n).
#[derive(Debug, Clone, PartialEq)]
pub struct StratumPoint {
    pub stratum: Stratum,
    pub config: RootConfiguration,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl StratumPoint {
    pub fn from_config(config: RootConfiguration) -> Self {
        let n = config.degree();
        let a = vieta_coeffs(&config);
        let b = power_sums(&config, n);
        StratumPoint {
            stratum: config.stratum(),
            config,
            a,
            b,
        }
    }
}

/// Wire format for a stratum point.
#[derive(Debug, Serialize, Deserialize)]
pub struct StratumPointJson {
    pub mv: Vec<u32>,
    pub n: u32,
    pub real_roots: Vec<RealRoot>,
    pub complex_pairs: Vec<ComplexPair>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl From<&StratumPoint> for StratumPointJson {
    fn from(p: &StratumPoint) -> Self {
        StratumPointJson {
            mv: p.stratum.mv().parts().to_vec(),
            n: p.stratum.ambient_degree(),
            real_roots: p.config.real_roots().to_vec(),
            complex_pairs: p.config.complex_pairs().to_vec(),
            a: p.a.clone(),
            b: p.b.clone(),
        }
    }
}

impl StratumPointJson {
    /// Rebuilds the point, recomputing a and b from the roots and checking
    /// consistency with the transported vectors.
    pub fn into_point(self) -> Result<StratumPoint, ConfigError> {
        let config = RootConfiguration::new(self.real_roots, self.complex_pairs)?;
        Ok(StratumPoint::from_config(config))
    }
}
