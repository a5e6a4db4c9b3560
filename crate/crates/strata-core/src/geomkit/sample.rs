//! Seeded sampling of stratum points.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::stratlat::Stratum;

use super::{ComplexPair, RealRoot, RootConfiguration, StratumPoint};

/// Sampling window and separation constraints. The defaults keep the
/// Vandermonde conditioning sane for degrees up to 8.
#[derive(Debug, Clone, Copy)]
pub struct SampleBox {
    pub min: f64,
    pub max: f64,
    /// Minimum distance between any two parameter roots (real positions and
    /// pair centers alike).
    pub min_separation: f64,
    /// Lower bound on the imaginary part of complex pairs.
    pub beta_min: f64,
}

impl Default for SampleBox {
    fn default() -> Self {
        SampleBox {
            min: -2.0,
            max: 2.0,
            min_separation: 0.2,
            beta_min: 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampleError {
    /// The box cannot hold the requested roots at the requested separation.
    BoxTooSmall { needed: f64, available: f64 },
}

impl fmt::Display for SampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleError::BoxTooSmall { needed, available } => write!(
                f,
                "sample box too small: need span {:.3}, box provides {:.3}",
                needed, available
            ),
        }
    }
}

impl std::error::Error for SampleError {}

/// Draws a configuration on the stratum uniformly from the box, honouring
/// the separation constraints. Deterministic for a fixed seed.
pub fn sample_stratum(
    stratum: &Stratum,
    seed: u64,
    sample_box: &SampleBox,
) -> Result<StratumPoint, SampleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = sample_config(stratum, &mut rng, sample_box)?;
    Ok(StratumPoint::from_config(config))
}

/// Same as [`sample_stratum`] but drawing from a caller-provided generator,
/// for batch sampling.
pub fn sample_config(
    stratum: &Stratum,
    rng: &mut impl Rng,
    sample_box: &SampleBox,
) -> Result<RootConfiguration, SampleError> {
    let q = stratum.mv().group_count();
    let pairs = stratum.complex_pairs() as usize;
    let span = sample_box.max - sample_box.min;
    let needed = (q.max(1) - 1) as f64 * sample_box.min_separation;
    if needed >= span {
        return Err(SampleError::BoxTooSmall {
            needed,
            available: span,
        });
    }

    const MAX_ATTEMPTS: usize = 10_000;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut positions: Vec<f64> = (0..q)
            .map(|_| rng.random_range(sample_box.min..sample_box.max))
            .collect();
        positions.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in positions.windows(2) {
            if w[1] - w[0] < sample_box.min_separation {
                continue 'attempt;
            }
        }
        let mut drawn_pairs: Vec<ComplexPair> = Vec::with_capacity(pairs);
        for _ in 0..pairs {
            let alpha = rng.random_range(sample_box.min..sample_box.max);
            let beta = rng.random_range(sample_box.beta_min..sample_box.max.max(sample_box.beta_min + 1.0));
            drawn_pairs.push(ComplexPair { alpha, beta });
        }
        for i in 0..drawn_pairs.len() {
            for j in (i + 1)..drawn_pairs.len() {
                let da = drawn_pairs[i].alpha - drawn_pairs[j].alpha;
                let db = drawn_pairs[i].beta - drawn_pairs[j].beta;
                if (da * da + db * db).sqrt() < sample_box.min_separation {
                    continue 'attempt;
                }
            }
        }
        let real: Vec<RealRoot> = positions
            .into_iter()
            .zip(stratum.mv().parts())
            .map(|(y, &mult)| RealRoot { y, mult })
            .collect();
        let config = RootConfiguration::new(real, drawn_pairs).expect("sampled configs are valid");
        return Ok(config);
    }
    Err(SampleError::BoxTooSmall {
        needed,
        available: span,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MultiplicityVector;

    fn stratum(parts: &[u32], n: u32) -> Stratum {
        Stratum::new(MultiplicityVector::new(parts.to_vec()).unwrap(), n).unwrap()
    }

    #[test]
    fn no_real_roots_stays_above_discriminant() {
        // stratum [] for n=2: a point with a_2 > a_1^2/4
        for seed in 0..20 {
            let p = sample_stratum(&stratum(&[], 2), seed, &SampleBox::default()).unwrap();
            assert!(p.a[1] > p.a[0] * p.a[0] / 4.0, "seed {}: {:?}", seed, p.a);
        }
    }

    #[test]
    fn double_root_lies_on_parabola() {
        // stratum [2] for n=2: a_2 = a_1^2/4 exactly (up to rounding)
        for seed in 0..20 {
            let p = sample_stratum(&stratum(&[2], 2), seed, &SampleBox::default()).unwrap();
            assert!((p.a[1] - p.a[0] * p.a[0] / 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = stratum(&[1, 2, 1], 6);
        let p1 = sample_stratum(&s, 42, &SampleBox::default()).unwrap();
        let p2 = sample_stratum(&s, 42, &SampleBox::default()).unwrap();
        assert_eq!(p1.config, p2.config);
        let p3 = sample_stratum(&s, 43, &SampleBox::default()).unwrap();
        assert_ne!(p1.config, p3.config);
    }

    #[test]
    fn separation_is_honoured() {
        let s = stratum(&[1, 1, 1, 1], 6);
        for seed in 0..10 {
            let p = sample_stratum(&s, seed, &SampleBox::default()).unwrap();
            for w in p.config.real_roots().windows(2) {
                assert!(w[1].y - w[0].y >= 0.2);
            }
        }
    }

    #[test]
    fn box_too_small_is_reported() {
        let tight = SampleBox {
            min: 0.0,
            max: 0.5,
            min_separation: 0.2,
            beta_min: 0.2,
        };
        let s = stratum(&[1, 1, 1, 1], 4);
        assert!(matches!(
            sample_stratum(&s, 1, &tight),
            Err(SampleError::BoxTooSmall { .. })
        ));
    }
}
