//! Exact expansion of a polynomial from its root data.

use num_traits::{One, Signed};

use super::mv::{MultiplicityVector, MvError};
use super::poly::{MonicPolynomial, Rat, RatPoly};

/// Root data with exact rational entries: strictly increasing real roots
/// with multiplicities, plus complex conjugate pairs α ± iβ (each pair
/// listed once, β > 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRootConfig {
    real_roots: Vec<(Rat, u32)>,
    complex_pairs: Vec<(Rat, Rat)>,
}

impl RationalRootConfig {
    pub fn new(
        real_roots: Vec<(Rat, u32)>,
        complex_pairs: Vec<(Rat, Rat)>,
    ) -> Result<Self, MvError> {
        for (i, (_, m)) in real_roots.iter().enumerate() {
            if *m == 0 {
                return Err(MvError::NonPositivePart { index: i });
            }
        }
        for w in real_roots.windows(2) {
            assert!(w[0].0 < w[1].0, "real roots must be strictly increasing");
        }
        for (_, beta) in &complex_pairs {
            assert!(beta.is_positive(), "beta must be positive");
        }
        Ok(RationalRootConfig {
            real_roots,
            complex_pairs,
        })
    }

    pub fn real_roots(&self) -> &[(Rat, u32)] {
        &self.real_roots
    }

    pub fn complex_pairs(&self) -> &[(Rat, Rat)] {
        &self.complex_pairs
    }

    pub fn degree(&self) -> u32 {
        self.real_roots.iter().map(|(_, m)| m).sum::<u32>()
            + 2 * self.complex_pairs.len() as u32
    }

    /// The multiplicity vector this configuration realizes.
    pub fn mv(&self) -> MultiplicityVector {
        MultiplicityVector::new(self.real_roots.iter().map(|&(_, m)| m).collect())
            .expect("positive multiplicities")
    }
}

/// Expands Π (x − yⱼ)^rⱼ · Π (x² − 2αₖx + αₖ² + βₖ²) exactly.
pub fn expand_from_roots(cfg: &RationalRootConfig) -> MonicPolynomial {
    let mut p = RatPoly::one();
    for (y, m) in &cfg.real_roots {
        p = &p * &RatPoly::linear_from_root(y).pow(*m);
    }
    for (alpha, beta) in &cfg.complex_pairs {
        let two = Rat::from_integer(2.into());
        let quad = RatPoly::from_descending(vec![
            Rat::one(),
            -(&two * alpha),
            alpha * alpha + beta * beta,
        ]);
        p = &p * &quad;
    }
    MonicPolynomial::from_ratpoly(&p).expect("degree >= 1 configuration")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn double_roots_at_plus_minus_one() {
        let cfg =
            RationalRootConfig::new(vec![(rat(-1), 2), (rat(1), 2)], vec![]).unwrap();
        let p = expand_from_roots(&cfg);
        assert_eq!(p.to_ratpoly(), RatPoly::from_integers(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn pure_power() {
        let cfg = RationalRootConfig::new(vec![(rat(0), 5)], vec![]).unwrap();
        assert_eq!(expand_from_roots(&cfg).to_ratpoly(), RatPoly::monomial(5));
    }

    #[test]
    fn doubled_imaginary_pair() {
        // two identical pairs ±i give (x^2+1)^2 = x^4 + 2x^2 + 1
        let cfg =
            RationalRootConfig::new(vec![], vec![(rat(0), rat(1)), (rat(0), rat(1))]).unwrap();
        assert_eq!(
            expand_from_roots(&cfg).to_ratpoly(),
            RatPoly::from_integers(&[1, 0, 2, 0, 1])
        );
    }

    #[test]
    fn mv_round_trip() {
        use crate::polycore::mv::multiplicity_vector;
        let cfg = RationalRootConfig::new(
            vec![(Rat::new(BigInt::from(-3), BigInt::from(2)), 1), (rat(2), 3)],
            vec![(rat(1), rat(2))],
        )
        .unwrap();
        let p = expand_from_roots(&cfg);
        assert_eq!(p.degree(), 6);
        assert_eq!(multiplicity_vector(&p), cfg.mv());
    }
}
