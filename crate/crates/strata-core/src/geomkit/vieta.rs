//! Coordinate changes between roots, coefficients, and power sums.

use num_complex::Complex64;

use super::poly64::Poly64;
use super::RootConfiguration;

/// Expands the configuration into the monic polynomial it defines and
/// returns the coefficient vector (a_1, …, a_n).
pub fn vieta_coeffs(cfg: &RootConfiguration) -> Vec<f64> {
    expanded(cfg).trailing_descending(cfg.degree())
}

pub(crate) fn expanded(cfg: &RootConfiguration) -> Poly64 {
    let mut p = Poly64::one();
    for r in cfg.real_roots() {
        p = p.mul(&Poly64::linear(r.y).pow(r.mult));
    }
    for pair in cfg.complex_pairs() {
        p = p.mul(&Poly64::conjugate_quadratic(pair.alpha, pair.beta));
    }
    p
}

/// Power sums b_i = Σ mⱼ yⱼ^i + Σ 2·Re((αₖ + iβₖ)^i) for i = 1..=upto.
pub fn power_sums(cfg: &RootConfiguration, upto: usize) -> Vec<f64> {
    let mut b = vec![0.0; upto];
    for r in cfg.real_roots() {
        let m = f64::from(r.mult);
        let mut p = 1.0;
        for bi in b.iter_mut() {
            p *= r.y;
            *bi += m * p;
        }
    }
    for pair in cfg.complex_pairs() {
        let z = pair.upper();
        let mut p = Complex64::new(1.0, 0.0);
        for bi in b.iter_mut() {
            p *= z;
            *bi += 2.0 * p.re;
        }
    }
    b
}

/// Newton's identities, coefficients to power sums:
/// b_j = −j·a_j − Σ_{i<j} a_i b_{j−i}.
pub fn newton_a_to_b(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut b = vec![0.0; n];
    for j in 1..=n {
        let mut s = -(j as f64) * a[j - 1];
        for i in 1..j {
            s -= a[i - 1] * b[j - i - 1];
        }
        b[j - 1] = s;
    }
    b
}

/// Newton's identities, power sums to coefficients:
/// a_j = −(b_j + Σ_{i<j} a_i b_{j−i}) / j.
pub fn newton_b_to_a(b: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut a = vec![0.0; n];
    for j in 1..=n {
        let mut s = b[j - 1];
        for i in 1..j {
            s += a[i - 1] * b[j - i - 1];
        }
        a[j - 1] = -s / (j as f64);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomkit::{ComplexPair, RealRoot};
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
    fn vieta_double_double() {
        // (x^2-1)^2 = x^4 + 0x^3 - 2x^2 + 0x + 1
        let a = vieta_coeffs(&cfg(&[(-1.0, 2), (1.0, 2)], &[]));
        assert_eq!(a, vec![0.0, -2.0, 0.0, 1.0]);
    }

    #[test]
    fn vieta_binomial_theorem() {
        // (x - t)^5: a_j = C(5,j) (−t)^j
        let t = 0.75f64;
        let a = vieta_coeffs(&cfg(&[(t, 5)], &[]));
        let binom = [5.0, 10.0, 10.0, 5.0, 1.0];
        for (j, &c) in binom.iter().enumerate() {
            assert_relative_eq!(a[j], c * (-t).powi(j as i32 + 1), epsilon = 1e-12);
        }
    }

    #[test]
    fn vieta_pure_pair() {
        assert_eq!(vieta_coeffs(&cfg(&[], &[(0.0, 1.0)])), vec![0.0, 1.0]);
    }

    #[test]
    fn power_sums_examples() {
        // roots {-1 (x2), 1 (x2)}: b_i = 2(−1)^i + 2
        assert_eq!(
            power_sums(&cfg(&[(-1.0, 2), (1.0, 2)], &[]), 4),
            vec![0.0, 4.0, 0.0, 4.0]
        );
        // root t with multiplicity n: b_i = n t^i
        let b = power_sums(&cfg(&[(0.5, 3)], &[]), 3);
        assert_relative_eq!(b[0], 1.5);
        assert_relative_eq!(b[1], 0.75);
        assert_relative_eq!(b[2], 0.375);
        // pair ±i: b_1 = 0, b_2 = i^2 + (−i)^2 = −2
        assert_eq!(power_sums(&cfg(&[], &[(0.0, 1.0)]), 2), vec![0.0, -2.0]);
    }

    #[test]
    fn newton_identities_match_direct_routes() {
        // x^n has all-zero a and all-zero b
        assert_eq!(newton_a_to_b(&[0.0; 6]), vec![0.0; 6]);

        // a for (x^2-1)^2 maps to the directly computed power sums
        let c = cfg(&[(-1.0, 2), (1.0, 2)], &[]);
        let b = newton_a_to_b(&vieta_coeffs(&c));
        for (x, y) in b.iter().zip(power_sums(&c, 4)) {
            assert_relative_eq!(*x, y, epsilon = 1e-12);
        }

        // b = (n t, n t^2, …) maps back to the binomial coefficients of (x−t)^n
        let t = -0.4;
        let c = cfg(&[(t, 4)], &[]);
        let a = newton_b_to_a(&power_sums(&c, 4));
        for (x, y) in a.iter().zip(vieta_coeffs(&c)) {
            assert_relative_eq!(*x, y, epsilon = 1e-12);
        }

        // round trip with a mixed configuration
        let c = cfg(&[(-1.25, 1), (0.5, 2)], &[(0.3, 0.8)]);
        let a = vieta_coeffs(&c);
        let round = newton_b_to_a(&newton_a_to_b(&a));
        for (x, y) in a.iter().zip(round) {
            assert_relative_eq!(*x, y, epsilon = 1e-10);
        }
    }
}
