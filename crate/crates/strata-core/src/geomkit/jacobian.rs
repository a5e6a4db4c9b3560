//! The Jacobian of the parameter-roots → power-sums map.
//!
//! In conjugate-root coordinates the matrix is the Vandermonde matrix of the
//! parameter roots with the column of each real root scaled by its
//! multiplicity and row j scaled by j. The two charts are related pairwise
//! by (∂/∂α, ∂/∂β) = (∂/∂x + ∂/∂x̄, i·∂/∂x − i·∂/∂x̄) for x = α + iβ.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::RootConfiguration;

/// Which parameter coordinates the Jacobian is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// One column per parameter root; complex pairs contribute x and x̄
    /// columns. This is the chart of the cofactor formula for ∂b_k/∂b_u.
    ConjugateRoots,
    /// Real coordinates: one column per real position, and (α, β) columns
    /// per pair. This is the chart of real tangent frames.
    AlphaBeta,
}

/// The Jacobian matrix ∂b_j/∂param_i for j = 1..=size, together with its
/// determinant and cofactors on demand. A singular determinant is a valid
/// output (it happens exactly when two parameter roots coincide in the
/// conjugate-root chart).
#[derive(Debug, Clone)]
pub struct JacobianReport {
    pub chart: Chart,
    pub matrix: DMatrix<Complex64>,
    pub determinant: Complex64,
}

impl JacobianReport {
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// Cofactor of the (u, i) entry, 0-based, computed from the minor so it
    /// stays meaningful at singular matrices.
    pub fn cofactor(&self, u: usize, i: usize) -> Complex64 {
        let minor = self.matrix.clone().remove_row(u).remove_column(i);
        let sign = if (u + i) % 2 == 0 { 1.0 } else { -1.0 };
        Complex64::new(sign, 0.0) * minor.determinant()
    }

    /// The real matrix view; meaningful in the AlphaBeta chart where every
    /// entry is real.
    pub fn real_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.matrix.nrows(), self.matrix.ncols(), |r, c| {
            self.matrix[(r, c)].re
        })
    }
}

/// Builds the Jacobian of (params) ↦ (b_1, …, b_size) in the requested
/// chart, with `size` = number of parameters.
pub fn jacobian(cfg: &RootConfiguration, chart: Chart) -> JacobianReport {
    let size = cfg.param_count();
    let matrix = jacobian_rows(cfg, chart, size);
    let determinant = matrix.clone().determinant();
    JacobianReport {
        chart,
        matrix,
        determinant,
    }
}

/// The Jacobian block of (params) ↦ (b_1, …, b_rows); `rows` may exceed the
/// parameter count (the extra rows describe dependent power sums).
pub fn jacobian_rows(cfg: &RootConfiguration, chart: Chart, rows: usize) -> DMatrix<Complex64> {
    let cols = cfg.param_count();
    let mut m = DMatrix::zeros(rows, cols);
    match chart {
        Chart::ConjugateRoots => {
            for (i, (x, w)) in cfg.param_roots().into_iter().enumerate() {
                let mut p = Complex64::new(1.0, 0.0);
                for j in 1..=rows {
                    m[(j - 1, i)] = (j as f64) * w * p;
                    p *= x;
                }
            }
        }
        Chart::AlphaBeta => {
            let q = cfg.real_roots().len();
            for (i, r) in cfg.real_roots().iter().enumerate() {
                let mut p = 1.0;
                for j in 1..=rows {
                    m[(j - 1, i)] = Complex64::new((j as f64) * f64::from(r.mult) * p, 0.0);
                    p *= r.y;
                }
            }
            for (k, pair) in cfg.complex_pairs().iter().enumerate() {
                let z = pair.upper();
                let mut p = Complex64::new(1.0, 0.0);
                for j in 1..=rows {
                    let jf = j as f64;
                    // b_j gets 2·Re(z^j) from the pair
                    m[(j - 1, q + 2 * k)] = Complex64::new(2.0 * jf * p.re, 0.0);
                    m[(j - 1, q + 2 * k + 1)] = Complex64::new(-2.0 * jf * p.im, 0.0);
                    p *= z;
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomkit::{power_sums, ComplexPair, RealRoot};
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
    fn double_root_line() {
        // n=2, (x−t)^2: single parameter t, b_1 = 2t so the matrix is [2]
        let j = jacobian(&cfg(&[(0.7, 2)], &[]), Chart::ConjugateRoots);
        assert_eq!(j.size(), 1);
        assert_relative_eq!(j.matrix[(0, 0)].re, 2.0);
        assert_relative_eq!(j.determinant.re, 2.0);
    }

    #[test]
    fn weighted_vandermonde_for_two_real_roots() {
        // n=3, roots u<v with multiplicities (2,1):
        // b_1 = 2u + v, b_2 = 2u^2 + v^2 -> M = [[2,1],[4u,2v]], w = 4(v−u)
        let (u, v) = (-0.3, 0.9);
        let j = jacobian(&cfg(&[(u, 2), (v, 1)], &[]), Chart::ConjugateRoots);
        assert_relative_eq!(j.matrix[(0, 0)].re, 2.0);
        assert_relative_eq!(j.matrix[(0, 1)].re, 1.0);
        assert_relative_eq!(j.matrix[(1, 0)].re, 4.0 * u);
        assert_relative_eq!(j.matrix[(1, 1)].re, 2.0 * v);
        assert_relative_eq!(j.determinant.re, 4.0 * (v - u), epsilon = 1e-12);
    }

    #[test]
    fn coincident_pairs_are_singular() {
        let j = jacobian(&cfg(&[], &[(0.4, 0.8), (0.4, 0.8)]), Chart::ConjugateRoots);
        assert!(j.determinant.norm() < 1e-12);
    }

    #[test]
    fn alpha_beta_chart_matches_finite_differences() {
        let c = cfg(&[(-0.8, 2)], &[(0.5, 1.1)]);
        let j = jacobian(&c, Chart::AlphaBeta).real_matrix();
        let h = 1e-6;
        let n = 3;
        let base = power_sums(&c, n);
        // column 1: alpha of the pair
        let cp = cfg(&[(-0.8, 2)], &[(0.5 + h, 1.1)]);
        let bp = power_sums(&cp, n);
        for row in 0..n {
            assert_relative_eq!(j[(row, 1)], (bp[row] - base[row]) / h, epsilon = 1e-4);
        }
        // column 2: beta of the pair
        let cp = cfg(&[(-0.8, 2)], &[(0.5, 1.1 + h)]);
        let bp = power_sums(&cp, n);
        for row in 0..n {
            assert_relative_eq!(j[(row, 2)], (bp[row] - base[row]) / h, epsilon = 1e-4);
        }
    }

    #[test]
    fn cofactor_is_signed_minor() {
        let j = jacobian(&cfg(&[(-1.0, 2), (1.0, 2)], &[]), Chart::ConjugateRoots);
        // M = [[2, 2], [-4, 4]]; cofactors: A00 = 4, A01 = 4, A10 = -2, A11 = 2
        assert_relative_eq!(j.cofactor(0, 0).re, 4.0);
        assert_relative_eq!(j.cofactor(0, 1).re, 4.0);
        assert_relative_eq!(j.cofactor(1, 0).re, -2.0);
        assert_relative_eq!(j.cofactor(1, 1).re, 2.0);
    }
}
