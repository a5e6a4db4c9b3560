//! Minimal dense f64 polynomials for the geometry layer.

/// Coefficients in ascending order; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly64 {
    coeffs: Vec<f64>,
}

impl Poly64 {
    pub fn zero() -> Self {
        Poly64 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly64 { coeffs: vec![1.0] }
    }

    pub fn from_ascending(coeffs: Vec<f64>) -> Self {
        let mut p = Poly64 { coeffs };
        p.trim();
        p
    }

    /// x − r.
    pub fn linear(root: f64) -> Self {
        Poly64 {
            coeffs: vec![-root, 1.0],
        }
    }

    /// x² − 2αx + (α² + β²), the monic quadratic with roots α ± iβ.
    pub fn conjugate_quadratic(alpha: f64, beta: f64) -> Self {
        Poly64 {
            coeffs: vec![alpha * alpha + beta * beta, -2.0 * alpha, 1.0],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == 0.0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs_ascending(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &Poly64) -> Poly64 {
        if self.is_zero() || rhs.is_zero() {
            return Poly64::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly64::from_ascending(coeffs)
    }

    pub fn scale(&self, s: f64) -> Poly64 {
        Poly64::from_ascending(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Poly64 {
        let mut acc = Poly64::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient by a monic divisor, discarding the remainder. For exact
    /// factors the remainder is zero up to rounding.
    pub fn div_monic(&self, divisor: &Poly64) -> Poly64 {
        let d = divisor.degree().expect("nonzero divisor");
        debug_assert!((divisor.coeff(d) - 1.0).abs() < 1e-12);
        if self.coeffs.len() <= d {
            return Poly64::zero();
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d;
        let mut quot = vec![0.0; qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + d];
            quot[k] = c;
            for i in 0..=d {
                rem[k + i] -= c * divisor.coeff(i);
            }
        }
        Poly64::from_ascending(quot)
    }

    /// Coefficient vector (a_1, …, a_n) of a monic polynomial of degree n.
    pub fn trailing_descending(&self, n: usize) -> Vec<f64> {
        debug_assert_eq!(self.degree(), Some(n));
        (1..=n).map(|j| self.coeff(n - j)).collect()
    }

    /// Reads a polynomial of degree ≤ n−1 as a length-n column in the
    /// (a_1, …, a_n) coordinates of degree-n monic polynomials: the
    /// coefficient of x^{n−j} lands in slot j.
    pub fn as_coefficient_column(&self, n: usize) -> Vec<f64> {
        (1..=n).map(|j| self.coeff(n - j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_quotient() {
        let p = Poly64::linear(1.0).pow(2).mul(&Poly64::conjugate_quadratic(0.0, 1.0));
        // (x-1)^2 (x^2+1) = x^4 - 2x^3 + 2x^2 - 2x + 1
        assert_eq!(p.coeffs_ascending(), &[1.0, -2.0, 2.0, -2.0, 1.0]);
        let q = p.div_monic(&Poly64::conjugate_quadratic(0.0, 1.0));
        assert_eq!(q.coeffs_ascending(), &[1.0, -2.0, 1.0]);
    }

    #[test]
    fn coefficient_column_layout() {
        // 4x^3 - 4x as a column for n=4: a_1 slot gets x^3 coeff
        let p = Poly64::from_ascending(vec![0.0, -4.0, 0.0, 4.0]);
        assert_eq!(p.as_coefficient_column(4), vec![4.0, 0.0, -4.0, 0.0]);
    }
}
