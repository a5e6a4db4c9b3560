//! Exact multivariate polynomials over the rationals, sized for the
//! cofactor-cancellation identity of the weighted Vandermonde Jacobian.
//!
//! When two parameter roots are set equal, x_μ = x_ν, their columns become
//! proportional and the weighted cofactor combination m_μ·A_{u,μ} + m_ν·A_{u,ν}
//! vanishes identically — the removable singularity behind the boundary
//! limits of the graph partials. This module verifies that as a polynomial
//! identity, not numerically.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::polycore::Rat;

/// Sparse multivariate polynomial: exponent vector → coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// c · x_i^e
    pub fn monomial(nvars: usize, i: usize, e: u16, c: Rat) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            let mut exp = vec![0; nvars];
            exp[i] = e;
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exp: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.insert(exp.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    /// Substitutes x_from := x_to (renames the variable).
    pub fn substitute_var(&self, from: usize, to: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            e[to] += e[from];
            e[from] = 0;
            out.insert(e, c.clone());
        }
        out
    }
}

/// Determinant by Laplace expansion along the first row; fine for the small
/// matrices this module handles.
pub fn determinant(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nvars = m[0][0].nvars;
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = MPoly::zero(nvars);
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let term = m[0][col].mul(&determinant(&minor));
        det = if col % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// Signed cofactor of entry (u, i), 0-based.
pub fn cofactor(m: &[Vec<MPoly>], u: usize, i: usize) -> MPoly {
    let n = m.len();
    if n == 1 {
        return MPoly::constant(m[0][0].nvars, Rat::one());
    }
    let minor: Vec<Vec<MPoly>> = (0..n)
        .filter(|&r| r != u)
        .map(|r| {
            (0..n)
                .filter(|&c| c != i)
                .map(|c| m[r][c].clone())
                .collect()
        })
        .collect();
    let det = determinant(&minor);
    if (u + i) % 2 == 0 {
        det
    } else {
        det.neg()
    }
}

/// The weighted Vandermonde Jacobian as a symbolic matrix: entry (j, i) is
/// (j+1) · w_i · x_i^j for formal root variables x_0, …, x_{p−1}.
pub fn weighted_jacobian_matrix(weights: &[u32]) -> Vec<Vec<MPoly>> {
    let p = weights.len();
    (0..p)
        .map(|j| {
            (0..p)
                .map(|i| {
                    MPoly::monomial(
                        p,
                        i,
                        j as u16,
                        Rat::from_integer(((j as i64 + 1) * i64::from(weights[i])).into()),
                    )
                })
                .collect()
        })
        .collect()
}

/// Report of the cancellation check for one coincidence x_ν := x_μ.
#[derive(Debug)]
pub struct CancellationCheck {
    /// m_μ·A_{u,μ} + m_ν·A_{u,ν} for each row u; all must be zero.
    pub residuals: Vec<MPoly>,
    /// A_{u,i} for i ∉ {μ, ν}: proportional columns force these to zero too.
    pub alien_cofactors: Vec<MPoly>,
}

impl CancellationCheck {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(MPoly::is_zero)
            && self.alien_cofactors.iter().all(MPoly::is_zero)
    }
}

/// Substitutes x_ν := x_μ in the weighted Jacobian and checks the exact
/// cancellation of the weighted cofactors, for every row u.
pub fn cofactor_cancellation(weights: &[u32], mu: usize, nu: usize) -> CancellationCheck {
    assert_ne!(mu, nu);
    let p = weights.len();
    let m: Vec<Vec<MPoly>> = weighted_jacobian_matrix(weights)
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.substitute_var(nu, mu)).collect())
        .collect();
    let w_mu = Rat::from_integer(i64::from(weights[mu]).into());
    let w_nu = Rat::from_integer(i64::from(weights[nu]).into());
    let mut residuals = Vec::with_capacity(p);
    let mut alien = Vec::new();
    for u in 0..p {
        let a_mu = cofactor(&m, u, mu);
        let a_nu = cofactor(&m, u, nu);
        residuals.push(a_mu.scale(&w_mu).add(&a_nu.scale(&w_nu)));
        for i in 0..p {
            if i != mu && i != nu {
                alien.push(cofactor(&m, u, i));
            }
        }
    }
    CancellationCheck {
        residuals,
        alien_cofactors: alien,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let x = MPoly::monomial(2, 0, 1, Rat::one());
        let y = MPoly::monomial(2, 1, 1, Rat::one());
        let p = x.add(&y).mul(&x.sub(&y)); // x² − y²
        let q = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
        // substitute y := x annihilates x² − y²
        assert!(p.substitute_var(1, 0).is_zero());
    }

    #[test]
    fn symbolic_determinant_matches_vandermonde_product() {
        // weights all 1: det = 1·2·3·Π_{i<j}(x_j − x_i) for p = 3
        let m = weighted_jacobian_matrix(&[1, 1, 1]);
        let det = determinant(&m);
        let p = 3;
        let var = |i| MPoly::monomial(p, i, 1, Rat::one());
        let mut expected = MPoly::constant(p, Rat::from_integer(6.into()));
        for i in 0..p {
            for j in (i + 1)..p {
                expected = expected.mul(&var(j).sub(&var(i)));
            }
        }
        assert!(det.sub(&expected).is_zero());
    }

    #[test]
    fn cancellation_for_equal_complex_weights() {
        // two coincident complex roots among four parameters (weights 1)
        let check = cofactor_cancellation(&[1, 1, 1, 1], 1, 2);
        assert!(check.holds());
    }

    #[test]
    fn cancellation_for_real_multiplicities() {
        // real-real coincidence with multiplicities (2, 1) and (3, 1)
        assert!(cofactor_cancellation(&[2, 1], 0, 1).holds());
        assert!(cofactor_cancellation(&[3, 1], 0, 1).holds());
        assert!(cofactor_cancellation(&[2, 2], 0, 1).holds());
    }

    #[test]
    fn weighted_combination_is_required() {
        // with unequal weights the unweighted sum A_{u,μ} + A_{u,ν} is NOT
        // zero: the multiplicity weighting is what cancels
        let m: Vec<Vec<MPoly>> = weighted_jacobian_matrix(&[2, 1])
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.substitute_var(1, 0)).collect())
            .collect();
        let unweighted = cofactor(&m, 0, 0).add(&cofactor(&m, 0, 1));
        assert!(!unweighted.is_zero());
    }
}
