//! Splitting P = Q·R with Q carrying the complex roots and R the real ones,
//! certified by Res(Q, R) ≠ 0.

use num_traits::One;

use crate::polycore::{
    isolate_real_roots, refine_interval, resultant, squarefree_decomposition,
    MonicPolynomial, Rat, RatPoly,
};

use super::poly64::Poly64;

/// The result of the real/complex factor split.
///
/// The split is exact (rational Q and R with an exact resultant) whenever
/// every square-free factor of P has either all roots real or none — which
/// covers every polynomial assembled from rational root data. A square-free
/// factor mixing real and complex roots has an irrational split; those are
/// computed numerically from refined isolating intervals.
#[derive(Debug, Clone)]
pub enum RealComplexSplit {
    Exact {
        /// All roots complex.
        q: RatPoly,
        /// All roots real (with their multiplicities).
        r: RatPoly,
        resultant: Rat,
    },
    Numeric {
        q: Poly64,
        r: Poly64,
        resultant: f64,
    },
}

impl RealComplexSplit {
    pub fn resultant_is_nonzero(&self) -> bool {
        match self {
            RealComplexSplit::Exact { resultant, .. } => !num_traits::Zero::is_zero(resultant),
            RealComplexSplit::Numeric { resultant, .. } => resultant.abs() > 1e-9,
        }
    }
}

pub fn split_real_complex(p: &MonicPolynomial) -> RealComplexSplit {
    let parts = squarefree_decomposition(p);
    let mut exact_q = RatPoly::one();
    let mut exact_r = RatPoly::one();
    let mut mixed: Vec<(RatPoly, u32)> = Vec::new();
    for part in &parts {
        let real_count = isolate_real_roots(&part.factor).len();
        let deg = part.factor.degree().unwrap();
        if real_count == deg {
            exact_r = &exact_r * &part.factor.pow(part.multiplicity);
        } else if real_count == 0 {
            exact_q = &exact_q * &part.factor.pow(part.multiplicity);
        } else {
            mixed.push((part.factor.clone(), part.multiplicity));
        }
    }
    if mixed.is_empty() {
        let res = if exact_q.degree() == Some(0) || exact_r.degree() == Some(0) {
            Rat::one()
        } else {
            resultant(&exact_q, &exact_r).expect("nonzero factors")
        };
        return RealComplexSplit::Exact {
            q: exact_q,
            r: exact_r,
            resultant: res,
        };
    }

    // Irrational split: peel the real roots of each mixed factor off
    // numerically from tightly refined isolating intervals.
    let mut qf = to_poly64(&exact_q);
    let mut rf = to_poly64(&exact_r);
    let width = Rat::new(1.into(), num_bigint::BigInt::from(1u128 << 80));
    for (factor, mult) in &mixed {
        let mut complex_part = to_poly64(factor);
        for interval in isolate_real_roots(factor) {
            let tight = refine_interval(factor, &interval, &width);
            let root = rat_to_f64(&tight.midpoint());
            let linear = Poly64::linear(root);
            rf = rf.mul(&linear.pow(*mult));
            complex_part = complex_part.div_monic(&linear);
        }
        qf = qf.mul(&complex_part.pow(*mult));
    }
    let res = sylvester_det_f64(&qf, &rf);
    RealComplexSplit::Numeric {
        q: qf,
        r: rf,
        resultant: res,
    }
}

fn to_poly64(p: &RatPoly) -> Poly64 {
    Poly64::from_ascending(p.coeffs_ascending().iter().map(rat_to_f64).collect())
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("representable")
}

fn sylvester_det_f64(p: &Poly64, q: &Poly64) -> f64 {
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    if dp == 0 {
        return p.coeff(0).powi(dq as i32);
    }
    if dq == 0 {
        return q.coeff(0).powi(dp as i32);
    }
    let size = dp + dq;
    let mut m = nalgebra::DMatrix::<f64>::zeros(size, size);
    for row in 0..dq {
        for k in 0..=dp {
            m[(row, row + k)] = p.coeff(dp - k);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            m[(dq + row, row + k)] = q.coeff(dq - k);
        }
    }
    m.determinant()
}
