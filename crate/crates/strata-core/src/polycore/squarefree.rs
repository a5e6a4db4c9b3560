//! Square-free decomposition by Yun's algorithm (characteristic zero).

use super::gcd::gcd;
use super::poly::{MonicPolynomial, RatPoly};

/// One factor of a square-free decomposition: `factor` is monic and
/// square-free, and appears with the given multiplicity in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreePart {
    pub factor: RatPoly,
    pub multiplicity: u32,
}

/// Decomposes a monic polynomial as Π factorᵢ^multᵢ with the factors monic,
/// square-free, and pairwise coprime. Factors are returned with strictly
/// increasing multiplicity; trivial (constant) factors are omitted.
pub fn squarefree_decomposition(p: &MonicPolynomial) -> Vec<SquareFreePart> {
    let f = p.to_ratpoly();
    let df = f.derivative();
    let g = gcd(&f, &df).expect("nonzero input");
    if g.degree() == Some(0) {
        return vec![SquareFreePart {
            factor: f,
            multiplicity: 1,
        }];
    }
    let mut parts = Vec::new();
    let mut c = f.exact_div(&g);
    let mut d = &df.exact_div(&g) - &c.derivative();
    let mut mult = 1u32;
    while c.degree() > Some(0) {
        let a = gcd(&c, &d).expect("nonzero");
        if a.degree() > Some(0) {
            parts.push(SquareFreePart {
                factor: a.clone(),
                multiplicity: mult,
            });
        }
        c = c.exact_div(&a);
        d = &d.exact_div(&a) - &c.derivative();
        mult += 1;
    }
    parts
}
