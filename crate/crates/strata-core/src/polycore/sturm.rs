//! Sturm sequences and sign-variation root counting.

use num_traits::{One, Signed, Zero};

use super::poly::{Rat, RatPoly};

/// Standard Sturm chain of a square-free polynomial: s₀ = p, s₁ = p′,
/// s_{k+1} = −rem(s_{k−1}, s_k). Each member is normalized to a primitive
/// integer polynomial (a positive rescaling, which preserves all signs).
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = Vec::new();
    let mut prev = normalize(p.clone());
    let mut cur = normalize(p.derivative());
    chain.push(prev.clone());
    while !cur.is_zero() {
        let (_, rem) = prev.div_rem(&cur).expect("nonzero divisor");
        chain.push(cur.clone());
        prev = cur;
        cur = normalize(-&rem);
    }
    chain
}

fn normalize(p: RatPoly) -> RatPoly {
    if p.is_zero() {
        return p;
    }
    let ints = p.primitive_integer();
    let sign = if p.leading().unwrap().is_negative() {
        -Rat::one()
    } else {
        Rat::one()
    };
    RatPoly::from_ascending(
        ints.into_iter()
            .map(|c| Rat::from_integer(c) * &sign)
            .collect(),
    )
}

/// Number of sign variations in the chain values at `x` (zeros skipped).
pub fn sign_variations_at(chain: &[RatPoly], x: &Rat) -> usize {
    let mut last: Option<bool> = None;
    let mut variations = 0;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

/// Number of distinct real roots of the chain's polynomial in the open
/// interval (lo, hi). Requires p(lo) ≠ 0 and p(hi) ≠ 0.
pub fn count_real_roots_in(chain: &[RatPoly], lo: &Rat, hi: &Rat) -> usize {
    debug_assert!(lo < hi);
    debug_assert!(!chain[0].eval(lo).is_zero() && !chain[0].eval(hi).is_zero());
    sign_variations_at(chain, lo) - sign_variations_at(chain, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn rat2(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_roots_of_x2_minus_1() {
        let chain = sturm_chain(&RatPoly::from_integers(&[1, 0, -1]));
        assert_eq!(count_real_roots_in(&chain, &rat(-2), &rat(2)), 2);
    }

    #[test]
    fn no_real_roots_of_x2_plus_1() {
        let chain = sturm_chain(&RatPoly::from_integers(&[1, 0, 1]));
        assert_eq!(count_real_roots_in(&chain, &rat(-10), &rat(10)), 0);
    }

    #[test]
    fn one_root_of_cubic_in_subinterval() {
        // x^3 - x has roots -1, 0, 1; exactly one lies in (1/2, 2).
        let chain = sturm_chain(&RatPoly::from_integers(&[1, 0, -1, 0]));
        assert_eq!(count_real_roots_in(&chain, &rat2(1, 2), &rat(2)), 1);
        assert_eq!(count_real_roots_in(&chain, &rat(-2), &rat(2)), 3);
    }
}
