//! Real root isolation by Sturm-guided bisection.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Rat, RatPoly};
use super::sturm::{count_real_roots_in, sturm_chain};

/// An interval guaranteed to contain exactly one real root of its
/// polynomial. `lo == hi` means the root is the exact rational point;
/// otherwise the interval is open with nonzero values at both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl IsolatingInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    /// True when the two intervals cannot contain a common point
    /// (open ends, so shared endpoints still count as disjoint).
    pub fn is_disjoint_from(&self, other: &IsolatingInterval) -> bool {
        match (self.is_point(), other.is_point()) {
            (true, true) => self.lo != other.lo,
            (true, false) => self.lo <= other.lo || self.lo >= other.hi,
            (false, true) => other.lo <= self.lo || other.lo >= self.hi,
            (false, false) => self.hi <= other.lo || other.hi <= self.lo,
        }
    }
}

/// Isolates all real roots of a square-free polynomial. Intervals are
/// returned in increasing root order and are pairwise disjoint.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<IsolatingInterval> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(p);
    let bound = cauchy_bound(p);
    let lo = -bound.clone();
    let hi = bound;
    let total = count_real_roots_in(&chain, &lo, &hi);
    let mut out = Vec::with_capacity(total);
    subdivide(p, &chain, lo, hi, total, &mut out);
    out
}

/// 1 + max |a_i / lead|: every real root lies strictly inside (−B, B).
fn cauchy_bound(p: &RatPoly) -> Rat {
    let lead = p.leading().unwrap();
    let mut max = Rat::zero();
    let deg = p.degree().unwrap();
    for k in 0..deg {
        let m = (p.coeff(k) / lead).abs();
        if m > max {
            max = m;
        }
    }
    max + Rat::one()
}

fn subdivide(
    p: &RatPoly,
    chain: &[RatPoly],
    lo: Rat,
    hi: Rat,
    count: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        if let Some(root) = rational_root_in(p, &lo, &hi) {
            out.push(IsolatingInterval {
                lo: root.clone(),
                hi: root,
            });
        } else {
            out.push(IsolatingInterval { lo, hi });
        }
        return;
    }
    let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
    if p.eval(&mid).is_zero() {
        // Exact rational root at the midpoint; carve out a punctured
        // neighbourhood that contains no other root.
        let mut w = (&hi - &lo) / Rat::from_integer(BigInt::from(4));
        loop {
            let a = &mid - &w;
            let b = &mid + &w;
            if !p.eval(&a).is_zero()
                && !p.eval(&b).is_zero()
                && count_real_roots_in(chain, &a, &b) == 1
            {
                break;
            }
            w = w / Rat::from_integer(BigInt::from(2));
        }
        let a = &mid - &w;
        let b = &mid + &w;
        let left = count_real_roots_in(chain, &lo, &a);
        let right = count_real_roots_in(chain, &b, &hi);
        subdivide(p, chain, lo, a, left, out);
        out.push(IsolatingInterval {
            lo: mid.clone(),
            hi: mid,
        });
        subdivide(p, chain, b, hi, right, out);
    } else {
        let left = count_real_roots_in(chain, &lo, &mid);
        subdivide(p, chain, lo, mid.clone(), left, out);
        subdivide(p, chain, mid, hi, count - left, out);
    }
}

/// Walks the Stern–Brocot tree toward the single simple root in the open
/// interval (lo, hi). A rational root of modest height is reached exactly in
/// a number of steps proportional to its continued-fraction length; for
/// irrational roots the denominators explode and we give up quickly.
fn rational_root_in(p: &RatPoly, lo: &Rat, hi: &Rat) -> Option<Rat> {
    const MAX_STEPS: usize = 128;
    const MAX_DENOM_BITS: u64 = 64;
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let sign_lo = p.eval(&lo).is_positive();
    for _ in 0..MAX_STEPS {
        let s = simplest_rational_between(&lo, &hi);
        let v = p.eval(&s);
        if v.is_zero() {
            return Some(s);
        }
        if s.denom().bits() > MAX_DENOM_BITS {
            return None;
        }
        if v.is_positive() == sign_lo {
            lo = s;
        } else {
            hi = s;
        }
    }
    None
}

/// The rational with the smallest denominator strictly between lo and hi
/// (ties broken toward smaller magnitude), via continued fractions.
fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rat::zero();
    }
    if !hi.is_positive() {
        return -simplest_rational_between(&-hi.clone(), &-lo.clone());
    }
    // 0 <= lo < hi
    let fl = lo.floor();
    let next_int = &fl + Rat::one();
    if next_int < *hi {
        return next_int;
    }
    let frac = lo - &fl;
    if frac.is_zero() {
        // (fl, hi) with hi - fl <= 1: smallest q with fl + 1/q inside
        let q = (hi - &fl).recip().floor() + Rat::one();
        return fl + q.recip();
    }
    let inner = simplest_rational_between(&(hi - &fl).recip(), &frac.recip());
    fl + inner.recip()
}

/// Bisects an isolating interval until its width is at most `width`.
/// Collapses to an exact point if a bisection lands on the root.
pub fn refine_interval(
    p: &RatPoly,
    interval: &IsolatingInterval,
    width: &Rat,
) -> IsolatingInterval {
    if interval.is_point() {
        return interval.clone();
    }
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    let sign_lo = p.eval(&lo).is_positive();
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        let v = p.eval(&mid);
        if v.is_zero() {
            return IsolatingInterval {
                lo: mid.clone(),
                hi: mid,
            };
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolatingInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn sqrt2_intervals() {
        let p = RatPoly::from_integers(&[1, 0, -2]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let quarter = Rat::new(BigInt::from(1), BigInt::from(4));
        let neg = refine_interval(&p, &roots[0], &quarter);
        let pos = refine_interval(&p, &roots[1], &quarter);
        assert!(!neg.is_point() && !pos.is_point(), "sqrt(2) is irrational");
        assert!(neg.lo > rat(-2) && neg.hi < rat(-1));
        assert!(pos.lo > rat(1) && pos.hi < rat(2));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&RatPoly::from_integers(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn rational_roots_become_points() {
        // x(x-1)(x-2)
        let p = &(&RatPoly::from_integers(&[1, 0]) * &RatPoly::from_integers(&[1, -1]))
            * &RatPoly::from_integers(&[1, -2]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        for (r, expected) in roots.iter().zip([rat(0), rat(1), rat(2)]) {
            assert!(r.is_point());
            assert_eq!(r.lo, expected);
        }
        for w in roots.windows(2) {
            assert!(w[0].is_disjoint_from(&w[1]));
        }
        // non-dyadic rational roots are still found exactly
        let q = &RatPoly::from_integers(&[3, -1]) * &RatPoly::from_integers(&[7, 2]);
        let roots = isolate_real_roots(&q);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].lo, Rat::new(BigInt::from(-2), BigInt::from(7)));
        assert_eq!(roots[1].lo, Rat::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn sturm_count_matches_interval_count() {
        let p = RatPoly::from_integers(&[1, -1, -4, 2]); // three real roots
        let chain = sturm_chain(&p);
        let b = {
            // beyond the Cauchy bound on both sides
            rat(10)
        };
        let n_sturm = count_real_roots_in(&chain, &(-b.clone()), &b);
        assert_eq!(isolate_real_roots(&p).len(), n_sturm);
    }
}
