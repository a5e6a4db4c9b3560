//! Resultants via the Sylvester matrix, computed exactly.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::poly::{PolyError, Rat, RatPoly};

/// Exact resultant of two nonzero polynomials: the determinant of their
/// Sylvester matrix. Zero exactly when the two share a complex root.
pub fn resultant(p: &RatPoly, q: &RatPoly) -> Result<Rat, PolyError> {
    let dp = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let dq = q.degree().ok_or(PolyError::ZeroPolynomial)?;
    if dp == 0 {
        return Ok(p.leading().unwrap().pow(dq as i32));
    }
    if dq == 0 {
        return Ok(q.leading().unwrap().pow(dp as i32));
    }

    // Scale both inputs to integer vectors; the determinant picks up
    // scale_p^dq * scale_q^dp which we divide back out at the end.
    let (pi, sp) = to_integer_scaled(p);
    let (qi, sq) = to_integer_scaled(q);
    let size = dp + dq;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for row in 0..dq {
        for (k, c) in pi.iter().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..dp {
        for (k, c) in qi.iter().enumerate() {
            m[dq + row][row + k] = c.clone();
        }
    }
    let det = bareiss_determinant(m);
    let scale = sp.pow(dq as u32) * sq.pow(dp as u32);
    Ok(Rat::from_integer(det) / scale)
}

/// Returns descending integer coefficients and the rational scale s such
/// that the integer polynomial equals s · p.
fn to_integer_scaled(p: &RatPoly) -> (Vec<BigInt>, Rat) {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs_ascending() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs_ascending()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    ints.reverse();
    (ints, Rat::from_integer(denom_lcm))
}

/// Fraction-free Gaussian elimination (Bareiss). Exact over the integers.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::gcd::gcd;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    #[test]
    fn linear_pair() {
        // Sylvester matrix of (x-1, x+1) is [[1,-1],[1,1]], determinant 2.
        let r = resultant(
            &RatPoly::from_integers(&[1, -1]),
            &RatPoly::from_integers(&[1, 1]),
        )
        .unwrap();
        assert_eq!(r, rat(2));
    }

    #[test]
    fn shared_root_gives_zero() {
        let r = resultant(
            &RatPoly::from_integers(&[1, 0, -1]),
            &RatPoly::from_integers(&[1, -1]),
        )
        .unwrap();
        assert_eq!(r, rat(0));
    }

    #[test]
    fn discriminant_locus_contains_double_double() {
        // P = x^4 - 2x^2 + 1 has multiple roots, so Res(P, P') = 0.
        let p = RatPoly::from_integers(&[1, 0, -2, 0, 1]);
        assert_eq!(resultant(&p, &p.derivative()).unwrap(), rat(0));
    }

    #[test]
    fn zero_iff_noncoprime() {
        let cases = [
            (RatPoly::from_integers(&[1, 0, 1]), RatPoly::from_integers(&[1, -1])),
            (RatPoly::from_integers(&[2, 3]), RatPoly::from_integers(&[1, 1, 1])),
            (
                &RatPoly::from_integers(&[1, -2]) * &RatPoly::from_integers(&[1, 5]),
                RatPoly::from_integers(&[1, 5]),
            ),
        ];
        for (p, q) in cases {
            let r = resultant(&p, &q).unwrap();
            let g = gcd(&p, &q).unwrap();
            assert_eq!(r.is_zero(), g.degree() > Some(0), "p={} q={}", p, q);
        }
    }

    #[test]
    fn rational_scaling_is_exact() {
        // Res(ax+b, cx+d) = ad - bc for linears (up to convention: here
        // det [[a,b],[c,d]]).
        let p = RatPoly::from_ascending(vec![Rat::new(BigInt::from(1), BigInt::from(3)), rat(2)]);
        let q = RatPoly::from_ascending(vec![Rat::new(BigInt::from(1), BigInt::from(5)), rat(7)]);
        // p = 2x + 1/3, q = 7x + 1/5: det [[2, 1/3], [7, 1/5]] = 2/5 - 7/3
        let expected = Rat::new(BigInt::from(2), BigInt::from(5))
            - Rat::new(BigInt::from(7), BigInt::from(3));
        assert_eq!(resultant(&p, &q).unwrap(), expected);
    }
}
