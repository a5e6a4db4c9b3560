//! Dense polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the exact layer.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// gcd of two zero polynomials is undefined.
    BothZero,
    /// The resultant requires both polynomials to be nonzero.
    ZeroPolynomial,
    /// A monic polynomial needs leading coefficient exactly 1.
    NotMonic,
    /// A monic polynomial needs degree at least 1.
    DegreeZero,
    /// Division by the zero polynomial.
    DivisionByZero,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::BothZero => write!(f, "gcd of two zero polynomials is undefined"),
            PolyError::ZeroPolynomial => write!(f, "operation requires nonzero polynomials"),
            PolyError::NotMonic => write!(f, "leading coefficient must be exactly 1"),
            PolyError::DegreeZero => write!(f, "degree must be at least 1"),
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
        }
    }
}

impl std::error::Error for PolyError {}

/// A general dense polynomial over the rationals.
///
/// Coefficients are stored in ascending order of the exponent and kept
/// normalized: the zero polynomial is the empty coefficient vector, any other
/// polynomial has a nonzero last entry.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    /// Monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        RatPoly { coeffs }
    }

    /// x − r.
    pub fn linear_from_root(r: &Rat) -> Self {
        RatPoly {
            coeffs: vec![-r.clone(), Rat::one()],
        }
    }

    pub fn from_ascending(coeffs: Vec<Rat>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    pub fn from_descending(mut coeffs: Vec<Rat>) -> Self {
        coeffs.reverse();
        RatPoly { coeffs }.normalized()
    }

    pub fn from_integers(descending: &[i64]) -> Self {
        RatPoly::from_descending(
            descending
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs_ascending(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeffs_descending(&self) -> Vec<Rat> {
        let mut v = self.coeffs.clone();
        v.reverse();
        v
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
            .collect();
        RatPoly { coeffs }.normalized()
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Divides by the leading coefficient. Panics on the zero polynomial.
    pub fn monic(&self) -> RatPoly {
        let lead = self.leading().expect("monic of zero polynomial");
        self.scale(&lead.recip())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, mut e: u32) -> RatPoly {
        let mut base = self.clone();
        let mut acc = RatPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let d = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - d;
        let mut quot = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + d] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[k + i] = &rem[k + i] - t;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((
            RatPoly { coeffs: quot }.normalized(),
            RatPoly { coeffs: rem }.normalized(),
        ))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor).expect("exact_div by zero");
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Clears denominators and the integer content: returns the primitive
    /// integer coefficient vector (ascending) with positive leading entry.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = num_integer::gcd(content, v.clone());
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for v in &mut ints {
            *v = &*v / &content;
        }
        ints
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "x")?;
            } else if k > 1 {
                write!(f, "x^{}", k)?;
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + t;
            }
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// A monic polynomial x^n + a_1 x^{n-1} + … + a_n of degree n ≥ 1.
///
/// Only the trailing coefficients (a_1, …, a_n) are stored, in that order;
/// the leading 1 is implicit.
#[derive(Clone, PartialEq, Eq)]
pub struct MonicPolynomial {
    coeffs: Vec<Rat>,
}

impl MonicPolynomial {
    /// Builds from (a_1, …, a_n), degree-descending after the implicit 1.
    pub fn new(coeffs: Vec<Rat>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::DegreeZero);
        }
        Ok(MonicPolynomial { coeffs })
    }

    pub fn from_ratpoly(p: &RatPoly) -> Result<Self, PolyError> {
        if !p.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let n = p.degree().unwrap();
        if n == 0 {
            return Err(PolyError::DegreeZero);
        }
        let mut coeffs = p.coeffs_descending();
        coeffs.remove(0);
        Ok(MonicPolynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// a_j for 1 ≤ j ≤ n.
    pub fn coeff(&self, j: usize) -> &Rat {
        &self.coeffs[j - 1]
    }

    /// (a_1, …, a_n).
    pub fn trailing_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        let mut desc = Vec::with_capacity(self.coeffs.len() + 1);
        desc.push(Rat::one());
        desc.extend(self.coeffs.iter().cloned());
        RatPoly::from_descending(desc)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.to_ratpoly().eval(x)
    }
}

impl fmt::Debug for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratpoly())
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratpoly())
    }
}
