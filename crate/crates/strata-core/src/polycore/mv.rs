//! Multiplicity vectors and their exact computation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::isolate::{isolate_real_roots, refine_interval, IsolatingInterval};
use super::poly::MonicPolynomial;
use super::squarefree::squarefree_decomposition;

/// The ordered list of multiplicities of the real roots of a monic real
/// polynomial, listed by increasing root position. Complex roots contribute
/// nothing; a polynomial without real roots has the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityVector {
    parts: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MvError {
    /// A component was zero or negative.
    NonPositivePart { index: usize },
    /// The components sum to more than the ambient degree.
    LengthOverflow { length: u32, degree: u32 },
    /// degree − length must be even (complex roots come in pairs).
    ParityMismatch { length: u32, degree: u32 },
    /// Two strata were combined across different ambient degrees.
    DegreeMismatch { left: u32, right: u32 },
}

impl fmt::Display for MvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MvError::NonPositivePart { index } => {
                write!(f, "component {} is not a positive integer", index + 1)
            }
            MvError::LengthOverflow { length, degree } => {
                write!(f, "length {} exceeds ambient degree {}", length, degree)
            }
            MvError::ParityMismatch { length, degree } => write!(
                f,
                "degree {} minus length {} is odd; complex roots come in conjugate pairs",
                degree, length
            ),
            MvError::DegreeMismatch { left, right } => {
                write!(f, "ambient degrees differ: {} vs {}", left, right)
            }
        }
    }
}

impl std::error::Error for MvError {}

impl MultiplicityVector {
    /// Builds from raw parts, rejecting non-positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self, MvError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(MvError::NonPositivePart { index });
        }
        Ok(MultiplicityVector { parts })
    }

    pub fn empty() -> Self {
        MultiplicityVector { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// l = Σ rⱼ: number of real roots counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// q: number of distinct real roots.
    pub fn group_count(&self) -> usize {
        self.parts.len()
    }

    /// r = l − q. Equals the codimension of the stratum this vector defines.
    pub fn surplus(&self) -> u32 {
        self.length() - self.group_count() as u32
    }

    /// Checks compatibility with an ambient degree n: l ≤ n and n − l even.
    pub fn validate_for_degree(&self, degree: u32) -> Result<(), MvError> {
        let length = self.length();
        if length > degree {
            return Err(MvError::LengthOverflow { length, degree });
        }
        if (degree - length) % 2 != 0 {
            return Err(MvError::ParityMismatch { length, degree });
        }
        Ok(())
    }

    /// (n − l)/2: number of complex conjugate pairs, counted with
    /// multiplicity. Assumes `validate_for_degree(degree)` holds.
    pub fn complex_pairs(&self, degree: u32) -> u32 {
        (degree - self.length()) / 2
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Computes the multiplicity vector of a monic polynomial exactly.
///
/// Real roots are located per square-free factor; intervals from different
/// factors are refined until globally disjoint (the factors are coprime, so
/// this terminates), which yields the global ordering of all real roots.
pub fn multiplicity_vector(p: &MonicPolynomial) -> MultiplicityVector {
    let parts = squarefree_decomposition(p);
    let mut located: Vec<(IsolatingInterval, usize, u32)> = Vec::new();
    for (fi, part) in parts.iter().enumerate() {
        for iv in isolate_real_roots(&part.factor) {
            located.push((iv, fi, part.multiplicity));
        }
    }
    // Refine until intervals from different factors are pairwise disjoint.
    loop {
        let mut clash = None;
        'outer: for i in 0..located.len() {
            for j in (i + 1)..located.len() {
                if located[i].1 != located[j].1
                    && !located[i].0.is_disjoint_from(&located[j].0)
                {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        for idx in [i, j] {
            let (iv, fi, _) = &located[idx];
            let target = iv.width() / BigRational::from_integer(BigInt::from(4));
            let refined = refine_interval(&parts[*fi].factor, iv, &target);
            located[idx].0 = refined;
        }
    }
    located.sort_by(|a, b| (&a.0.lo, &a.0.hi).cmp(&(&b.0.lo, &b.0.hi)));
    MultiplicityVector {
        parts: located.into_iter().map(|(_, _, m)| m).collect(),
    }
}
