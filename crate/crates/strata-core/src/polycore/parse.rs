//! Text format for monic polynomials: a comma-separated, degree-descending
//! list of exact rational coefficients including the leading 1, e.g.
//! `1,0,-2,0,1` for x⁴ − 2x² + 1. Rationals are written `p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{MonicPolynomial, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based index of the offending coefficient token.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

fn parse_rat(token: &str, position: usize) -> Result<Rat, ParseError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(err(position, "empty coefficient"));
    }
    match token.split_once('/') {
        None => token
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|e| err(position, format!("invalid integer `{}`: {}", token, e))),
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<BigInt>()
                .map_err(|e| err(position, format!("invalid numerator `{}`: {}", num, e)))?;
            let d = den
                .trim()
                .parse::<BigInt>()
                .map_err(|e| err(position, format!("invalid denominator `{}`: {}", den, e)))?;
            if d.is_zero() {
                return Err(err(position, "zero denominator"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Parses the coefficient text format into a monic polynomial.
pub fn parse_monic(text: &str) -> Result<MonicPolynomial, ParseError> {
    let tokens: Vec<&str> = text.split(',').collect();
    if tokens.len() < 2 {
        return Err(err(
            1,
            "need at least two coefficients (leading 1 plus a_1..a_n)",
        ));
    }
    let lead = parse_rat(tokens[0], 1)?;
    if !lead.is_one() {
        return Err(err(1, format!("leading coefficient must be 1, got {}", lead)));
    }
    let mut coeffs = Vec::with_capacity(tokens.len() - 1);
    for (i, tok) in tokens.iter().enumerate().skip(1) {
        coeffs.push(parse_rat(tok, i + 1)?);
    }
    MonicPolynomial::new(coeffs).map_err(|e| err(1, e.to_string()))
}

/// Formats a monic polynomial in the same coefficient text format.
pub fn format_monic(p: &MonicPolynomial) -> String {
    let mut out = String::from("1");
    for c in p.trailing_coeffs() {
        out.push(',');
        if c.denom().is_one() {
            out.push_str(&c.numer().to_string());
        } else {
            out.push_str(&format!("{}/{}", c.numer(), c.denom()));
        }
    }
    out
}
