//! Exact univariate polynomial arithmetic over the rationals.
//!
//! Everything in this module computes with arbitrary-precision rationals and
//! never rounds: multiplicities of roots are not a stable floating-point
//! notion, so the multiplicity vector of a polynomial is only well defined
//! when the arithmetic is exact.

mod gcd;
mod isolate;
mod mv;
mod parse;
mod poly;
mod resultant;
mod roots;
mod squarefree;
mod sturm;

pub use gcd::gcd;
pub use isolate::{isolate_real_roots, refine_interval, IsolatingInterval};
pub use mv::{multiplicity_vector, MultiplicityVector, MvError};
pub use parse::{format_monic, parse_monic, ParseError};
pub use poly::{MonicPolynomial, PolyError, Rat, RatPoly};
pub use resultant::resultant;
pub use roots::{expand_from_roots, RationalRootConfig};
pub use squarefree::{squarefree_decomposition, SquareFreePart};
pub use sturm::{count_real_roots_in, sign_variations_at, sturm_chain};
