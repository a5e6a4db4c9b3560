//! Stratification of the coefficient space of monic real polynomials by the
//! multiplicity vector of their real roots.
//!
//! The crate is organized in four layers:
//!
//! * [`polycore`] — exact univariate polynomial arithmetic over the rationals:
//!   gcd, square-free decomposition, Sturm sequences, real root isolation,
//!   resultants, and exact multiplicity-vector computation.
//! * [`stratlat`] — the combinatorics of the stratification: enumeration of
//!   multiplicity vectors for a fixed degree, codimension, adjacency
//!   operations, closure, and the Hasse diagram of the stratum poset.
//! * [`geomkit`] — the geometry of individual strata: root-chart sampling,
//!   Vieta / power-sum coordinate changes, the multiplicity-weighted
//!   Vandermonde Jacobian and its cofactor partials, tangent frames,
//!   transversality margins, and boundary-limit probes.
//! * [`lemmalab`] — a numerical verification harness for the slope-ordering
//!   properties of adjacent-stratum curves in a two-coordinate section.

pub mod geomkit;
pub mod lemmalab;
pub mod polycore;
pub mod stratlat;
