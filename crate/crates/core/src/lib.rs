//! Exact computation of initial ideals of homogeneous polynomial ideals and
//! of the lower and upper bounds on them obtained from regular subdivisions
//! of the associated point configuration.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: rationals, monomials, sparse polynomials, monomial orders,
//!   weight degrees and initial forms, plus the polynomial text grammar.
//! * [`groebner`]: Buchberger's algorithm and the ideal operations built on it.
//! * [`linalg`] and [`lp`]: exact linear algebra and simplex feasibility.
//! * [`config`]: point configurations, their lineality spaces and the
//!   configuration `A(I)` attached to an ideal.
//! * [`subdivision`]: regular subdivisions, face posets, secondary cones,
//!   adjacency graphs.
//! * [`bounds`]: the ideals `I_w` and `I^w` sandwiching `in_w I`, exactness
//!   loci and the degree-wise limit check.
//! * [`fixtures`] and [`census`]: generators for the standard example
//!   families and the weight-sampling driver.

pub mod bounds;
pub mod census;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod subdivision;

pub use error::{Error, Result};
pub use groebner::{Ideal, ReducedGB};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring, WeightVector};
