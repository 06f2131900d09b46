//! Exact polynomial substrate: rationals, monomials, sparse polynomials,
//! monomial orders and weight gradings.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod rational;
mod ring;
mod weight;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_ideal_text, parse_polynomial};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational, rat, rat_frac, Rational};
pub use ring::Ring;
pub use weight::WeightVector;
