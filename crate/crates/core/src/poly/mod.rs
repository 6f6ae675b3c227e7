//! Exact sparse multivariate polynomials over the rationals.

mod coeff;
mod order;
mod polynomial;
mod ring;
mod text;
mod var;

pub use coeff::{Field, Fp, Rational, FP_MODULUS};
pub use order::{compare_monomials, SparseMonomial, TermOrder};
pub use polynomial::Polynomial;
pub use ring::{universe, Monomial, Ring, MAX_VARS};
pub use var::{Family, ProblemParams, VariableId};
