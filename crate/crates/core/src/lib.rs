//! Diagonal ideals of determinantal rings.
//!
//! Builds the ideal `L` of the symmetric algebra of the diagonal ideal, the
//! explicit polynomial families of its Groebner basis, and the machinery to
//! check them: a Buchberger engine over exact rationals, elimination of the
//! Rees parameter, monomial colon ideals and verification reports.

pub mod detmat;
pub mod error;
pub mod generators;
pub mod groebner;
pub mod poly;
pub mod rees;

pub use error::{Error, Result};
