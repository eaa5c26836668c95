//! Exact arithmetic for the noncommutative deformations `H(P, gamma)` and
//! `D(Q, gamma)` of type-D Kleinian singularities: normal forms, centres,
//! filtrations, the semiclassical Poisson bracket, and the isomorphism
//! classification, all over the Gaussian rationals.

pub mod error;
mod fmt;
pub mod iso;
pub mod ncalg;
pub mod par;
pub mod parse;
pub mod poisson;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use ncalg::{Algebra, AlgebraSpec, Element, Kind, Monomial};
pub use par::Exec;
pub use poly::{OpPoly, Poly};
pub use scalar::Scalar;
