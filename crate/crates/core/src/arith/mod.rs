//! Exact arithmetic: rationals, parameter systems, Laurent polynomials and
//! rational functions.

mod field;
mod mpoly;
mod params;
mod parse;
pub mod prs;
mod rational;
mod unipoly;

pub use field::FieldElem;
pub use mpoly::MPoly;
pub use params::{Affine, MonomialRelation, Param, ParamSystem, Ring};
pub(crate) use params::is_identifier;
pub use parse::{identifiers, parse_field_elem};
pub use rational::Rational;
pub use unipoly::UniPoly;
