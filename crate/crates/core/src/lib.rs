//! Exact quantum homology of toric Fano surfaces and semi-simplicity
//! certificates for the resulting finite-dimensional algebras.

pub mod arith;
pub mod batyrev;
pub mod blowup;
pub mod cli;
pub mod error;
pub mod products;
pub mod ssalg;
pub mod toric;

pub use error::{Error, Result};
