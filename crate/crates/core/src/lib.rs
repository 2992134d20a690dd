//! Exact double Schubert polynomials of types A, B, C and D.
//!
//! Schubert polynomials are extracted from products in nilCoxeter algebras,
//! and checked against determinantal, Pfaffian and raising operator formulas.

pub mod error;
pub mod nilcox;
pub mod poly;
pub mod schubert;
pub mod symfunc;
pub mod weyl;

pub use error::{Error, Result};
