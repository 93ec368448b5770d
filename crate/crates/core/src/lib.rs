//! Exact computation with quantum cluster algebras of geometric type.
//!
//! - [`qscalar`]: Laurent polynomials in `q^(1/2)` with integer coefficients.
//! - [`seed`]: exchange and quasi-commutation matrices, quivers, mutation.
//! - [`torus`]: quantum torus elements, toric frames, exchange relations.
//! - [`ncalg`]: presented noncommutative algebras and degree-bounded completion.
//! - [`exgraph`]: exchange graph enumeration and root labels.
//! - [`catalog`]: builtin seeds, algebras and their verification.
//! - [`cli`], [`seedfile`]: the command line and its seed file format.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exgraph;
pub mod ncalg;
pub mod qscalar;
pub mod seed;
pub mod seedfile;
pub mod torus;

pub use error::{AlgebraError, Error, GraphError, ParseError, SeedError, TorusError};
pub use qscalar::QScalar;
pub use seed::{ExchangeMatrix, QuantumSeed, QuasiCommutationMatrix};
pub use torus::TorusElement;
