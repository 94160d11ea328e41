//! Exact invariant theory of SL(2,13) acting on six variables, and truncated
//! q-series certification of the modular identities it produces.
//!
//! The crate is layered: [`cyclo`] (field arithmetic), [`mpoly`] (polynomials
//! and matrices), [`invariants`] (the named forms and representations),
//! [`qseries`] (q-expansions), and [`suites`] (the checks themselves).

pub mod cli;
pub mod cyclo;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod mpoly;
pub mod qseries;
pub mod suites;

pub use cyclo::{field_constants, CyclotomicNumber, FieldConstants, Rational};
pub use error::{CliError, MathError};
pub use mpoly::{apply_linear, express_in_basis, LinearMap, Monomial, MultiPoly};
pub use qseries::QSeries;
