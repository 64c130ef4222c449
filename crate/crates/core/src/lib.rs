//! Hilbert–Samuel coefficients, Sally-module lengths, reduction numbers and
//! Ratliff–Rush closures of m-primary ideals.

pub mod analysis;
pub mod classify;
pub mod engine;
pub mod error;
pub mod family;
pub mod hilbert;
pub mod ideal;
pub mod local;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod report;
pub mod sally;
pub mod selftest;
pub mod staircase;
pub mod tower;

pub use engine::{IdealEngine, LocalEngine, MonomialEngine};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use poly::Polynomial;
