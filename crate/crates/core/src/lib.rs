//! Exact multiple ρ-values and multiple η-values.
//!
//! The ρ-family is always rational and is evaluated in closed form. The
//! η-family reduces to a rational combination of `1` and `ζ(k)`; the
//! reduction runs through an exact partial fraction decomposition of the
//! summand. Every sum formula relating the two families is available as a
//! self-checking [`identities::VerificationReport`].

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod eta;
pub mod harmonic;
pub mod identities;
pub mod numeric;
pub mod output;
pub mod quadrature;
pub mod rho;
pub mod tables;

pub use error::{Error, Result};
pub use eta::{EtaIndex, ZetaExpr};
pub use numeric::{ApproxReal, Rational};
pub use rho::RhoIndex;
