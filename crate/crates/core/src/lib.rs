//! Zeta functions of quadratic function fields over finite fields.
//!
//! The crate is layered bottom-up: [`ffield`] and [`polyring`] provide exact
//! arithmetic, [`zetafn`] builds L-polynomials and special values, [`bounds`]
//! holds closed-form thresholds and the region classifier, [`northcott`] and
//! [`moments`] run exhaustive enumerations, and [`cli`] wires everything to the
//! `ffzeta` binary.

pub mod bounds;
pub mod cli;
pub mod ffield;
pub mod moments;
pub mod northcott;
pub mod polyring;
mod summation;
pub mod zetafn;

/// Default cap on the number of polynomials an operation may enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
