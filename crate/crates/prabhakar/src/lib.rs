//! Prabhakar (three-parameter Mittag-Leffler) function and the fractional
//! calculus built on it.
//!
//! - [`prabhakar`]: evaluation of E^γ_{α,β}(z) anywhere in the complex plane.
//! - [`asym_coeffs`]: coefficients of the exponential large-|z| expansion.
//! - [`series_engine`]: truncated power-series arithmetic behind them.
//! - [`operators`]: Prabhakar integral and derivatives on sampled functions.
//! - [`heat`]: eigenfunction and particular solutions of the fractional heat
//!   equation with Prabhakar time derivative.
//! - [`cli`]: commands behind the `prabhakar` binary.

// `!(x > 0.0)` rejects NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Coefficient recursions read best with the index in the formula.
#![allow(clippy::needless_range_loop)]

pub mod asym_coeffs;
pub mod cli;
pub mod dd;
pub mod error;
pub mod heat;
pub mod operators;
pub mod prabhakar;
pub mod series_engine;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use prabhakar::{EvalConfig, EvaluationResult, Method, PrabhakarParams, StokesRule};
