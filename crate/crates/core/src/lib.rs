//! Exact symbolic kernel for spherical DAHA operators in genus 0, 1, 2,
//! Macdonald and Whittaker polynomials, and the quantum cluster variety
//! machinery (quivers, quantum tori, dilogarithm mutations, mapping class
//! group actions) realizing them.
//!
//! Everything is computed over Gaussian rationals; there is no floating
//! point anywhere. The quantum parameter is carried as `v` with `v^4 = q`,
//! so all fractional q-powers appearing in cluster charts live on a single
//! integer grid.

pub mod context;
pub mod error;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

pub mod qseries;

pub mod diffop;

pub mod genus1;
pub mod genus2;

pub mod cluster;
pub mod weyl;

pub mod verify;

pub use context::VarContext;
pub use error::{Error, Result};
pub use poly::{Coeff, MultiLaurent, Poly};
pub use ratfunc::{vt_ctx, Qt, RatFunc};
pub use scalar::Scalar;

/// Laurent polynomial in the x-variables with rational (v, t) coefficients.
pub type XPoly = Poly<Qt>;

/// Rational function in the x-variables over rational (v, t) coefficients.
pub type XRat = RatFunc<Qt>;
