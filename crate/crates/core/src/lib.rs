//! Two-spinor geometry, Frölicher–Nijenhuis calculus and the electroweak
//! sector, over an exact field `ℚ(i, √2)` or `Complex64`.
//!
//! Generic code takes `F: numeric::Scalar`; pick [`numeric::Exact`] for
//! identities that should hold with zero residual.

// Index loops mirror the tensor notation and read better than iterator chains here.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod numeric;
pub mod poly;
pub mod scales;
pub mod cxmulti;
pub mod twospinor;
pub mod fnforms;
pub mod gaugealg;
pub mod tetrad;
pub mod ewsector;

pub use error::{Error, Result};
