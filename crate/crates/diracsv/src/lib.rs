//! Numeric verification library for spinor <-> scalar-vector changes of
//! variables in the free Dirac equation, in 1+1 and 3+1 dimensions.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: small complex matrices, gamma representations, projectors;
//! - [`lorentz`]: vector and spinor transformations and their pairing;
//! - [`fields`]: periodic grids, trigonometric test fields, derivatives;
//! - [`dirac2d`]: the 1+1-dimensional parametrization and Lagrangian forms;
//! - [`dirac4d`]: the 3+1-dimensional parametrization and Lagrangian split;
//! - [`particle`]: a covariant charged-particle equation and its reduction;
//! - [`report`] / [`suites`]: check bookkeeping and the runnable suites.
//!
//! Every module carries its own unit tests with frozen reference values; the
//! `verify` binary exposes the same checks as command-line suites.

pub mod algebra;
pub mod dirac2d;
pub mod dirac4d;
pub mod fields;
pub mod lorentz;
pub mod particle;
pub mod report;
pub mod suites;

pub use algebra::{c, C};
