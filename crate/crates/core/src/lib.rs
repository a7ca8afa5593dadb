//! Exact-arithmetic construction of Brandt-matrix Ramanujan graphs, their
//! Ihara zeta functions, and verification of the determinant identities
//! linking them to Hasse-Weil zeta functions of `X_0(N)`.

pub mod arithmetic;
pub mod correspondence;
pub mod error;
pub mod exact;
pub mod graph;
pub mod report;
pub mod selftest;
pub mod zeta;

pub use error::{Error, Result};
