//! Apolarity machinery for complex polynomials in one variable.
//!
//! The crate computes the Fischer inner product and apolarity bracket,
//! the pullback operator of the bracket along a monic polynomial map,
//! fiber-count classification of circular-domain images, the Schur-Cohn
//! root-location test, and the skew eigenfunction decomposition of the
//! pullback operator. A deterministic randomized harness certifies the
//! classical and relative Grace and Walsh statements on top of these
//! pieces.

pub mod apolarity;
pub mod cmat;
pub mod error;
pub mod harness;
pub mod poly;
pub mod pullback;
pub mod regions;
pub mod rng;
pub mod takagi;

pub use error::{Error, Result};
pub use poly::{Polynomial, RootSet};
