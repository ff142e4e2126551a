//! Exact combinatorics and symbolic algebra for hypersurface orbital
//! varieties in `sl_n`.
//!
//! The crate is split along the objects it manipulates:
//!
//! - [`tableaux`]: partitions, Young tableaux, Robinson–Schensted insertion,
//!   jeu de taquin, word forms and τ-invariants.
//! - [`parabolic`]: subsets of simple roots, chain forms, Richardson tableaux
//!   and their codimension-one descendants.
//! - [`sympoly`]: sparse integer polynomials in the matrix coordinates
//!   `x[i,j]` and a deformation parameter `t`, with determinants, Poisson
//!   brackets, weights and exact division.
//! - [`bsgen`]: the bottom-left minor generator of a hypersurface orbital
//!   variety and the checks that certify it.
//! - [`quantize`]: the type-A weight computations producing the integral
//!   highest weight of a strong quantization.
//! - [`suite`]: enumeration of all admissible instances up to a rank bound.

pub mod bsgen;
pub mod error;
pub mod parabolic;
pub mod quantize;
pub mod report;
pub mod suite;
pub mod sympoly;
pub mod tableaux;

pub use error::{Error, Result};
