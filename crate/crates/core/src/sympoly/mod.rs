//! Sparse polynomials with arbitrary-precision integer coefficients in the
//! matrix coordinates `x[i,j]` and a central deformation parameter `t`.
//!
//! Monomials are ordered degree-lexicographically with the variables ranked
//! `x[1,1] > x[1,2] > … > x[n,n] > t`. Printing lists terms from the largest
//! monomial down, and [`Poly::exact_div`] divides by leading terms in this
//! order, so both are deterministic.

mod matrix;
mod monomial;
mod ops;
mod poly;

pub use matrix::{Entry, GenericMatrix, PolyMatrix};
pub use monomial::{Monomial, Var};
pub(crate) use ops::sign_power;
pub use ops::{poisson, reduce_mod_parabolic, Weight};
pub use poly::Poly;
