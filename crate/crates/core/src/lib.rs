//! Exact combinatorics of Toeplitz matrices of bivariate forms.
//!
//! The crate builds the Toeplitz matrices `φ^i_d(F)` of a binary form,
//! decides total positivity and nonnegativity exactly, expands Toeplitz
//! minors into Schur functions through the Littlewood–Richardson rule,
//! expands mixed Hessian determinants over lattice-path systems, and
//! classifies forms as `i`-Lorentzian. All arithmetic is exact.

pub mod corpus;
pub mod error;
pub mod expansion;
pub mod form;
pub mod hessian;
pub mod linalg;
pub mod lorentzian;
pub mod poly;
pub mod rational;
pub mod schur;
pub mod tableau;
pub mod toeplitz;
pub mod univariate;
pub mod verify;

pub use error::{Error, Result};
pub use form::{BivariateForm, FormSpec};
pub use poly::{Monomial, SparsePolynomial, Var};
pub use rational::Rational;
pub use tableau::{Partition, SkewShape, Tableau};
pub use toeplitz::{IndexSet, MinorWitness, ToeplitzMatrix};
