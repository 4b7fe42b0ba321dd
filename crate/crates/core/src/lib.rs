//! Exact bimatrix algebra.
//!
//! A bimatrix `A_B = A1 ∪ A2` is an ordered pair of matrices treated as one
//! object. This crate implements the pair algebra over three exact scalar
//! rings (arbitrary-precision rationals, the neutrosophic ring `Q(I)` with
//! `I^2 = I`, and a fuzzy-neutrosophic value lattice), together with
//! bideterminants, biLaplace expansion, biinverses, row bireduction, spectral
//! analysis of the component operators, and the neutrosophic/fuzzy bimatrix
//! taxonomy.
//!
//! All arithmetic is exact; there is no floating point anywhere.
//!
//! ```
//! use bimat_core::{BiMatrix, Matrix, Rational};
//! use bimat_core::det::BiDeterminant;
//!
//! let r = Rational::from_int;
//! let a = BiMatrix::new(
//!     Matrix::from_rows(vec![
//!         vec![r(3), r(0), r(0)],
//!         vec![r(2), r(1), r(1)],
//!         vec![r(0), r(1), r(1)],
//!     ]).unwrap(),
//!     Matrix::from_rows(vec![
//!         vec![r(4), r(5)],
//!         vec![r(-2), r(0)],
//!     ]).unwrap(),
//! ).unwrap();
//! assert_eq!(a.bideterminant().unwrap(), BiDeterminant::new(r(0), r(10)));
//! ```

pub mod bimatrix;
pub mod det;
pub mod error;
pub mod format;
pub mod matrix;
pub mod neutro;
pub mod operator;
pub mod poly;
pub mod scalar;

pub use bimatrix::{BiMatrix, ShapeClass, SymSkewPair};
pub use error::{Component, Error, Result};
pub use matrix::Matrix;
pub use scalar::{FuzzyNeutroValue, NeutrosophicScalar, Rational, Ring, Scalar};
