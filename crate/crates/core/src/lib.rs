//! Exact computer algebra for noncommutative symmetric functions.
//!
//! The crate implements homogeneous elements of the algebra of
//! noncommutative symmetric functions over exact rational-function
//! coefficients, together with several families of multiparameter bases of
//! Hall-Littlewood and Macdonald type, their transition matrices, product
//! rules, and the packed-word statistics that describe the one-parameter
//! Kostka matrices combinatorially.
//!
//! ```
//! use ncsf_core::theta::ribbon_t;
//! use ncsf_core::algebra::parse::ratfun;
//! use ncsf_core::Composition;
//!
//! // The deformed ribbon indexed by (2, 1), expanded over the complete
//! // basis: the coefficient of S^{111} is -(1 - t1) t1.
//! let r21 = ribbon_t(&Composition::from_parts(&[2, 1]));
//! let coeff = &r21.to_s_coeffs()[&Composition::from_parts(&[1, 1, 1])];
//! assert_eq!(coeff, &ratfun("-(1 - t1)*t1"));
//! ```
//!
//! Modules:
//! - [`algebra`]: polynomials, rational functions, substitutions, q-series.
//! - [`compositions`]: composition combinatorics and the matrix indexing.
//! - [`ncsf`]: elements, the ribbon product, the Grassmann-algebra
//!   encoding and pairing, and generic transition matrices.
//! - [`theta`]: the multiparameter analogue of the classical
//!   `(1-t)`-transform and its inverse.
//! - [`kostka`]: the parameter matrices `A_n`, `B_n`, `T_n`, their block
//!   recursion and determinant factorization.
//! - [`macdonald`]: the two-parameter `J` basis, its `q = 0`
//!   Hall-Littlewood specialization, closed product and expansion formulas,
//!   and exact limit constructions.
//! - [`words`]: packed words, special inversions, the `C`/`D` matrices and
//!   flagged ribbon Schur functions.

pub mod algebra;
pub mod compositions;
pub mod kostka;
pub mod macdonald;
pub mod ncsf;
pub mod theta;
pub mod words;

pub use algebra::{AlgebraError, LimitPoint, Monomial, Poly, RatFun, Substitution, VarFamily, Variable};
pub use compositions::{compositions_ordered, Composition, CompositionError};
pub use ncsf::{GrassmannFactorList, NcsfElement, QsymFunctional, TransitionMatrix};
