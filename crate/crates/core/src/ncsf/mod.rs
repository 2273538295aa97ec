//! Homogeneous elements of the algebra of noncommutative symmetric
//! functions, the ribbon product, the Grassmann-algebra encoding with its
//! dual pairing, and generic transition-matrix machinery.

mod element;
mod grassmann;
mod matrix;

use thiserror::Error;

pub use element::NcsfElement;
pub use grassmann::{
    composition_of_mask, grassmann_product, mask_of_composition, GrassmannElement,
    GrassmannFactorList, QsymFunctional,
};
pub use matrix::TransitionMatrix;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NcsfError {
    #[error("degree mismatch ({0} vs {1})")]
    DegreeMismatch(u32, u32),
    #[error("a degree-{degree} factor list needs {} factors, got {got}", degree - 1)]
    FactorCount { degree: u32, got: usize },
    #[error("matrix has the wrong shape for degree {0}")]
    Shape(u32),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}
