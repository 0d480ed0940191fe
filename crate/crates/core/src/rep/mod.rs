//! Weight combinatorics for `Spin(n)`.

mod branching;
mod forms;
mod group;
mod tensor;
mod weight;
mod weyl;

pub use branching::{branch_down, branch_up, interlaces};
pub use forms::{ladder_weights, spinor_form_components, FormComponent};
pub use group::{GroupId, Kind};
pub use tensor::{tensor_spinor, tensor_vector, Component, DecompositionReport};
pub use weight::Weight;
pub use weyl::{casimir_scalar, rho, weyl_dim};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("dimension check failed: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("malformed weight: {0}")]
    Shape(String),
    #[error("cannot parse weight {0}")]
    Parse(String),
}
