//! Explicit Clifford-algebra model used as an oracle.
//!
//! Convention: `e_i = i·γ_i` with Hermitian `γ_i` from the Pauli ladder, so
//! `e_i e_j + e_j e_i = −2δ_ij·I`. The spin generator of the rotation in the
//! `(a, b)` plane is `½ e_a e_b`; on vectors it acts by `e_a ↦ e_b`,
//! `e_b ↦ −e_a`. All matrices are exact over `ℚ(i)`.

mod forms;
mod gamma;
mod projectors;
mod suite;

pub use forms::{exterior_matrix, so_action, y_matrix, FormSpinorSpace};
pub use gamma::{gamma_matrices, gamma_matrices_with, CliffordRep};
pub use projectors::{casimir_matrix, ekj_projectors, symbol_block, symbol_nontrivial, EkjProjector};
pub use suite::{run_oracle_suite, OracleCheck, OracleReport};

use crate::exact::ExactError;
use crate::par::Strategy;
use crate::rep::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` for which matrices are built.
    pub n_cap: usize,
    pub strategy: Strategy,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { n_cap: 6, strategy: Strategy::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("n = {n} exceeds the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("predicted Casimir eigenvalues collide: {0} and {1}")]
    DegenerateCasimir(String, String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
