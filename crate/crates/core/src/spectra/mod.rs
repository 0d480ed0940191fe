//! Closed-form spectra and their consistency checks.
//!
//! Sign convention: tables are emitted for `D_{λ_j} = −D̃_j`. The spectra
//! are symmetric under `μ ↦ −μ`, and for odd `n` the eigenvalue `+μ` is
//! attached to the K-type whose last entry is positive.

mod closed;
mod ktype;
mod verify;
mod zfunc;

pub use closed::{
    branch_multiplicities, dirac_like_value, dirac_spectrum, dirac_spectrum_with,
    higher_spin_spectrum, higher_spin_spectrum_with, normalization_diagnostic, reduction_ratio,
    spectrum_order, transfer_factor, BranchTag, Pairing, SpectrumEntry,
};
pub use ktype::{Branch, KTypeLabel, Sign};
pub use verify::{
    verify_consistency, verify_consistency_with, verify_grid, ConsistencyReport, Failure,
    VerifyOptions,
};
pub use zfunc::{z_function, z_ratio};

use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectraError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("K-type outside the telescoping regime: {0}")]
    PoleArgument(String),
    #[error("multiplicity formula did not give a positive integer: {0}")]
    NonIntegerMultiplicity(String),
    #[error(transparent)]
    Rep(RepError),
}
