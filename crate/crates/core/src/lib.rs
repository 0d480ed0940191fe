//! Exact spectra of higher spin Dirac operators on round spheres.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, Gaussian rationals, half-integers and dense exact
//!   linear algebra (rank, kernel, spectral projectors).
//! * [`rep`]: weights of `Spin(n)`, the Weyl dimension formula, Casimir
//!   scalars, interlacing branching to `Spin(n−1)`/`Spin(n+1)`, tensor
//!   products with the vector and spinor representations, and the
//!   decomposition of spinor-valued forms.
//! * [`spectra`]: closed-form spectra of the Dirac operator and of the higher
//!   spin Dirac operators, the telescoped Gamma-ratio spectral function and a
//!   consistency verifier that ties them to Weyl dimensions.
//! * [`clifford`]: an independent matrix model (gamma matrices, `so(n)` action,
//!   Casimir projectors, the `Y` contraction and symbol checks) used as an
//!   oracle for the representation-theoretic predictions.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod clifford;
pub mod exact;
pub mod par;
pub mod rep;
pub mod spectra;

pub use par::Strategy;
