use crate::exact::{lagrange_projectors_with, ExactMatrix, HalfInt, Rational};
use crate::par::Strategy;
use crate::rep::{casimir_scalar, ladder_weights, GroupId, Weight};

use super::{exterior_matrix, so_action, CliffordError, CliffordRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkjProjector {
    pub j: usize,
    /// Predicted Casimir eigenvalue on `E^{k,j}`.
    pub eigenvalue: Rational,
    pub projector: ExactMatrix,
    pub rank: usize,
}

fn sum_of_squares(generators: &[ExactMatrix], strategy: Strategy) -> ExactMatrix {
    let squares = strategy.map(generators, |l| l.mul_with(l, Strategy::Sequential));
    let n = generators[0].rows();
    squares.iter().fold(ExactMatrix::zeros(n, n), |acc, sq| &acc + sq)
}

/// Scale turning `Σ L_ab²` into the Casimir with the normalization of
/// [`casimir_scalar`], read off on the spinor module.
fn casimir_scale(rep: &CliffordRep) -> Result<Rational, CliffordError> {
    let group = GroupId::new(rep.n)?;
    let spinor = Weight::dominant(group, vec![HalfInt::HALF; group.rank()])?;
    let target = casimir_scalar(&spinor)?;
    let raw = sum_of_squares(&so_action(rep, 0)?, Strategy::Sequential);
    let c = raw.get(0, 0).clone();
    if !c.is_real() || c.is_zero() || raw != ExactMatrix::scalar(rep.dim_s, c.clone()) {
        return Err(CliffordError::OutOfRange("Σ L² is not a nonzero scalar on S".into()));
    }
    Ok(&target / &c.re)
}

/// Casimir on `Λᵏ ⊗ S`, a scalar multiple of `Σ_{a<b} L_ab²`.
pub fn casimir_matrix(rep: &CliffordRep, k_form: usize) -> Result<ExactMatrix, CliffordError> {
    casimir_matrix_with(rep, k_form, Strategy::default())
}

pub(crate) fn casimir_matrix_with(
    rep: &CliffordRep,
    k_form: usize,
    strategy: Strategy,
) -> Result<ExactMatrix, CliffordError> {
    let scale = casimir_scale(rep)?;
    Ok(sum_of_squares(&so_action(rep, k_form)?, strategy).scale_rational(&scale))
}

/// Spectral projectors of the Casimir onto `E^{k,j}`, `j = 0..=min(k, n−k)`,
/// using the eigenvalues predicted by `casimir_scalar(λ_j)`.
pub fn ekj_projectors(rep: &CliffordRep, k_form: usize) -> Result<Vec<EkjProjector>, CliffordError> {
    ekj_projectors_with(rep, k_form, Strategy::default())
}

pub(crate) fn ekj_projectors_with(
    rep: &CliffordRep,
    k_form: usize,
    strategy: Strategy,
) -> Result<Vec<EkjProjector>, CliffordError> {
    let n = rep.n;
    if k_form > n {
        return Err(CliffordError::OutOfRange(format!("form degree {k_form} exceeds n = {n}")));
    }
    let group = GroupId::new(n)?;
    let js: Vec<usize> = (0..=k_form.min(n - k_form)).collect();
    let eigenvalues = js
        .iter()
        .map(|&j| Ok(casimir_scalar(&ladder_weights(group, j)?[0])?))
        .collect::<Result<Vec<Rational>, CliffordError>>()?;
    for (a, x) in eigenvalues.iter().enumerate() {
        if let Some(y) = eigenvalues[a + 1..].iter().find(|y| *y == x) {
            return Err(CliffordError::DegenerateCasimir(x.to_string(), y.to_string()));
        }
    }
    let casimir = casimir_matrix_with(rep, k_form, strategy)?;
    let projectors = lagrange_projectors_with(&casimir, &eigenvalues, strategy)?;
    let ranks = strategy.map(&projectors, ExactMatrix::rank);
    Ok(js
        .into_iter()
        .zip(eigenvalues)
        .zip(projectors.into_iter().zip(ranks))
        .map(|((j, eigenvalue), (projector, rank))| EkjProjector { j, eigenvalue, projector, rank })
        .collect())
}

/// `P_{k+1,target} · (ε(e_i) ⊗ I) · P_{k,source}` for every coordinate `i`.
pub fn symbol_block(
    rep: &CliffordRep,
    k_form: usize,
    target_j: usize,
    source_j: usize,
) -> Result<Vec<ExactMatrix>, CliffordError> {
    let lower = ekj_projectors(rep, k_form)?;
    let upper = ekj_projectors(rep, k_form + 1)?;
    symbol_block_from(rep, k_form, &upper, target_j, &lower, source_j)
}

pub(crate) fn symbol_block_from(
    rep: &CliffordRep,
    k_form: usize,
    upper: &[EkjProjector],
    target_j: usize,
    lower: &[EkjProjector],
    source_j: usize,
) -> Result<Vec<ExactMatrix>, CliffordError> {
    let pick = |ps: &[EkjProjector], j: usize, k: usize| {
        ps.iter()
            .find(|p| p.j == j)
            .map(|p| p.projector.clone())
            .ok_or_else(|| CliffordError::OutOfRange(format!("no E^{{{k},{j}}} for n = {}", rep.n)))
    };
    let target = pick(upper, target_j, k_form + 1)?;
    let source = pick(lower, source_j, k_form)?;
    (0..rep.n)
        .map(|i| {
            let moved = &exterior_matrix(rep, k_form, i)? * &source;
            Ok(&target * &moved)
        })
        .collect()
}

/// Whether `P_{j+1,j+1} (ε(e_i) ⊗ I) P_{j,j} ≠ 0` for some coordinate `i`.
pub fn symbol_nontrivial(rep: &CliffordRep, j: usize) -> Result<bool, CliffordError> {
    if 2 * (j + 1) > rep.n {
        return Err(CliffordError::OutOfRange(format!(
            "symbol check needs j ≤ n/2 − 1, got j = {j}, n = {}",
            rep.n
        )));
    }
    Ok(symbol_block(rep, j, j + 1, j)?.iter().any(|m| !m.is_zero()))
}
