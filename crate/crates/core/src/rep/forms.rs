//! Irreducible pieces `E^{k,j}` of spinor-valued `k`-forms `Λᵏ ⊗ S`.

use num_bigint::BigUint;

use crate::exact::{binomial, HalfInt};

use super::{weyl_dim, GroupId, RepError, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormComponent {
    pub j: usize,
    /// `λ_j`, or both `λ_j^±` in even dimension.
    pub weights: Vec<Weight>,
    pub dimension: BigUint,
}

/// The weight `λ_j = (3/2, …, 3/2, 1/2, …, 1/2)` with `j` entries `3/2`;
/// in even dimension the list holds both sign variants of the last entry.
pub fn ladder_weights(group: GroupId, j: usize) -> Result<Vec<Weight>, RepError> {
    let k = group.rank();
    if j > k {
        return Err(RepError::OutOfRange(format!("j = {j} exceeds the rank of {group}")));
    }
    let entries: Vec<HalfInt> = (0..k)
        .map(|i| if i < j { HalfInt::THREE_HALVES } else { HalfInt::HALF })
        .collect();
    let w = Weight::dominant(group, entries)?;
    if group.is_odd() || k == 0 {
        Ok(vec![w])
    } else {
        let minus = w.flip_last();
        Ok(vec![w, minus])
    }
}

/// `Λᵏ ⊗ S = ⊕_j E^{k,j}`, `j = 0..=min(k, n−k)`, with the dimension identity
/// `Σ_j dim E^{k,j} = C(n,k)·dim S` checked.
pub fn spinor_form_components(
    group: GroupId,
    k_form: usize,
) -> Result<Vec<FormComponent>, RepError> {
    let n = group.n();
    if k_form > n {
        return Err(RepError::OutOfRange(format!("form degree {k_form} exceeds n = {n}")));
    }
    let top = k_form.min(n - k_form);
    let components = (0..=top)
        .map(|j| {
            let weights = ladder_weights(group, j)?;
            let dimension = weights
                .iter()
                .map(weyl_dim)
                .sum::<Result<BigUint, RepError>>()?;
            Ok(FormComponent { j, weights, dimension })
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    let total: BigUint = components.iter().map(|c| &c.dimension).sum();
    let expected = binomial(n as i64, k_form as i64)
        .to_biguint()
        .expect("binomial is nonnegative")
        * group.spinor_dim();
    if total != expected {
        return Err(RepError::DimensionMismatch {
            expected: expected.to_string(),
            got: total.to_string(),
        });
    }
    Ok(components)
}
