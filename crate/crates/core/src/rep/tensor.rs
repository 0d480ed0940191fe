//! Tensor products with the vector and spinor representations.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::weyl::dot_dominant;
use super::{weyl_dim, GroupId, RepError, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub weight: Weight,
    pub dimension: BigUint,
    pub multiplicity: u64,
    /// Highest component (sum of the factors' highest weights). In even
    /// dimension both half-spin Cartan products are flagged.
    pub cartan: bool,
}

/// Irreducible decomposition of a tensor product, with the dimension sum
/// verified before it is returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub factor_dims: (BigUint, BigUint),
    pub components: Vec<Component>,
    pub checked: bool,
}

impl DecompositionReport {
    fn build(
        factor_dims: (BigUint, BigUint),
        mut components: Vec<Component>,
    ) -> Result<Self, RepError> {
        components.sort_by(|x, y| y.weight.cmp(&x.weight));
        let total: BigUint = components
            .iter()
            .map(|c| &c.dimension * c.multiplicity)
            .sum();
        let expected = &factor_dims.0 * &factor_dims.1;
        if total != expected {
            return Err(RepError::DimensionMismatch {
                expected: expected.to_string(),
                got: total.to_string(),
            });
        }
        Ok(Self {
            factor_dims,
            components,
            checked: true,
        })
    }

    pub fn total_dimension(&self) -> BigUint {
        &self.factor_dims.0 * &self.factor_dims.1
    }
}

fn unit(k: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; k];
    v[i] = 2 * sign;
    v
}

/// `V_λ ⊗ ℂⁿ`: components `λ ± eᵢ` that are dominant, plus `λ` itself for
/// odd `n` when `λ_k > 0`, each with multiplicity one.
pub fn tensor_vector(lam: &Weight) -> Result<DecompositionReport, RepError> {
    lam.require_dominant()?;
    let g = lam.group();
    let k = g.rank();
    let d = lam.doubled();
    let mut components = Vec::new();
    let mut push = |v: Vec<i64>, cartan: bool| -> Result<(), RepError> {
        let w = Weight::from_doubled(g, &v)?;
        if w.is_dominant() {
            components.push(Component {
                dimension: weyl_dim(&w)?,
                weight: w,
                multiplicity: 1,
                cartan,
            });
        }
        Ok(())
    };
    for i in 0..k {
        for sign in [1, -1] {
            let shifted: Vec<i64> = d.iter().zip(unit(k, i, sign)).map(|(a, b)| a + b).collect();
            push(shifted, i == 0 && sign == 1)?;
        }
    }
    if g.is_odd() && d.last().is_some_and(|&x| x > 0) {
        push(d.clone(), false)?;
    }
    DecompositionReport::build((weyl_dim(lam)?, BigUint::from(g.n())), components)
}

/// `S ⊗ V_λ'` by the signed weight-shift (Klimyk) rule over all `2^k` weights
/// `(±½, …, ±½)` of `S` (both chiralities in even dimension).
pub fn tensor_spinor(lam_prime: &Weight) -> Result<DecompositionReport, RepError> {
    lam_prime.require_dominant()?;
    let g = lam_prime.group();
    let k = g.rank();
    let spinor_weights: Vec<Vec<i64>> = (0..1u64 << k)
        .map(|mask| (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect();
    let mut cartan: Vec<Vec<i64>> = vec![lam_prime.doubled().iter().map(|x| x + 1).collect()];
    if !g.is_odd() && k > 0 {
        let mut minus = cartan[0].clone();
        minus[k - 1] -= 2;
        cartan.push(minus);
    }
    let coefficients = klimyk(lam_prime, &spinor_weights)?;
    let components = coefficients
        .into_iter()
        .map(|(v, m)| {
            let weight = Weight::from_doubled(g, &v)?;
            Ok(Component {
                dimension: weyl_dim(&weight)?,
                multiplicity: m,
                cartan: cartan.contains(&v),
                weight,
            })
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    DecompositionReport::build(
        (BigUint::from(g.spinor_dim()), weyl_dim(lam_prime)?),
        components,
    )
}

/// Multiplicities of `V_λ ⊗ V` from the (doubled) weights of `V`, listed
/// with multiplicity. Cancelling contributions are summed with `det w`.
pub(crate) fn klimyk(
    lam: &Weight,
    weights: &[Vec<i64>],
) -> Result<BTreeMap<Vec<i64>, u64>, RepError> {
    let g: GroupId = lam.group();
    let d = lam.doubled();
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for mu in weights {
        let shifted: Vec<i64> = d.iter().zip(mu).map(|(a, b)| a + b).collect();
        if let Some((sign, nu)) = dot_dominant(g, &shifted) {
            *acc.entry(nu).or_default() += sign;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, m) in acc {
        if m < 0 {
            return Err(RepError::DimensionMismatch {
                expected: "nonnegative multiplicities".into(),
                got: format!("{m} for {nu:?}"),
            });
        }
        if m > 0 {
            out.insert(nu, m as u64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> Weight {
        Weight::parse(GroupId::new(n).unwrap(), s).unwrap()
    }

    fn summary(r: &DecompositionReport) -> Vec<(String, u64, u64, bool)> {
        r.components
            .iter()
            .map(|c| {
                (
                    c.weight.to_string(),
                    c.dimension.clone().try_into().unwrap(),
                    c.multiplicity,
                    c.cartan,
                )
            })
            .collect()
    }

    #[test]
    fn vector_examples() {
        let r = tensor_vector(&w(5, "1/2,1/2")).unwrap();
        assert!(r.checked);
        assert_eq!(
            summary(&r),
            [("3/2,1/2".into(), 16, 1, true), ("1/2,1/2".into(), 4, 1, false)]
        );
        let r = tensor_vector(&w(4, "0,0")).unwrap();
        assert_eq!(summary(&r), [("1,0".into(), 4, 1, true)]);
        let r = tensor_vector(&w(3, "1")).unwrap();
        assert_eq!(
            summary(&r),
            [("2".into(), 5, 1, true), ("1".into(), 3, 1, false), ("0".into(), 1, 1, false)]
        );
    }

    #[test]
    fn spinor_examples() {
        let r = tensor_spinor(&w(3, "1")).unwrap();
        assert_eq!(summary(&r), [("3/2".into(), 4, 1, true), ("1/2".into(), 2, 1, false)]);
        let r = tensor_spinor(&w(3, "0")).unwrap();
        assert_eq!(summary(&r), [("1/2".into(), 2, 1, true)]);
        let r = tensor_spinor(&w(5, "1,0")).unwrap();
        assert_eq!(
            summary(&r),
            [("3/2,1/2".into(), 16, 1, true), ("1/2,1/2".into(), 4, 1, false)]
        );
        // both half-spin Cartan products are flagged in even dimension
        let r = tensor_spinor(&w(4, "1,0")).unwrap();
        let flagged: Vec<String> = r
            .components
            .iter()
            .filter(|c| c.cartan)
            .map(|c| c.weight.to_string())
            .collect();
        assert_eq!(flagged, ["3/2,1/2", "3/2,-1/2"]);
        assert_eq!(r.total_dimension(), BigUint::from(16u32));
    }

    #[test]
    fn vector_rule_agrees_with_klimyk() {
        // the vector representation has weights ±eᵢ, plus 0 in odd dimension
        for n in 2..=8 {
            let g = GroupId::new(n).unwrap();
            let k = g.rank();
            let mut weights: Vec<Vec<i64>> = (0..k)
                .flat_map(|i| [unit(k, i, 1), unit(k, i, -1)])
                .collect();
            if g.is_odd() {
                weights.push(vec![0; k]);
            }
            for s in ["0", "1/2", "1", "3/2", "2"] {
                let mut entries: Vec<&str> = vec![s; k];
                if k > 1 {
                    entries[0] = if s.contains('/') { "5/2" } else { "3" };
                }
                let lam = w(n, &entries.join(","));
                let rule = tensor_vector(&lam).unwrap();
                let general = klimyk(&lam, &weights).unwrap();
                let from_rule: BTreeMap<Vec<i64>, u64> = rule
                    .components
                    .iter()
                    .map(|c| (c.weight.doubled(), c.multiplicity))
                    .collect();
                assert_eq!(from_rule, general, "n={n} λ={lam}");
            }
        }
    }

    #[test]
    fn non_dominant_inputs_are_rejected() {
        assert!(matches!(tensor_vector(&w(5, "0,1")), Err(RepError::NotDominant(_))));
        assert!(matches!(tensor_spinor(&w(6, "0,0,1")), Err(RepError::NotDominant(_))));
    }
}
