//! Weyl dimension formula, Casimir scalars and the dot action of the Weyl
//! group.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::exact::{exact_quotient, HalfInt, Rational};

use super::{GroupId, Kind, RepError, Weight};

/// Half-sum of the positive roots of `Spin(n)`.
pub fn rho(group: GroupId) -> Vec<HalfInt> {
    group
        .rho_doubled()
        .into_iter()
        .map(HalfInt::from_doubled)
        .collect()
}

/// `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` over `eᵢ ± eⱼ` (and `eᵢ` for odd `n`).
pub fn weyl_dim(w: &Weight) -> Result<BigUint, RepError> {
    w.require_dominant()?;
    let dim = weyl_product(w.group(), &w.doubled());
    Ok(dim.to_biguint().expect("dominant weights have positive dimension"))
}

/// The Weyl product for an arbitrary (doubled) weight. Zero exactly when
/// `λ+ρ` is singular; negative values occur off the dominant chamber.
pub(crate) fn weyl_product(group: GroupId, doubled: &[i64]) -> BigInt {
    let r = group.rho_doubled();
    let x: Vec<i64> = doubled.iter().zip(&r).map(|(d, r)| d + r).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let k = x.len();
    for i in 0..k {
        for j in i + 1..k {
            num *= (x[i] - x[j]) * (x[i] + x[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
        if group.kind() == Kind::B {
            num *= x[i];
            den *= r[i];
        }
    }
    exact_quotient(&num, &den).expect("Weyl product is integral")
}

/// `⟨λ, λ+2ρ⟩ = Σᵢ λᵢ(λᵢ + 2ρᵢ)`.
pub fn casimir_scalar(w: &Weight) -> Result<Rational, RepError> {
    w.require_dominant()?;
    Ok(casimir_unchecked(w))
}

pub(crate) fn casimir_unchecked(w: &Weight) -> Rational {
    let r = w.group().rho_doubled();
    let quarter_sum: i64 = w
        .doubled()
        .iter()
        .zip(&r)
        .map(|(d, r)| d * (d + 2 * r))
        .sum();
    Rational::ratio(quarter_sum, 4)
}

/// Moves `λ+ρ` into the dominant chamber: returns `(det w, w(λ+ρ) − ρ)`,
/// or `None` when `λ+ρ` lies on a wall (fixed by some reflection).
pub(crate) fn dot_dominant(group: GroupId, doubled: &[i64]) -> Option<(i64, Vec<i64>)> {
    let r = group.rho_doubled();
    let x: Vec<i64> = doubled.iter().zip(&r).map(|(d, r)| d + r).collect();
    let mut abs: Vec<i64> = x.iter().map(|v| v.abs()).collect();
    let mut sorted = abs.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let negatives = x.iter().filter(|v| **v < 0).count();
    let mut sign = 1i64;
    match group.kind() {
        Kind::B => {
            if x.contains(&0) {
                return None;
            }
            if negatives % 2 == 1 {
                sign = -sign;
            }
        }
        Kind::D => {
            // even number of sign changes; an odd count leaves the smallest
            // entry negative unless a zero absorbs the extra flip
            if negatives % 2 == 1 && !x.contains(&0) {
                let (imin, _) = abs.iter().enumerate().min_by_key(|(_, v)| **v).unwrap();
                abs[imin] = -abs[imin];
            }
        }
    }
    // sort by absolute value, descending; the permutation parity enters det w
    let mut order: Vec<usize> = (0..abs.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(abs[i].abs()));
    let mut inversions = 0;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if order[a] > order[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 1 {
        sign = -sign;
    }
    let nu = order
        .iter()
        .zip(&r)
        .map(|(&i, r)| abs[i] - r)
        .collect();
    Some((sign, nu))
}
