//! Closed-form spectra of the Dirac operator and the higher spin Dirac
//! operators `D_{λ_j}` on the round sphere `Sⁿ`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};

use crate::exact::{binomial, double_factorial, Rational};
use crate::par::Strategy;

use super::{Branch, KTypeLabel, Sign, SpectraError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchTag {
    /// `|μ| = n/2 + l`.
    DiracLike,
    /// `|μ| = (n−2j)/(n−2j+2)·(n/2 + l)`.
    Reduced,
}

impl BranchTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchTag::DiracLike => "dirac-like",
            BranchTag::Reduced => "reduced",
        }
    }
}

/// Which K-type family each eigenvalue branch is attached to.
///
/// `Validated` puts `|μ| = n/2+l` on the `B` family, the only choice for
/// which multiplicities equal Weyl dimensions. `Swapped` exists as a
/// negative control for the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Pairing {
    #[default]
    Validated,
    Swapped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub eigenvalue: Rational,
    pub multiplicity: BigUint,
    pub ktype: KTypeLabel,
    pub branch_tag: BranchTag,
}

fn spinor_dim(n: usize) -> BigInt {
    BigInt::from(1u64 << (n / 2))
}

/// `n/2 + l`.
pub fn dirac_like_value(n: usize, l: usize) -> Rational {
    Rational::ratio(n as i64 + 2 * l as i64, 2)
}

/// `(n−2j)/(n−2j+2)`, the ratio of the reduced to the Dirac-like branch.
pub fn reduction_ratio(n: usize, j: usize) -> Rational {
    let m = n as i64 - 2 * j as i64;
    Rational::ratio(m, m + 2)
}

/// The two multiplicity formulas of the higher spin spectrum, evaluated as
/// rationals for any `j ≥ 0`, `l ≥ 1`: `(dirac-like, reduced)`.
///
/// The reduced formula carries an overall factor `j`; at `j = 0` it is taken
/// to be zero before the `(l+j−1)` denominator can vanish.
pub fn branch_multiplicities(n: usize, j: usize, l: usize) -> (Rational, Rational) {
    let (n_, j_, l_) = (n as i64, j as i64, l as i64);
    let common = Rational::from(spinor_dim(n) * binomial(l_ + n_, l_ - 1));
    let first = &common
        * &Rational::from(binomial(n_ + 1, j_ + 1))
        * Rational::ratio((n_ - 2 * j_) * (j_ + 1), (l_ + j_) * (l_ + n_ - j_));
    let second = if j == 0 {
        Rational::zero()
    } else {
        &common
            * &Rational::from(binomial(n_ + 1, j_))
            * Rational::ratio((n_ - 2 * j_ + 2) * j_, (l_ + j_ - 1) * (l_ + n_ - j_ + 1))
    };
    (first, second)
}

fn to_multiplicity(r: &Rational, what: &str) -> Result<BigUint, SpectraError> {
    r.to_integer()
        .and_then(|i| i.to_biguint())
        .filter(|m| *m > BigUint::from(0u32))
        .ok_or_else(|| SpectraError::NonIntegerMultiplicity(format!("{what}: {r}")))
}

fn signed_pair(
    n: usize,
    magnitude: Rational,
    multiplicity: BigUint,
    branch: Branch,
    j: usize,
    l: usize,
    tag: BranchTag,
) -> Result<[SpectrumEntry; 2], SpectraError> {
    let make = |sign: Sign| -> Result<SpectrumEntry, SpectraError> {
        Ok(SpectrumEntry {
            eigenvalue: if sign == Sign::Plus { magnitude.clone() } else { -&magnitude },
            multiplicity: multiplicity.clone(),
            ktype: KTypeLabel::new(n, branch, j, l, sign)?,
            branch_tag: tag,
        })
    };
    Ok([make(Sign::Plus)?, make(Sign::Minus)?])
}

/// Orders by `|μ|`, then `+` before `−`, then branch and level.
pub fn spectrum_order(a: &SpectrumEntry, b: &SpectrumEntry) -> Ordering {
    a.eigenvalue
        .abs()
        .cmp(&b.eigenvalue.abs())
        .then_with(|| b.eigenvalue.is_positive().cmp(&a.eigenvalue.is_positive()))
        .then_with(|| a.branch_tag.cmp(&b.branch_tag))
        .then_with(|| a.ktype.l.cmp(&b.ktype.l))
}

/// Dirac spectrum: `±(n/2 + l)` with multiplicity `2^⌊n/2⌋·C(l+n−1, l)` per
/// sign, `l = 0..=l_max`, on the K-types `((2l+1)/2, 1/2, …, ±1/2)`.
pub fn dirac_spectrum(n: usize, l_max: usize) -> Result<Vec<SpectrumEntry>, SpectraError> {
    dirac_spectrum_with(n, l_max, Strategy::default())
}

pub fn dirac_spectrum_with(
    n: usize,
    l_max: usize,
    strategy: Strategy,
) -> Result<Vec<SpectrumEntry>, SpectraError> {
    if n < 2 {
        return Err(SpectraError::OutOfRange(format!("n = {n} must be at least 2")));
    }
    let rows = strategy.map_range(l_max + 1, |l| {
        let mult = spinor_dim(n) * binomial((l + n - 1) as i64, l as i64);
        let mult = mult.to_biguint().expect("positive");
        signed_pair(n, dirac_like_value(n, l), mult, Branch::B, 0, l, BranchTag::DiracLike)
    });
    collect_sorted(rows)
}

fn collect_sorted(
    rows: Vec<Result<[SpectrumEntry; 2], SpectraError>>,
) -> Result<Vec<SpectrumEntry>, SpectraError> {
    let mut out = Vec::with_capacity(rows.len() * 2);
    for r in rows {
        out.extend(r?);
    }
    out.sort_by(spectrum_order);
    Ok(out)
}

fn check_ladder_index(n: usize, j: usize) -> Result<(), SpectraError> {
    if j == 0 || 2 * j >= n {
        return Err(SpectraError::OutOfRange(format!(
            "ladder index j = {j} must satisfy 0 < j < n/2 for n = {n}"
        )));
    }
    Ok(())
}

/// Spectrum of `D_{λ_j}`, `0 < j < n/2`, for `l = 1..=l_max`: both branches,
/// both signs, sorted.
pub fn higher_spin_spectrum(n: usize, j: usize, l_max: usize) -> Result<Vec<SpectrumEntry>, SpectraError> {
    higher_spin_spectrum_with(n, j, l_max, Pairing::Validated, Strategy::default())
}

pub fn higher_spin_spectrum_with(
    n: usize,
    j: usize,
    l_max: usize,
    pairing: Pairing,
    strategy: Strategy,
) -> Result<Vec<SpectrumEntry>, SpectraError> {
    check_ladder_index(n, j)?;
    if l_max < 1 {
        return Err(SpectraError::OutOfRange("l_max must be at least 1".into()));
    }
    let (first_branch, second_branch) = match pairing {
        Pairing::Validated => (Branch::B, Branch::A),
        Pairing::Swapped => (Branch::A, Branch::B),
    };
    let rows = strategy.map_range(l_max, |i| -> Result<Vec<[SpectrumEntry; 2]>, SpectraError> {
        let l = i + 1;
        let (m1, m2) = branch_multiplicities(n, j, l);
        let mu1 = dirac_like_value(n, l);
        let mu2 = &reduction_ratio(n, j) * &mu1;
        Ok(vec![
            signed_pair(
                n,
                mu1,
                to_multiplicity(&m1, &format!("n={n} j={j} l={l} dirac-like"))?,
                first_branch,
                j,
                l,
                BranchTag::DiracLike,
            )?,
            signed_pair(
                n,
                mu2,
                to_multiplicity(&m2, &format!("n={n} j={j} l={l} reduced"))?,
                second_branch,
                j,
                l,
                BranchTag::Reduced,
            )?,
        ])
    });
    let mut out = Vec::with_capacity(4 * l_max);
    for r in rows {
        for pair in r? {
            out.extend(pair);
        }
    }
    out.sort_by(spectrum_order);
    Ok(out)
}

/// Factor carrying the `D̃_j` eigenvalue on the shared K-type (`B` family of
/// level `j` = `A` family of level `j+1`) to the `D̃_{j+1}` eigenvalue:
/// `−(n−2j−2)/(n−2j)`. At `j = 0` this is `−(n−2)/n`.
pub fn transfer_factor(n: usize, j: usize) -> Result<Rational, SpectraError> {
    if 2 * j + 2 >= n {
        return Err(SpectraError::OutOfRange(format!(
            "transfer needs 0 <= j < n/2 - 1, got j = {j} for n = {n}"
        )));
    }
    let m = n as i64 - 2 * j as i64;
    Ok(-Rational::ratio(m - 2, m))
}

/// Ratio between `Z` on the first K-type family of `D̃_j` and the closed
/// expression `(n/2+l)·2^{−(n−1)/2}·n!!·(n/2−j)^{−1}`; constant in `l`.
/// Only rational (hence only reported) for odd `n`.
pub fn normalization_diagnostic(n: usize, j: usize) -> Result<Option<Rational>, SpectraError> {
    if 2 * j >= n {
        return Err(SpectraError::OutOfRange(format!("j = {j} must be below n/2 = {n}/2")));
    }
    if n.is_multiple_of(2) {
        return Ok(None);
    }
    let l = 1;
    let branch = if j == 0 { Branch::B } else { Branch::A };
    let alpha = KTypeLabel::new(n, branch, j, l, Sign::Plus)?.weight;
    let z = super::z_function(n, &alpha)?;
    let expr = dirac_like_value(n, l)
        * Rational::from(double_factorial(n as u64))
        * Rational::ratio(1, 1i64 << ((n - 1) / 2))
        * Rational::ratio(2, n as i64 - 2 * j as i64);
    Ok(Some(z / expr))
}
