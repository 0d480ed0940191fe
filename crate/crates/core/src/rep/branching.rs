//! Interlacing branching between `Spin(n+1)` and `Spin(n)`.
//!
//! For `n = 2k`:   `α₁ ≥ λ₁ ≥ α₂ ≥ … ≥ α_k ≥ |λ_k|`.
//! For `n = 2k+1`: `α₁ ≥ λ₁ ≥ … ≥ α_k ≥ λ_k ≥ |α_{k+1}|`.
//!
//! Both directions enumerate the interlacing lattice directly as a product
//! of independent ranges (in doubled coordinates, step 2).

use crate::exact::HalfInt;

use super::{GroupId, RepError, Weight};

/// `α ↓ λ` for `α` over `Spin(n+1)` and `λ` over `Spin(n)`.
pub fn interlaces(alpha: &Weight, lam: &Weight) -> bool {
    if alpha.group().n() != lam.group().n() + 1 || alpha.is_integral() != lam.is_integral() {
        return false;
    }
    let a = alpha.doubled();
    let l = lam.doubled();
    let k = l.len();
    if k == 0 {
        return true;
    }
    if lam.group().is_odd() {
        // a has k+1 entries
        (0..k).all(|i| a[i] >= l[i])
            && (0..k - 1).all(|i| l[i] >= a[i + 1])
            && l[k - 1] >= a[k].abs()
    } else {
        (0..k - 1).all(|i| a[i] >= l[i] && l[i] >= a[i + 1]) && a[k - 1] >= l[k - 1].abs()
    }
}

/// All `λ` over `Spin(n)` with `α ↓ λ`, in descending lexicographic order.
pub fn branch_down(alpha: &Weight) -> Result<Vec<Weight>, RepError> {
    alpha.require_dominant()?;
    let target = alpha.group().down()?;
    let a = alpha.doubled();
    let k = target.rank();
    let ranges: Vec<(i64, i64)> = (0..k)
        .map(|i| {
            if target.is_odd() {
                // α has k+1 entries; λ_k is squeezed between α_k and |α_{k+1}|
                let lo = if i + 1 == k { a[k].abs() } else { a[i + 1] };
                (lo, a[i])
            } else if i + 1 == k {
                (-a[i], a[i])
            } else {
                (a[i + 1], a[i])
            }
        })
        .collect();
    Ok(lattice(&ranges)
        .into_iter()
        .map(|d| Weight::from_doubled(target, &d).expect("interlacing keeps the integrality class"))
        .collect())
}

/// All dominant `α` over `Spin(n+1)` with `α ↓ λ` and `α₁ ≤ a1_max`, ordered
/// by ascending `α₁` (then descending in the remaining entries).
pub fn branch_up(lam: &Weight, a1_max: HalfInt) -> Result<Vec<Weight>, RepError> {
    lam.require_dominant()?;
    let target: GroupId = lam.group().up();
    let l = lam.doubled();
    let k = l.len();
    // the largest value ≤ a1_max in λ's integrality class
    let parity = l[0].rem_euclid(2);
    let mut top = a1_max.doubled();
    if top.rem_euclid(2) != parity {
        top -= 1;
    }
    let ranges: Vec<(i64, i64)> = (0..target.rank())
        .map(|i| {
            let hi = if i == 0 { top } else if i <= k { l[i - 1] } else { unreachable!() };
            if lam.group().is_odd() {
                // α has k+1 entries; the last one ranges over [−λ_k, λ_k]
                if i == k {
                    (-l[k - 1], l[k - 1])
                } else {
                    (l[i], hi)
                }
            } else if i + 1 == k {
                (l[i].abs(), hi)
            } else {
                (l[i], hi)
            }
        })
        .collect();
    let mut out: Vec<Weight> = lattice(&ranges)
        .into_iter()
        .map(|d| Weight::from_doubled(target, &d).expect("interlacing keeps the integrality class"))
        .collect();
    out.sort_by(|x, y| x.entries()[0].cmp(&y.entries()[0]).then_with(|| y.cmp(x)));
    Ok(out)
}

// Product of inclusive ranges with step 2, descending lexicographic.
fn lattice(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(ranges.len())];
    for &(lo, hi) in ranges {
        if hi < lo {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(out.len() * ((hi - lo) / 2 + 1) as usize);
        for prefix in &out {
            let mut v = hi;
            while v >= lo {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
                v -= 2;
            }
        }
        out = next;
    }
    out
}
