//! The spectral function obtained by telescoping the Gamma-ratio formula.
//!
//! Each factor `Γ(½(n+3) − a + α_a) / Γ(½(n+1) − a + α_a)` equals
//! `½(n+1) − a + α_a`, so eigenvalue ratios on two K-types are ratios of
//! the products below.

use crate::exact::Rational;
use crate::rep::Weight;

use super::SpectraError;

/// `Z(α) = Π_{a=1}^{⌊(n+1)/2⌋} (½(n+1) − a + α_a)` for `α` over `Spin(n+1)`.
pub fn z_function(n: usize, alpha: &Weight) -> Result<Rational, SpectraError> {
    if alpha.group().n() != n + 1 {
        return Err(SpectraError::OutOfRange(format!(
            "K-type must be a Spin({}) weight, got one for {}",
            n + 1,
            alpha.group()
        )));
    }
    alpha.require_dominant()?;
    let mut z = Rational::one();
    for (a, d) in alpha.doubled().iter().enumerate() {
        // doubled Gamma argument ½(n+1) − a + α_a with 1-based a
        let x = n as i64 + 1 - 2 * (a as i64 + 1) + d;
        if x <= 0 && x % 2 == 0 {
            return Err(SpectraError::PoleArgument(format!(
                "Gamma argument {} at a = {} for {alpha}",
                x / 2,
                a + 1
            )));
        }
        z *= &Rational::ratio(x, 2);
    }
    Ok(z)
}

/// `Z(α)/Z(α′)`, the predicted ratio `μ(α)/μ(α′)`.
pub fn z_ratio(n: usize, alpha: &Weight, alpha_prime: &Weight) -> Result<Rational, SpectraError> {
    let den = z_function(n, alpha_prime)?;
    Ok(z_function(n, alpha)?.checked_div(&den).expect("nonzero away from poles"))
}
