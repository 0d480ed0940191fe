//! Exact cross-checks tying the closed-form spectra to Weyl dimensions,
//! the spectral function `Z` and the transfer factor.

use num_bigint::BigUint;

use crate::exact::Rational;
use crate::par::Strategy;
use crate::rep::weyl_dim;

use super::{
    branch_multiplicities, dirac_spectrum_with, higher_spin_spectrum_with, normalization_diagnostic,
    transfer_factor, z_function, Branch, BranchTag, KTypeLabel, Pairing, Sign, SpectraError,
    SpectrumEntry,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub n: usize,
    pub j_max: usize,
    pub l_max: usize,
    pub pairing: Pairing,
    /// Number of `(j, l)` cases examined.
    pub cases_checked: usize,
    /// Number of individual identities evaluated.
    pub checks_run: usize,
    pub failures: Vec<Failure>,
    /// Measured constant of [`normalization_diagnostic`] per `j` (odd `n`).
    pub diagnostics: Vec<(usize, Option<Rational>)>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub pairing: Pairing,
    pub strategy: Strategy,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn expect_eq<T: PartialEq + ToString>(&mut self, case: impl FnOnce() -> String, expected: &T, got: &T) {
        self.checks += 1;
        if expected != got {
            self.failures.push(Failure {
                case: case(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Runs every identity for `j = 0..=j_max` (restricted to `j < n/2`) and
/// `l ≤ l_max`.
pub fn verify_consistency(n: usize, j_max: usize, l_max: usize) -> Result<ConsistencyReport, SpectraError> {
    verify_consistency_with(n, j_max, l_max, VerifyOptions::default())
}

pub fn verify_consistency_with(
    n: usize,
    j_max: usize,
    l_max: usize,
    options: VerifyOptions,
) -> Result<ConsistencyReport, SpectraError> {
    if n < 2 {
        return Err(SpectraError::OutOfRange(format!("n = {n} must be at least 2")));
    }
    if l_max < 1 {
        return Err(SpectraError::OutOfRange("l_max must be at least 1".into()));
    }
    let js: Vec<usize> = (0..=j_max).filter(|&j| 2 * j < n).collect();
    let per_j = options.strategy.map(&js, |&j| check_operator(n, j, l_max, options.pairing));
    let mut tally = Tally::default();
    let mut cases = 0;
    for r in per_j {
        let (t, c) = r?;
        tally.absorb(t);
        cases += c;
    }
    tally.absorb(check_transfer(n, &js, l_max, options.pairing)?);
    let diagnostics = js
        .iter()
        .map(|&j| normalization_diagnostic(n, j).map(|d| (j, d)))
        .collect::<Result<_, _>>()?;
    Ok(ConsistencyReport {
        n,
        j_max,
        l_max,
        pairing: options.pairing,
        cases_checked: cases,
        checks_run: tally.checks,
        failures: tally.failures,
        diagnostics,
    })
}

fn spectrum(n: usize, j: usize, l_max: usize, pairing: Pairing) -> Result<Vec<SpectrumEntry>, SpectraError> {
    if j == 0 {
        dirac_spectrum_with(n, l_max, Strategy::Sequential)
    } else {
        higher_spin_spectrum_with(n, j, l_max, pairing, Strategy::Sequential)
    }
}

fn check_operator(n: usize, j: usize, l_max: usize, pairing: Pairing) -> Result<(Tally, usize), SpectraError> {
    let entries = spectrum(n, j, l_max, pairing)?;
    let mut t = Tally::default();
    let odd = n % 2 == 1;
    let case = |e: &SpectrumEntry, what: &str| {
        format!(
            "n={n} j={j} l={} mu={} [{}] {what}",
            e.ktype.l,
            e.eigenvalue,
            e.branch_tag.as_str()
        )
    };

    // (a) multiplicity = Weyl dimension of the paired K-type
    for e in &entries {
        let d = weyl_dim(&e.ktype.weight)?;
        t.expect_eq(|| case(e, "multiplicity = weyl_dim"), &d, &e.multiplicity);
    }

    // (b) Z ratios against eigenvalue ratios, all same-sign pairs
    let z: Vec<Rational> = entries
        .iter()
        .map(|e| z_function(n, &e.ktype.weight))
        .collect::<Result<_, _>>()?;
    for a in 0..entries.len() {
        for b in a + 1..entries.len() {
            let (ea, eb) = (&entries[a], &entries[b]);
            if ea.eigenvalue.is_positive() != eb.eigenvalue.is_positive() {
                continue;
            }
            let predicted = &z[a] / &z[b];
            let actual = &ea.eigenvalue / &eb.eigenvalue;
            t.expect_eq(
                || format!("{} vs {}: Z ratio", case(ea, ""), eb.eigenvalue),
                &predicted,
                &actual,
            );
        }
    }

    // (c) both signs together fill the isotypic components
    let first_l = if j == 0 { 0 } else { 1 };
    for l in first_l..=l_max {
        for tag in [BranchTag::DiracLike, BranchTag::Reduced] {
            let here: Vec<&SpectrumEntry> = entries
                .iter()
                .filter(|e| e.ktype.l == l && e.branch_tag == tag)
                .collect();
            if here.is_empty() {
                continue;
            }
            let total: BigUint = here.iter().map(|e| &e.multiplicity).sum();
            let k = &here[0].ktype;
            let isotypic = if odd {
                let plus = KTypeLabel::new(n, k.branch, j, l, Sign::Plus)?;
                let minus = KTypeLabel::new(n, k.branch, j, l, Sign::Minus)?;
                weyl_dim(&plus.weight)? + weyl_dim(&minus.weight)?
            } else {
                weyl_dim(&k.weight)? * 2u32
            };
            t.expect_eq(
                || format!("n={n} j={j} l={l} [{}] sum over signs", tag.as_str()),
                &isotypic,
                &total,
            );
        }
    }

    // (d) reduced / dirac-like eigenvalue ratio at each level
    if j > 0 {
        for l in 1..=l_max {
            let pick = |tag| {
                entries
                    .iter()
                    .find(|e| e.ktype.l == l && e.branch_tag == tag && e.eigenvalue.is_positive())
                    .map(|e| e.eigenvalue.clone())
                    .expect("both branches present")
            };
            let ratio = pick(BranchTag::Reduced) / pick(BranchTag::DiracLike);
            t.expect_eq(
                || format!("n={n} j={j} l={l} reduced/dirac-like"),
                &super::reduction_ratio(n, j),
                &ratio,
            );
            // the raw formulas agree with the emitted multiplicities
            let (m1, m2) = branch_multiplicities(n, j, l);
            let emitted = |tag| {
                entries
                    .iter()
                    .find(|e| e.ktype.l == l && e.branch_tag == tag)
                    .map(|e| Rational::from(num_bigint::BigInt::from(e.multiplicity.clone())))
                    .expect("present")
            };
            t.expect_eq(|| format!("n={n} j={j} l={l} first formula"), &m1, &emitted(BranchTag::DiracLike));
            t.expect_eq(|| format!("n={n} j={j} l={l} second formula"), &m2, &emitted(BranchTag::Reduced));
        }
    }
    let cases = if j == 0 { l_max + 1 } else { l_max };
    Ok((t, cases))
}

// (e) transfer factor: literal value at j = 0, and for each j the ratio of
// the spectra on the shared K-type, and the Z-route ratio.
fn check_transfer(n: usize, js: &[usize], l_max: usize, pairing: Pairing) -> Result<Tally, SpectraError> {
    let mut t = Tally::default();
    if 2 >= n {
        return Ok(t);
    }
    let literal = -Rational::ratio(n as i64 - 2, n as i64);
    t.expect_eq(|| format!("n={n} transfer_factor(n,0)"), &literal, &transfer_factor(n, 0)?);
    for &j in js {
        if 2 * j + 2 >= n || !js.contains(&(j + 1)) {
            continue;
        }
        let factor = transfer_factor(n, j)?;
        let lower = spectrum(n, j, l_max, pairing)?;
        let upper = spectrum(n, j + 1, l_max, pairing)?;
        for l in 1..=l_max {
            let shared = KTypeLabel::new(n, Branch::B, j, l, Sign::Plus)?.weight;
            let on_shared = |es: &[SpectrumEntry]| {
                es.iter()
                    .find(|e| e.ktype.weight == shared && e.eigenvalue.is_positive())
                    .map(|e| e.eigenvalue.clone())
            };
            let (Some(mu), Some(mu_next)) = (on_shared(&lower), on_shared(&upper)) else {
                t.expect_eq(
                    || format!("n={n} j={j} l={l} shared K-type {shared}"),
                    &"present in both spectra".to_string(),
                    &"missing".to_string(),
                );
                continue;
            };
            t.expect_eq(
                || format!("n={n} j={j} l={l} transfer vs spectra"),
                &factor.abs(),
                &(mu_next / mu),
            );
            let alpha = KTypeLabel::new(n, Branch::A, j + 1, l, Sign::Plus)?.weight;
            let beta = KTypeLabel::new(n, Branch::B, j + 1, l, Sign::Plus)?.weight;
            let via_z = z_function(n, &alpha)? / z_function(n, &beta)?;
            t.expect_eq(|| format!("n={n} j={j} l={l} transfer vs Z"), &factor.abs(), &via_z);
        }
    }
    Ok(t)
}

/// Reports for every `n` in `n_range`, all valid `j`, computed with
/// `options.strategy` across `n`.
pub fn verify_grid(
    n_range: std::ops::RangeInclusive<usize>,
    l_max: usize,
    options: VerifyOptions,
) -> Result<Vec<ConsistencyReport>, SpectraError> {
    let ns: Vec<usize> = n_range.collect();
    let inner = VerifyOptions {
        strategy: Strategy::Sequential,
        ..options
    };
    options
        .strategy
        .map(&ns, |&n| verify_consistency_with(n, n / 2, l_max, inner))
        .into_iter()
        .collect()
}
