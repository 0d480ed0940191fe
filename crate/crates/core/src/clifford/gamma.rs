use crate::exact::{ComplexRational, ExactMatrix};

use super::{CliffordError, OracleConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordRep {
    pub n: usize,
    pub dim_s: usize,
    pub gammas: Vec<ExactMatrix>,
    /// `σ3 ⊗ … ⊗ σ3`, diagonal, for even `n`.
    pub chirality: Option<ExactMatrix>,
}

fn c(re: i64, im: i64) -> ComplexRational {
    ComplexRational::new(re.into(), im.into())
}

fn pauli(which: u8) -> ExactMatrix {
    let rows = match which {
        1 => vec![vec![c(0, 0), c(1, 0)], vec![c(1, 0), c(0, 0)]],
        2 => vec![vec![c(0, 0), c(0, -1)], vec![c(0, 1), c(0, 0)]],
        _ => vec![vec![c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0)]],
    };
    ExactMatrix::from_rows(rows).expect("2x2")
}

fn kron_all(factors: &[ExactMatrix]) -> ExactMatrix {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| acc.kron(f))
}

pub fn gamma_matrices(n: usize) -> Result<CliffordRep, CliffordError> {
    gamma_matrices_with(n, &OracleConfig::default())
}

/// Pauli ladder on `(ℂ²)^{⊗k}`, `k = ⌊n/2⌋`: `γ_{2a−1}, γ_{2a}` carry `σ1, σ2`
/// in slot `a` behind a string of `σ3`; for odd `n` the last generator is
/// `σ3 ⊗ … ⊗ σ3`.
pub fn gamma_matrices_with(n: usize, config: &OracleConfig) -> Result<CliffordRep, CliffordError> {
    if n < 2 {
        return Err(CliffordError::OutOfRange(format!("n = {n} must be at least 2")));
    }
    if n > config.n_cap {
        return Err(CliffordError::CapExceeded { n, cap: config.n_cap });
    }
    let k = n / 2;
    let id = ExactMatrix::identity(2);
    let slot = |a: usize, p: u8| {
        let factors: Vec<ExactMatrix> = (0..k)
            .map(|s| match s.cmp(&a) {
                std::cmp::Ordering::Less => pauli(3),
                std::cmp::Ordering::Equal => pauli(p),
                std::cmp::Ordering::Greater => id.clone(),
            })
            .collect();
        kron_all(&factors)
    };
    let all_sigma3 = || kron_all(&vec![pauli(3); k]);
    let mut hermitian = Vec::with_capacity(n);
    for a in 0..k {
        hermitian.push(slot(a, 1));
        hermitian.push(slot(a, 2));
    }
    if n % 2 == 1 {
        hermitian.push(all_sigma3());
    }
    let i = ComplexRational::i();
    Ok(CliffordRep {
        n,
        dim_s: 1 << k,
        gammas: hermitian.iter().map(|g| g.scale(&i)).collect(),
        chirality: n.is_multiple_of(2).then(all_sigma3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        for n in 2..=6 {
            let rep = gamma_matrices(n).unwrap();
            assert_eq!(rep.gammas.len(), n);
            let id = ExactMatrix::identity(rep.dim_s);
            for (a, ea) in rep.gammas.iter().enumerate() {
                assert!((ea * &ea.adjoint()).is_identity());
                for (b, eb) in rep.gammas.iter().enumerate() {
                    let anti = &(ea * eb) + &(eb * ea);
                    let expected = if a == b { id.scale(&c(-2, 0)) } else { ExactMatrix::zeros(rep.dim_s, rep.dim_s) };
                    assert_eq!(anti, expected, "n={n} a={a} b={b}");
                }
                if let Some(ch) = &rep.chirality {
                    assert!((&(ch * ea) + &(ea * ch)).is_zero());
                }
            }
            if let Some(ch) = &rep.chirality {
                assert!((ch * ch).is_identity());
                assert!(ch.trace().is_zero());
                assert_eq!(ch.nnz(), rep.dim_s);
            }
        }
    }

    #[test]
    fn odd_volume_element_is_real_scalar() {
        let rep = gamma_matrices(3).unwrap();
        let vol = &(&rep.gammas[0] * &rep.gammas[1]) * &rep.gammas[2];
        let s = vol.get(0, 0).clone();
        assert!(s.is_real() && s.norm_sqr().is_one());
        assert_eq!(vol, ExactMatrix::scalar(2, s));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(gamma_matrices(7), Err(CliffordError::CapExceeded { n: 7, cap: 6 }));
        let big = OracleConfig { n_cap: 8, ..Default::default() };
        assert_eq!(gamma_matrices_with(8, &big).unwrap().dim_s, 16);
    }
}
