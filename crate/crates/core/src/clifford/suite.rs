//! The full oracle run: every property for every `(n, k)` up to the cap.

use num_bigint::BigInt;

use crate::exact::{binomial, ExactMatrix};
use crate::par::Strategy;
use crate::rep::{spinor_form_components, FormComponent, GroupId};

use super::projectors::{ekj_projectors_with, symbol_block_from};
use super::{gamma_matrices_with, so_action, y_matrix, CliffordError, CliffordRep, EkjProjector, OracleConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub property: &'static str,
    pub n: usize,
    pub k_form: Option<usize>,
    pub j: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub n_min: usize,
    pub n_cap: usize,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self, property: &str) -> usize {
        self.checks.iter().filter(|c| c.property == property).count()
    }
}

struct Level {
    k: usize,
    generators: Vec<ExactMatrix>,
    projectors: Vec<EkjProjector>,
    predicted: Vec<FormComponent>,
    /// `Y : Λᵏ ⊗ S → Λᵏ⁻¹ ⊗ S`, absent for `k = 0`.
    y: Option<ExactMatrix>,
}

struct Recorder<'a> {
    n: usize,
    out: &'a mut Vec<OracleCheck>,
}

impl Recorder<'_> {
    fn check(&mut self, property: &'static str, k: Option<usize>, j: Option<usize>, passed: bool, detail: String) {
        self.out.push(OracleCheck { property, n: self.n, k_form: k, j, passed, detail });
    }
}

/// `a · b` computed as `(bᵀ aᵀ)ᵀ`, which is cheap when `b` is sparse.
fn mul_sparse_right(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    (&b.transpose() * &a.transpose()).transpose()
}

fn projector(level: &Level, j: usize) -> Option<&ExactMatrix> {
    level.projectors.iter().find(|p| p.j == j).map(|p| &p.projector)
}

fn dim_of(level: &Level, j: usize) -> Option<usize> {
    level
        .predicted
        .iter()
        .find(|c| c.j == j)
        .map(|c| usize::try_from(c.dimension.clone()).expect("small"))
}

/// Runs the oracle for `n = 3..=config.n_cap`.
pub fn run_oracle_suite(config: &OracleConfig) -> Result<OracleReport, CliffordError> {
    run_oracle_range(3, config)
}

pub(crate) fn run_oracle_range(n_min: usize, config: &OracleConfig) -> Result<OracleReport, CliffordError> {
    let ns: Vec<usize> = (n_min..=config.n_cap).collect();
    let per_n = ns
        .iter()
        .map(|&n| check_dimension(n, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OracleReport {
        n_min,
        n_cap: config.n_cap,
        checks: per_n.into_iter().flatten().collect(),
    })
}

fn build_level(rep: &CliffordRep, k: usize, strategy: Strategy) -> Result<Level, CliffordError> {
    Ok(Level {
        k,
        generators: so_action(rep, k)?,
        projectors: ekj_projectors_with(rep, k, strategy)?,
        predicted: spinor_form_components(GroupId::new(rep.n)?, k)?,
        y: if k == 0 { None } else { Some(y_matrix(rep, k)?) },
    })
}

fn check_dimension(n: usize, config: &OracleConfig) -> Result<Vec<OracleCheck>, CliffordError> {
    let rep = gamma_matrices_with(n, config)?;
    let mut out = Vec::new();
    let mut r = Recorder { n, out: &mut out };

    let id = ExactMatrix::identity(rep.dim_s);
    let mut relations = true;
    for (a, ea) in rep.gammas.iter().enumerate() {
        for (b, eb) in rep.gammas.iter().enumerate() {
            let anti = &(ea * eb) + &(eb * ea);
            let want = if a == b { id.scale_rational(&(-2).into()) } else { ExactMatrix::zeros(rep.dim_s, rep.dim_s) };
            relations &= anti == want;
        }
    }
    r.check("clifford-relations", None, None, relations, "e_i e_j + e_j e_i = −2δ_ij".into());

    // Levels are independent; build them with the configured strategy and
    // keep the inner work sequential when running across levels.
    let ks: Vec<usize> = (0..=n).collect();
    let levels = config
        .strategy
        .map(&ks, |&k| build_level(&rep, k, Strategy::Sequential))
        .into_iter()
        .collect::<Result<Vec<Level>, _>>()?;

    for level in &levels {
        let k = level.k;
        check_brackets(&mut r, level);

        // projector ranks against the Weyl-dimension prediction
        let mut total = 0usize;
        for p in &level.projectors {
            let want = dim_of(level, p.j);
            total += p.rank;
            r.check(
                "projector-rank",
                Some(k),
                Some(p.j),
                want == Some(p.rank),
                format!("rank {} vs predicted {:?}", p.rank, want),
            );
        }
        let space = binomial(n as i64, k as i64) * rep.dim_s;
        r.check(
            "rank-sum",
            Some(k),
            None,
            BigInt::from(total) == space,
            format!("Σ rank = {total}, C(n,k)·dim S = {space}"),
        );
        let sum = level
            .projectors
            .iter()
            .fold(ExactMatrix::zeros(space_dim(level), space_dim(level)), |acc, p| &acc + &p.projector);
        r.check("completeness", Some(k), None, sum.is_identity(), "Σ_j P_{k,j} = I".into());

        let commute = level.generators.iter().all(|l| {
            level
                .projectors
                .iter()
                .all(|p| l * &p.projector == mul_sparse_right(&p.projector, l))
        });
        r.check("projector-equivariance", Some(k), None, commute, "[L_ab, P_{k,j}] = 0".into());

        if let Some(y) = &level.y {
            let below = &levels[k - 1];
            let commute = level
                .generators
                .iter()
                .zip(&below.generators)
                .all(|(lt, lb)| (&(lb * y) - &(y * lt)).is_zero());
            r.check("y-equivariance", Some(k), None, commute, "L_ab Y = Y L_ab".into());

            for p in &level.projectors {
                let image = y * &p.projector;
                // Y preserves j: the image lies in E^{k−1,j}, or vanishes if absent
                let stays = match projector(below, p.j) {
                    Some(q) => (q * &image) == image,
                    None => image.is_zero(),
                };
                r.check("y-ladder", Some(k), Some(p.j), stays, "P_{k−1,j} Y P_{k,j} = Y P_{k,j}".into());
                if p.j == k {
                    r.check("y-kills-top", Some(k), Some(p.j), image.is_zero(), "Y|E^{j,j} = 0".into());
                }
                // isomorphism E^{k,j} → E^{k−1,j} for j < k−1 < ⌊n/2⌋
                if p.j + 1 < k && k - 1 < n / 2 {
                    let rank = image.rank();
                    let want = dim_of(below, p.j);
                    r.check(
                        "y-isomorphism",
                        Some(k),
                        Some(p.j),
                        want == Some(rank),
                        format!("rank {rank} vs dim E^{{{},{}}} = {want:?}", k - 1, p.j),
                    );
                }
            }
        }
    }

    // symbols: P_{j+1,j+1} ε P_{j,j} ≠ 0, and zero from E^{j,j′} when j′ < j
    for j in (0..n).filter(|j| 2 * (j + 1) <= n) {
        let (lower, upper) = (&levels[j], &levels[j + 1]);
        let blocks = symbol_block_from(&rep, j, &upper.projectors, j + 1, &lower.projectors, j)?;
        let hits = blocks.iter().filter(|b| !b.is_zero()).count();
        r.check("symbol-nontrivial", Some(j), Some(j), hits > 0, format!("{hits} of {n} directions nonzero"));
        for source in 0..j {
            let blocks = symbol_block_from(&rep, j, &upper.projectors, j + 1, &lower.projectors, source)?;
            r.check(
                "symbol-negative-control",
                Some(j),
                Some(source),
                blocks.iter().all(ExactMatrix::is_zero),
                format!("P_{{{},{}}} ε P_{{{j},{source}}} = 0", j + 1, j + 1),
            );
        }
    }
    Ok(out)
}

fn space_dim(level: &Level) -> usize {
    level.generators[0].rows()
}

fn check_brackets(r: &mut Recorder<'_>, level: &Level) {
    let n = r.n;
    let idx = |a: usize, b: usize| -> (usize, i64) {
        let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
        // position of (lo, hi) in lexicographic pair order
        (lo * (2 * n - lo - 1) / 2 + (hi - lo - 1), s)
    };
    let l = &level.generators;
    let size = space_dim(level);
    let gen = |a: usize, b: usize| -> ExactMatrix {
        let (i, s) = idx(a, b);
        if s == 1 { l[i].clone() } else { l[i].scale_rational(&(-1).into()) }
    };
    let mut ok = true;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    for (x, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[x + 1..] {
            // [L_ab, L_cd] = δ_ac L_bd + δ_bd L_ac − δ_bc L_ad − δ_ad L_bc
            let mut want = ExactMatrix::zeros(size, size);
            if a == c {
                want = &want + &gen(b, d);
            }
            if b == d {
                want = &want + &gen(a, c);
            }
            if b == c {
                want = &want - &gen(a, d);
            }
            if a == d {
                want = &want - &gen(b, c);
            }
            ok &= gen(a, b).commutator(&gen(c, d)) == want;
        }
    }
    r.check("so-brackets", Some(level.k), None, ok, format!("{} generators", pairs.len()));
}
