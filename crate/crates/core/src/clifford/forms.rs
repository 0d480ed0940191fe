use std::collections::BTreeMap;

use crate::exact::{ComplexRational, ExactMatrix, Rational};

use super::{CliffordError, CliffordRep};

/// `Λᵏ ⊗ S` with basis `e_I ⊗ s_t`, subsets `I` in lexicographic order and
/// the spinor index running fastest: index `= rank(I)·dim_s + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpinorSpace {
    pub n: usize,
    pub k_form: usize,
    pub dim_s: usize,
    subsets: Vec<Vec<usize>>,
    lookup: BTreeMap<Vec<usize>, usize>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl FormSpinorSpace {
    pub fn new(rep: &CliffordRep, k_form: usize) -> Result<Self, CliffordError> {
        if k_form > rep.n {
            return Err(CliffordError::OutOfRange(format!(
                "form degree {k_form} exceeds n = {}",
                rep.n
            )));
        }
        let subsets = combinations(rep.n, k_form);
        let lookup = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Self { n: rep.n, k_form, dim_s: rep.dim_s, subsets, lookup })
    }

    pub fn form_dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn dimension(&self) -> usize {
        self.form_dim() * self.dim_s
    }

    /// Zero-based sorted indices of the `r`-th basis form.
    pub fn subset(&self, r: usize) -> &[usize] {
        &self.subsets[r]
    }

    pub fn subset_rank(&self, subset: &[usize]) -> Option<usize> {
        self.lookup.get(subset).copied()
    }

    pub fn index(&self, subset_rank: usize, spinor: usize) -> usize {
        subset_rank * self.dim_s + spinor
    }
}

/// Sorts `seq` and returns the permutation sign, or `None` on a repeat.
fn wedge_normalize(mut seq: Vec<usize>) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in 0..seq.len() - 1 - i {
            if seq[j] == seq[j + 1] {
                return None;
            }
            if seq[j] > seq[j + 1] {
                seq.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, seq))
}

fn form_operator(
    from: &FormSpinorSpace,
    to: &FormSpinorSpace,
    image: impl Fn(&[usize]) -> Vec<(i64, Vec<usize>)>,
) -> ExactMatrix {
    let mut triplets = Vec::new();
    for r in 0..from.form_dim() {
        for (sign, target) in image(from.subset(r)) {
            let row = to.subset_rank(&target).expect("image lies in the target space");
            triplets.push((row, r, ComplexRational::from_integer(sign)));
        }
    }
    ExactMatrix::from_triplets(to.form_dim(), from.form_dim(), triplets)
}

/// Rotation `e_a ↦ e_b, e_b ↦ −e_a` acting on `Λᵏ` as a derivation.
fn rotation_on_forms(space: &FormSpinorSpace, a: usize, b: usize) -> ExactMatrix {
    form_operator(space, space, |subset| {
        let mut out = Vec::new();
        for (t, &x) in subset.iter().enumerate() {
            let (y, s) = if x == a { (b, 1) } else if x == b { (a, -1) } else { continue };
            let mut seq = subset.to_vec();
            seq[t] = y;
            if let Some((sign, sorted)) = wedge_normalize(seq) {
                out.push((s * sign, sorted));
            }
        }
        out
    })
}

/// Generators `L_ab`, `a < b` in lexicographic order, on `Λᵏ ⊗ S`:
/// the rotation on forms tensored with `I`, plus `I ⊗ ½ e_a e_b`.
pub fn so_action(rep: &CliffordRep, k_form: usize) -> Result<Vec<ExactMatrix>, CliffordError> {
    let space = FormSpinorSpace::new(rep, k_form)?;
    let id_forms = ExactMatrix::identity(space.form_dim());
    let id_s = ExactMatrix::identity(rep.dim_s);
    let half = Rational::ratio(1, 2);
    let mut out = Vec::new();
    for a in 0..rep.n {
        for b in a + 1..rep.n {
            let spin = (&rep.gammas[a] * &rep.gammas[b]).scale_rational(&half);
            let form = rotation_on_forms(&space, a, b);
            out.push(&form.kron(&id_s) + &id_forms.kron(&spin));
        }
    }
    Ok(out)
}

/// `ε(e_i) ⊗ I : Λᵏ ⊗ S → Λᵏ⁺¹ ⊗ S`, with `e_i ∧ e_I` reordered to sorted form.
pub fn exterior_matrix(rep: &CliffordRep, k_form: usize, i: usize) -> Result<ExactMatrix, CliffordError> {
    if k_form >= rep.n || i >= rep.n {
        return Err(CliffordError::OutOfRange(format!(
            "exterior multiplication by e_{} on {k_form}-forms, n = {}",
            i + 1,
            rep.n
        )));
    }
    let from = FormSpinorSpace::new(rep, k_form)?;
    let to = FormSpinorSpace::new(rep, k_form + 1)?;
    let eps = form_operator(&from, &to, |subset| {
        let mut seq = vec![i];
        seq.extend_from_slice(subset);
        wedge_normalize(seq).into_iter().collect()
    });
    Ok(eps.kron(&ExactMatrix::identity(rep.dim_s)))
}

/// `Y = −Σ_i ι(e_i) ⊗ e_i : Λᵏ ⊗ S → Λᵏ⁻¹ ⊗ S`, where `ι(e_i)` removes
/// `e_i` from position `t` with sign `(−1)^t`.
pub fn y_matrix(rep: &CliffordRep, k_form: usize) -> Result<ExactMatrix, CliffordError> {
    if k_form == 0 || k_form > rep.n {
        return Err(CliffordError::OutOfRange(format!(
            "Y needs 1 ≤ k ≤ n, got k = {k_form}, n = {}",
            rep.n
        )));
    }
    let from = FormSpinorSpace::new(rep, k_form)?;
    let to = FormSpinorSpace::new(rep, k_form - 1)?;
    let mut y = ExactMatrix::zeros(to.dimension(), from.dimension());
    for (i, e) in rep.gammas.iter().enumerate() {
        let iota = form_operator(&from, &to, |subset| {
            subset
                .iter()
                .position(|&x| x == i)
                .map(|t| {
                    let mut rest = subset.to_vec();
                    rest.remove(t);
                    (if t % 2 == 0 { 1 } else { -1 }, rest)
                })
                .into_iter()
                .collect()
        });
        y = &y - &iota.kron(e);
    }
    Ok(y)
}
