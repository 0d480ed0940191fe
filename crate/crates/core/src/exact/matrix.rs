//! Dense matrices over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ComplexRational, ExactError, Rational};
use crate::par::Strategy;

/// Row-major dense matrix with exact entries.
///
/// The arithmetic operators panic on shape mismatch, in the same way slice
/// indexing does; the shapes in this crate are fixed by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ComplexRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ComplexRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, ComplexRational::one())
    }

    pub fn scalar(n: usize, c: ComplexRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[ComplexRational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in entries.iter().enumerate() {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ComplexRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<ComplexRational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from `(row, col, value)` triples; later triples add
    /// onto earlier ones.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, ComplexRational)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, j, v) in triplets {
            m.data[i * cols + j] += &v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ComplexRational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ComplexRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ComplexRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn trace(&self) -> ComplexRational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(ComplexRational::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, k: &ComplexRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.scale(k)).collect(),
        }
    }

    /// `self − c·I`.
    pub fn shift(&self, c: &Rational) -> Self {
        assert!(self.is_square(), "shift of a non-square matrix");
        let mut m = self.clone();
        for i in 0..self.rows {
            let d = &mut m.data[i * self.cols + i];
            d.re = &d.re - c;
        }
        m
    }

    /// Kronecker product; the left factor indexes the slow (outer) block.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            m.data[(i * other.rows + p) * cols + j * other.cols + q] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// Product using the given execution strategy over output rows. Zero
    /// entries of either factor are skipped.
    pub fn mul_with(&self, rhs: &Self, strategy: Strategy) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let sparse_rhs: Vec<Vec<(usize, &ComplexRational)>> = (0..rhs.rows)
            .map(|k| {
                rhs.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let cols = rhs.cols;
        let rows = strategy.map_range(self.rows, |i| {
            let mut acc = vec![ComplexRational::zero(); cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rhs[k] {
                    acc[j] += &(a * b);
                }
            }
            acc
        });
        Self {
            rows: self.rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn mul_vec(&self, v: &[ComplexRational]) -> Vec<ComplexRational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(ComplexRational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Reduced row echelon form and its pivot columns, by Gauss–Jordan
    /// elimination over the field.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows: Vec<Vec<ComplexRational>> =
            (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip().expect("pivot is nonzero");
            if !inv.is_real() || !inv.re.is_one() {
                for x in rows[r][c..].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row: Vec<(usize, ComplexRational)> = rows[r]
                .iter()
                .enumerate()
                .skip(c)
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (j, v) in &pivot_row {
                    row[*j] = &row[*j] - &(&f * v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let m = Self::from_rows(rows).unwrap_or_else(|_| Self::zeros(self.rows, self.cols));
        (
            Self {
                rows: self.rows,
                cols: self.cols,
                data: m.data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank by fraction-free (Bareiss) elimination over the Gaussian
    /// integers, after clearing denominators row by row. Independent of the
    /// field elimination in [`ExactMatrix::rref`].
    pub fn fraction_free_rank(&self) -> usize {
        let mut a: Vec<Vec<GaussInt>> = (0..self.rows)
            .map(|i| GaussInt::clear_row(self.row(i)))
            .collect();
        let mut prev = GaussInt::one();
        let mut k = 0;
        for c in 0..self.cols {
            if k == self.rows {
                break;
            }
            let Some(p) = (k..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(k, p);
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = pivot_row[c].clone();
            for row in rest.iter_mut() {
                let lead = std::mem::replace(&mut row[c], GaussInt::zero());
                for j in c + 1..self.cols {
                    let t = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                    row[j] = t.exact_div(&prev);
                }
            }
            prev = pivot;
            k += 1;
        }
        k
    }

    /// Inverse by Gauss–Jordan on `[self | I]`.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                ComplexRational::one()
            } else {
                ComplexRational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.mul_with(rhs, Strategy::default())
    }
}

/// Rank and a basis of the right kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel: Vec<Vec<ComplexRational>>,
}

/// Rank and kernel basis from the reduced row echelon form. The basis has
/// one vector per free column, with a 1 in that column.
pub fn rank_and_kernel(m: &ExactMatrix) -> RankKernel {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![ComplexRational::zero(); m.cols];
            v[f] = ComplexRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            v
        })
        .collect();
    RankKernel {
        rank: pivots.len(),
        kernel,
    }
}

/// Spectral projectors `P_i = Π_{j≠i} (m − c_j·I) / (c_i − c_j)`.
///
/// Requires distinct `eigenvalues` and verifies `Π_i (m − c_i·I) = 0` before
/// returning, so a wrong predicted eigenvalue list is reported instead of
/// producing meaningless projectors.
pub fn lagrange_projectors(
    m: &ExactMatrix,
    eigenvalues: &[Rational],
) -> Result<Vec<ExactMatrix>, ExactError> {
    lagrange_projectors_with(m, eigenvalues, Strategy::default())
}

pub(crate) fn lagrange_projectors_with(
    m: &ExactMatrix,
    eigenvalues: &[Rational],
    strategy: Strategy,
) -> Result<Vec<ExactMatrix>, ExactError> {
    if !m.is_square() {
        return Err(ExactError::Shape("projectors of a non-square matrix".into()));
    }
    if eigenvalues.is_empty() {
        return Err(ExactError::Shape("empty eigenvalue list".into()));
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        if let Some(b) = eigenvalues[i + 1..].iter().find(|b| *b == a) {
            return Err(ExactError::RepeatedEigenvalue(a.to_string(), b.to_string()));
        }
    }
    let factors: Vec<ExactMatrix> = eigenvalues.iter().map(|c| m.shift(c)).collect();
    let numerators = strategy.map_range(eigenvalues.len(), |i| {
        let mut acc: Option<ExactMatrix> = None;
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                acc = Some(match acc {
                    None => f.clone(),
                    Some(a) => a.mul_with(f, Strategy::Sequential),
                });
            }
        }
        acc.unwrap_or_else(|| ExactMatrix::identity(m.rows))
    });
    if !numerators[0].mul_with(&factors[0], strategy).is_zero() {
        return Err(ExactError::AnnihilationFailure);
    }
    Ok(numerators
        .into_iter()
        .enumerate()
        .map(|(i, num)| {
            let denom: Rational = eigenvalues
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| &eigenvalues[i] - c)
                .product();
            num.scale_rational(&denom.recip().expect("eigenvalues are distinct"))
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        Self { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Scales a row by the lcm of its denominators.
    fn clear_row(row: &[ComplexRational]) -> Vec<GaussInt> {
        let l = row.iter().fold(BigInt::one(), |l, x| {
            l.lcm(&x.re.denom()).lcm(&x.im.denom())
        });
        row.iter()
            .map(|x| GaussInt {
                re: x.re.numer() * (&l / x.re.denom()),
                im: x.im.numer() * (&l / x.im.denom()),
            })
            .collect()
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn exact_div(&self, d: &Self) -> Self {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero(), "Bareiss division not exact");
        debug_assert!(n.is_positive());
        Self { re: re / &n, im: im / n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Strategy as Exec;
    use proptest::prelude::*;
    use proptest::strategy::Strategy;

    fn real(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ComplexRational::from_integer(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn q(a: i64) -> Rational {
        Rational::from_integer(a)
    }

    #[test]
    fn identity_has_full_rank() {
        let rk = rank_and_kernel(&ExactMatrix::identity(3));
        assert_eq!(rk.rank, 3);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = ExactMatrix::zeros(2, 5);
        let rk = rank_and_kernel(&m);
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel.len(), 5);
        assert_eq!(m.fraction_free_rank(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = real(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let rk = rank_and_kernel(&m);
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel.len(), 2);
        for v in &rk.kernel {
            assert!(m.mul_vec(v).iter().all(ComplexRational::is_zero));
        }
        assert_eq!(m.fraction_free_rank(), 2);
    }

    #[test]
    fn complex_rank() {
        // [[1, i], [i, -1]] has rank 1 over C
        let i = ComplexRational::i();
        let one = ComplexRational::one();
        let m = ExactMatrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i, -&one]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.fraction_free_rank(), 1);
    }

    #[test]
    fn diagonal_projectors() {
        let m = real(&[&[1, 0], &[0, 2]]);
        let ps = lagrange_projectors(&m, &[q(1), q(2)]).unwrap();
        assert_eq!(ps[0], real(&[&[1, 0], &[0, 0]]));
        assert_eq!(ps[1], real(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn identity_single_projector() {
        let ps = lagrange_projectors(&ExactMatrix::identity(3), &[q(1)]).unwrap();
        assert_eq!(ps, vec![ExactMatrix::identity(3)]);
    }

    #[test]
    fn wrong_eigenvalues_are_rejected() {
        let m = real(&[&[1, 0], &[0, 2]]);
        assert_eq!(
            lagrange_projectors(&m, &[q(1), q(3)]),
            Err(ExactError::AnnihilationFailure)
        );
        assert!(matches!(
            lagrange_projectors(&m, &[q(1), q(1)]),
            Err(ExactError::RepeatedEigenvalue(..))
        ));
        // a Jordan block is not diagonalizable: its minimal polynomial has a square
        let j = real(&[&[1, 1], &[0, 1]]);
        assert_eq!(lagrange_projectors(&j, &[q(1)]), Err(ExactError::AnnihilationFailure));
    }

    #[test]
    fn kron_shapes_and_values() {
        let a = real(&[&[1, 2], &[3, 4]]);
        let b = real(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(0, 1), ComplexRational::from_integer(1));
        assert_eq!(*k.get(2, 1), ComplexRational::from_integer(3));
        assert_eq!(*k.get(3, 2), ComplexRational::from_integer(4));
    }

    #[test]
    fn strategies_agree_on_products() {
        let a = ExactMatrix::from_fn(7, 5, |i, j| ComplexRational::new(q(i as i64 - j as i64), q((i * j) as i64 % 3)));
        let b = ExactMatrix::from_fn(5, 6, |i, j| ComplexRational::from_integer((i + 2 * j) as i64 % 4 - 1));
        assert_eq!(a.mul_with(&b, Exec::Sequential), a.mul_with(&b, Exec::Parallel));
    }

    fn small_entry() -> impl Strategy<Value = ComplexRational> {
        (-3i64..=3, -3i64..=3, 1i64..=3)
            .prop_map(|(a, b, d)| ComplexRational::new(Rational::ratio(a, d), Rational::ratio(b, d)))
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_entry(), r * c).prop_map(move |data| {
                let mut it = data.into_iter();
                ExactMatrix::from_fn(r, c, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_two_routes_agree(m in small_matrix(6)) {
            let rk = rank_and_kernel(&m);
            prop_assert_eq!(rk.rank + rk.kernel.len(), m.cols());
            prop_assert_eq!(rk.rank, m.fraction_free_rank());
            for v in &rk.kernel {
                prop_assert!(m.mul_vec(v).iter().all(ComplexRational::is_zero));
            }
        }

        #[test]
        fn low_rank_products_are_detected(a in small_matrix(5), b in small_matrix(5)) {
            // rank(A·B) ≤ min(rank A, rank B); compare both elimination routes on a
            // matrix that is usually rank deficient
            let b = ExactMatrix::from_fn(a.cols(), b.cols(), |i, j| {
                if i < b.rows() { b.get(i, j).clone() } else { ComplexRational::zero() }
            });
            let p = &a * &b;
            let r = p.rank();
            prop_assert_eq!(r, p.fraction_free_rank());
            prop_assert!(r <= a.rank().min(b.rank()));
        }

        #[test]
        fn projectors_resolve_the_identity(
            shape in proptest::collection::vec(0usize..3, 2..6),
            seed in proptest::collection::vec(-2i64..=2, 36),
        ) {
            // m = S·diag(c)·S⁻¹ with c drawn from {-1, 1/2, 2}
            let n = shape.len();
            let values = [q(-1), Rational::ratio(1, 2), q(2)];
            let s = ExactMatrix::from_fn(n, n, |i, j| {
                let x = seed[i * 6 + j];
                if i == j { ComplexRational::from_integer(1) } else if i < j { ComplexRational::from_integer(x) } else {
                    ComplexRational::new(q(0), q(x % 2))
                }
            });
            let Ok(s_inv) = s.inverse() else { return Ok(()); };
            let d = ExactMatrix::diagonal(&shape.iter().map(|&k| ComplexRational::real(values[k].clone())).collect::<Vec<_>>());
            let m = &(&s * &d) * &s_inv;
            let mut present: Vec<usize> = shape.clone();
            present.sort();
            present.dedup();
            let eig: Vec<Rational> = present.iter().map(|&k| values[k].clone()).collect();
            let ps = lagrange_projectors(&m, &eig).unwrap();
            let mut total = ExactMatrix::zeros(n, n);
            for (i, p) in ps.iter().enumerate() {
                prop_assert_eq!(&(p * p), p);
                prop_assert_eq!(&m * p, p.scale_rational(&eig[i]));
                let mult = shape.iter().filter(|&&k| k == present[i]).count();
                prop_assert_eq!(p.rank(), mult);
                for (j, p2) in ps.iter().enumerate() {
                    if i != j {
                        prop_assert!((p * p2).is_zero());
                    }
                }
                total = &total + p;
            }
            prop_assert!(total.is_identity());
        }
    }
}
