//! Exact linear algebra over `Rational` and `CRational`.
//!
//! Dense matrices are reduced with fraction-free (Bareiss) elimination, pivots
//! taken in column order. With integer input every intermediate entry stays
//! an integer, which keeps the rationals on their small fast path.
//! [`SparseEchelon`] is an incremental reducer for span membership and
//! independence tests on sparse vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{CRational, Rational};

/// Exact field operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + Zero + One + fmt::Debug + Send + Sync
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Div<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
}

impl Field for Rational {}

impl<'a> Div<&'a CRational> for &'a CRational {
    type Output = CRational;

    /// Panics on division by zero, like `Rational`.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a CRational) -> CRational {
        self * &rhs.recip().expect("division by zero")
    }
}

impl Field for CRational {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F>
where
    for<'a> &'a F: Add<&'a F, Output = F>
        + Sub<&'a F, Output = F>
        + Mul<&'a F, Output = F>
        + Div<&'a F, Output = F>
        + Neg<Output = F>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Fraction-free row echelon form. Returns the reduced copy and the pivot
    /// columns; the rank is the number of pivots.
    pub fn echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let piv = m.get(r, c).clone();
            for i in r + 1..m.rows {
                let lead = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = &(&(&piv * m.get(i, j)) - &(&lead * m.get(r, j))) / &prev;
                    m.set(i, j, v);
                }
                // Columns left of `c` in rows below `r` are already zero.
            }
            // Earlier pivot rows keep their scale; only the rows below change.
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the right nullspace. Each vector has a 1 at its free column
    /// and is then rescaled so that its first nonzero entry is 1.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (e, pivots) = self.echelon();
        let rank = pivots.len();
        // Back substitution to reduced form, in exact field arithmetic.
        let mut rref: Vec<Vec<F>> = (0..rank).map(|i| (0..e.cols).map(|j| e.get(i, j).clone()).collect()).collect();
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let inv = &F::one() / &rref[i][pc];
            for v in rref[i].iter_mut() {
                *v = &*v * &inv;
            }
            let (above, rest) = rref.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let f = row[pc].clone();
                if f.is_zero() {
                    continue;
                }
                for (v, p) in row[pc..].iter_mut().zip(&pivot_row[pc..]) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        let mut is_pivot = vec![false; e.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..e.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); e.cols];
            v[free] = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                if pc < free {
                    v[pc] = -&rref[i][free];
                }
            }
            normalize_leading(&mut v);
            out.push(v);
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Scales `v` so that its first nonzero entry is 1.
pub fn normalize_leading<F: Field>(v: &mut [F])
where
    for<'a> &'a F: Add<&'a F, Output = F>
        + Sub<&'a F, Output = F>
        + Mul<&'a F, Output = F>
        + Div<&'a F, Output = F>
        + Neg<Output = F>,
{
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if lead != F::one() {
            let inv = &F::one() / &lead;
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
    }
}

/// Incremental echelon basis of sparse vectors indexed by `K`.
///
/// Each stored row is monic at its pivot, which is its smallest key.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K, F> {
    rows: BTreeMap<K, BTreeMap<K, F>>,
}

impl<K, F> Default for SparseEchelon<K, F> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> SparseEchelon<K, F>
where
    for<'a> &'a F: Add<&'a F, Output = F>
        + Sub<&'a F, Output = F>
        + Mul<&'a F, Output = F>
        + Div<&'a F, Output = F>
        + Neg<Output = F>,
{
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: BTreeMap<K, F>) -> BTreeMap<K, F> {
        let mut v: BTreeMap<K, F> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let f = v[&key].clone();
                for (k, a) in row {
                    let cur = v.remove(k).unwrap_or_else(F::zero);
                    let nv = &cur - &(&f * a);
                    if !nv.is_zero() {
                        v.insert(k.clone(), nv);
                    }
                }
            }
            cursor = Some(key);
        }
        v
    }

    pub fn contains(&self, v: BTreeMap<K, F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `false` when it was already dependent.
    pub fn insert(&mut self, v: BTreeMap<K, F>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        let inv = &F::one() / &lead;
        let row: BTreeMap<K, F> = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows[0].len(), rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&[&[0, 1, 0], &[0, 0, 1]]).rank(), 2);
        assert_eq!(mat(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(mat(&[&[2, 1, 1], &[4, 3, 3], &[8, 7, 9]]).rank(), 3);
    }

    #[test]
    fn bareiss_keeps_integers() {
        let (e, _) = mat(&[&[2, 1, 1], &[4, 3, 3], &[8, 7, 9]]).echelon();
        for i in 0..3 {
            for j in 0..3 {
                assert!(e.get(i, j).is_integer());
            }
        }
        // Last pivot of a square Bareiss reduction is the determinant.
        assert_eq!(*e.get(2, 2), q(4));
    }

    #[test]
    fn nullspace_of_single_equation() {
        // 2a + 2c = 0 over (a, b, c)
        let ns = mat(&[&[2, 0, 2]]).nullspace();
        assert_eq!(ns, vec![vec![q(0), q(1), q(0)], vec![q(1), q(0), q(-1)]]);
    }

    #[test]
    fn sparse_echelon_membership() {
        let mut s: SparseEchelon<u32, Rational> = SparseEchelon::new();
        let v = |pairs: &[(u32, i64)]| pairs.iter().map(|&(k, x)| (k, q(x))).collect::<BTreeMap<_, _>>();
        assert!(s.insert(v(&[(0, 1), (1, 1)])));
        assert!(s.insert(v(&[(1, 1), (2, 1)])));
        assert!(s.contains(v(&[(0, 1), (2, -1)])));
        assert!(!s.contains(v(&[(2, 1)])));
        assert!(!s.insert(v(&[(0, 2), (1, 3), (2, 1)])));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn complex_field_works() {
        let i = CRational::i();
        let one = CRational::from(1);
        let m = Matrix::from_rows(2, vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12), cols in 2usize..=6) {
            let rows = 12 / cols;
            let m = Matrix::from_rows(cols, (0..rows).map(|i| (0..cols).map(|j| q(entries[i * cols + j])).collect()).collect());
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.len(), cols);
            let (e, _) = m.echelon();
            prop_assert!((0..rows).all(|i| (0..cols).all(|j| e.get(i, j).is_integer())));
            for v in &ns {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            // Rank agrees with the incremental reducer.
            let mut s = SparseEchelon::new();
            for i in 0..rows {
                s.insert((0..cols).map(|j| (j, m.get(i, j).clone())).collect());
            }
            prop_assert_eq!(s.rank(), m.rank());
        }
    }
}
