//! Homogeneous polynomial kernels of `L = sum_j del_z(j)^2`.
//!
//! On `z^alpha zbar^beta` the operator only lowers `beta`, so the condition
//! `L P = 0` splits into independent systems, one per `alpha`. For fixed
//! `alpha` with `m = k - |alpha|` the unknowns are the coefficients
//! `a_beta`, `|beta| = m`, and there is one equation per `gamma`,
//! `|gamma| = m - 2`:
//!
//! ```text
//! sum_j (gamma_j + 2)(gamma_j + 1) a_{gamma + 2 e_j} = 0
//! ```
//!
//! The system depends on `m` and `n` only, so each block is solved once and
//! shared by every `alpha` of that z-degree.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cayley::ComplexOctonion;
use crate::diffops::{apply_cr, ultrahyperbolic, CrOperator, DiffError, OCT_VARS};
use crate::exec::Execution;
use crate::linalg::{Matrix, SparseEchelon};
use crate::poly::{
    binomial, dim_homogeneous, homogeneous_basis, multi_indices, CPolynomial, Monomial, OPolynomial, PolyError,
};
use crate::scalar::{CRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Diff(#[from] DiffError),
    #[error("constraint block n={n}, m={m} has rank {rank} < {rows} rows")]
    RankDeficient { n: usize, m: u32, rank: usize, rows: usize },
    #[error("expected degree {expected}, found {found:?}")]
    Degree { expected: u32, found: Option<u32> },
    #[error("component {component} is not annihilated by L")]
    NotInKernel { component: usize },
    #[error("{given} coefficients for a basis of {available} polynomials")]
    TooManyCoefficients { given: usize, available: usize },
    #[error("needs k >= 2, got {0}")]
    DegreeTooSmall(u32),
}

/// `dim H_k = C(2n+k-1, 2n-1) - C(2n+k-3, 2n-1)`, with `1` and `2n` for
/// `k = 0, 1`.
pub fn dim_formula(n: usize, k: u32) -> u128 {
    match k {
        0 => 1,
        1 => 2 * n as u128,
        _ => dim_homogeneous(n, k as usize) - dim_homogeneous(n, k as usize - 2),
    }
}

/// The exact system for one z-degree block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintBlock {
    pub n: usize,
    pub m: u32,
    /// `gamma` with `|gamma| = m - 2`.
    pub rows: Vec<Vec<u32>>,
    /// `beta` with `|beta| = m`.
    pub cols: Vec<Vec<u32>>,
    /// Sparse rows: `(column, value)` sorted by column.
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl ConstraintBlock {
    pub fn to_matrix(&self) -> Matrix<Rational> {
        let mut m = Matrix::zeros(self.rows.len(), self.cols.len());
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, v) in row {
                m.set(i, j, Rational::from_integer(v));
            }
        }
        m
    }

    /// Exact rank by sparse elimination.
    pub fn rank(&self) -> usize {
        let mut e: SparseEchelon<usize, Rational> = SparseEchelon::new();
        for row in &self.entries {
            e.insert(row.iter().map(|&(j, v)| (j, Rational::from_integer(v))).collect());
        }
        e.rank()
    }
}

/// Builds the block for z-bar degree `m`. For `m < 2` there are no rows.
pub fn build_block(n: usize, m: u32) -> Result<ConstraintBlock, KernelError> {
    if n == 0 {
        return Err(PolyError::NoVariables.into());
    }
    let cols = multi_indices(n, m);
    let rows = if m >= 2 { multi_indices(n, m - 2) } else { Vec::new() };
    let index: BTreeMap<&[u32], usize> = cols.iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();
    let entries = rows
        .iter()
        .map(|gamma| {
            let mut row: Vec<(usize, i64)> = (0..n)
                .map(|j| {
                    let mut beta = gamma.clone();
                    beta[j] += 2;
                    let g = gamma[j] as i64;
                    (index[beta.as_slice()], (g + 2) * (g + 1))
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    Ok(ConstraintBlock { n, m, rows, cols, entries })
}

/// Nullspace of a block, each vector scaled to leading entry 1. Fails if the
/// block does not have full row rank.
pub fn nullspace_exact(block: &ConstraintBlock) -> Result<Vec<Vec<Rational>>, KernelError> {
    let ncols = block.cols.len();
    if block.rows.is_empty() {
        return Ok((0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect());
    }
    let matrix = block.to_matrix();
    let ns = matrix.nullspace();
    let rank = ncols - ns.len();
    if rank < block.rows.len() {
        return Err(KernelError::RankDeficient { n: block.n, m: block.m, rank, rows: block.rows.len() });
    }
    Ok(ns)
}

/// A basis of `H_k(C^n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelBasis {
    pub n: usize,
    pub k: u32,
    pub polynomials: Vec<CPolynomial>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn echelon(&self) -> SparseEchelon<Monomial, CRational> {
        let mut e = SparseEchelon::new();
        for p in &self.polynomials {
            e.insert(as_vector(p));
        }
        e
    }

    /// Exact linear independence of the stored polynomials.
    pub fn is_independent(&self) -> bool {
        self.echelon().rank() == self.len()
    }
}

/// Coefficient vector of a polynomial keyed by monomial.
pub fn as_vector(p: &CPolynomial) -> BTreeMap<Monomial, CRational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub fn kernel_basis(n: usize, k: u32) -> Result<KernelBasis, KernelError> {
    kernel_basis_with(n, k, Execution::available())
}

/// Assembles the kernel from the memoized per-`m` nullspaces. Output order is
/// fixed: z-degree descending, `alpha` in canonical order, then nullspace
/// order.
pub fn kernel_basis_with(n: usize, k: u32, exec: Execution) -> Result<KernelBasis, KernelError> {
    if n == 0 {
        return Err(PolyError::NoVariables.into());
    }
    type Solved = (Vec<Vec<u32>>, Vec<Vec<Rational>>);
    let blocks: Vec<Result<Solved, KernelError>> = exec.map_range(k as usize + 1, |m| {
        let block = build_block(n, m as u32)?;
        let ns = nullspace_exact(&block)?;
        Ok((block.cols, ns))
    });
    let blocks = blocks.into_iter().collect::<Result<Vec<_>, _>>()?;
    let alphas: Vec<Vec<u32>> = (0..=k).rev().flat_map(|a| multi_indices(n, a)).collect();
    let per_alpha: Vec<Vec<CPolynomial>> = exec.map_slice(&alphas, |alpha| {
        let m = (k - alpha.iter().sum::<u32>()) as usize;
        let (cols, ns) = &blocks[m];
        ns.iter()
            .map(|v| {
                CPolynomial::from_terms(
                    n,
                    cols.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(beta, c)| {
                        (Monomial::new(alpha, beta).expect("equal lengths"), CRational::real(c.clone()))
                    }),
                )
            })
            .collect()
    });
    Ok(KernelBasis { n, k, polynomials: per_alpha.into_iter().flatten().collect() })
}

/// Sum of block nullities without building polynomials.
pub fn kernel_dimension(n: usize, k: u32) -> Result<u128, KernelError> {
    let mut total = 0u128;
    for m in 0..=k {
        let block = build_block(n, m)?;
        let rank = block.rank();
        if rank < block.rows.len() {
            return Err(KernelError::RankDeficient { n, m, rank, rows: block.rows.len() });
        }
        let alphas = binomial((n as u64) + (k - m) as u64 - 1, n as u64 - 1);
        total += alphas * (block.cols.len() - rank) as u128;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurjectivityReport {
    pub rank: u128,
    pub expected: u128,
    pub surjective: bool,
}

/// Checks that `L: P_k -> P_{k-2}` is onto: the total block rank equals
/// `dim P_{k-2}`.
pub fn verify_surjectivity(n: usize, k: u32) -> Result<SurjectivityReport, KernelError> {
    if k < 2 {
        return Err(KernelError::DegreeTooSmall(k));
    }
    let mut rank = 0u128;
    for m in 2..=k {
        let r = build_block(n, m)?.rank() as u128;
        rank += binomial((n as u64) + (k - m) as u64 - 1, n as u64 - 1) * r;
    }
    let expected = dim_homogeneous(n, k as usize - 2);
    Ok(SurjectivityReport { rank, expected, surjective: rank == expected })
}

/// Matrix of `L: P_k -> P_{k-2}` obtained by applying the operator to every
/// monomial, with no block structure assumed.
pub fn full_operator_matrix(n: usize, k: u32) -> Result<Matrix<Rational>, KernelError> {
    let domain = homogeneous_basis(n, k)?;
    let codomain = if k >= 2 { homogeneous_basis(n, k - 2)? } else { Vec::new() };
    let index: BTreeMap<&Monomial, usize> = codomain.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = Matrix::zeros(codomain.len(), domain.len());
    for (j, mono) in domain.iter().enumerate() {
        let image = ultrahyperbolic(&CPolynomial::from_terms(n, [(mono.clone(), CRational::one())]));
        for (m, c) in image.terms() {
            mat.set(index[m], j, c.re.clone());
        }
    }
    Ok(mat)
}

/// Span membership in the kernel basis.
pub fn span_contains(basis: &KernelBasis, p: &CPolynomial) -> Result<bool, KernelError> {
    if p.n() != basis.n {
        return Err(PolyError::VariableCount { left: basis.n, right: p.n() }.into());
    }
    if !p.is_zero() && !p.is_homogeneous_of(basis.k) {
        return Err(KernelError::Degree { expected: basis.k, found: p.homogeneous_degree() });
    }
    Ok(basis.echelon().contains(as_vector(p)))
}

/// `Q(z) = sum_j z_j^2`.
pub fn quadric(n: usize) -> Result<CPolynomial, PolyError> {
    let mut q = CPolynomial::zero(n);
    for j in 1..=n {
        q = q.try_add(&CPolynomial::z(n, j)?.pow(2))?;
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FischerReport {
    pub n: usize,
    pub k: u32,
    /// `dim H_k ∩ Q P_{k-2}` from the nullspace of `r -> L(Q r)`.
    pub dim: usize,
    /// The same dimension from `dim H_k + dim P_{k-2} - rank(H_k ∪ Q P_{k-2})`.
    pub dim_by_union: usize,
    pub witnesses: Vec<CPolynomial>,
}

/// Intersection of the kernel with the multiples of `Q`.
pub fn fischer_intersection(n: usize, k: u32) -> Result<FischerReport, KernelError> {
    if k < 2 {
        return Err(KernelError::DegreeTooSmall(k));
    }
    let q = quadric(n)?;
    let lower = homogeneous_basis(n, k - 2)?;
    let multiples: Vec<CPolynomial> = lower
        .iter()
        .map(|m| q.try_mul(&CPolynomial::from_terms(n, [(m.clone(), CRational::one())])))
        .collect::<Result<_, _>>()?;
    // Columns: L(Q r) for each monomial r, expressed in the monomials of P_{k-2}.
    let index: BTreeMap<&Monomial, usize> = lower.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat: Matrix<CRational> = Matrix::zeros(lower.len(), lower.len());
    for (j, qm) in multiples.iter().enumerate() {
        for (m, c) in ultrahyperbolic(qm).terms() {
            mat.set(index[m], j, c.clone());
        }
    }
    let witnesses: Vec<CPolynomial> = mat
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut w = CPolynomial::zero(n);
            for (c, qm) in v.iter().zip(&multiples) {
                if !c.is_zero() {
                    w = &w + &qm.scale(c);
                }
            }
            w
        })
        .collect();

    let basis = kernel_basis(n, k)?;
    let mut union = basis.echelon();
    for qm in &multiples {
        union.insert(as_vector(qm));
    }
    let dim_by_union = basis.len() + multiples.len() - union.rank();
    Ok(FischerReport { n, k, dim: witnesses.len(), dim_by_union, witnesses })
}

/// `Q_k = Dbar P_{k+1}` for an octonion-valued `P` whose components all lie
/// in the kernel of `L`.
pub fn monogenic_from_kernel(p: &OPolynomial) -> Result<OPolynomial, KernelError> {
    if p.n() != OCT_VARS {
        return Err(DiffError::NotOctonionic(p.n()).into());
    }
    for (j, comp) in p.components().iter().enumerate() {
        if !ultrahyperbolic(comp).is_zero() {
            return Err(KernelError::NotInKernel { component: j });
        }
    }
    Ok(apply_cr(CrOperator::Dbar, p)?)
}

/// `sum_j a_j P_j`; missing coefficients count as zero.
pub fn octonionify(basis: &KernelBasis, coeffs: &[ComplexOctonion]) -> Result<OPolynomial, KernelError> {
    if coeffs.len() > basis.len() {
        return Err(KernelError::TooManyCoefficients { given: coeffs.len(), available: basis.len() });
    }
    let mut out = OPolynomial::zero(basis.n);
    for (p, a) in basis.polynomials.iter().zip(coeffs) {
        if !a.is_zero() {
            out.add_assign_ref(&p.with_coeff(a));
        }
    }
    Ok(out)
}

/// Hand-derived bases for small cases, in the text form read by
/// [`CPolynomial::parse`]. Each entry is `(n, k, polynomials)`.
pub const REFERENCE_BASES: &[(usize, u32, &[&str])] = &[
    (1, 2, &["z^2", "z zb"]),
    (1, 3, &["z^3", "z^2 zb"]),
    (1, 4, &["z^4", "z^3 zb"]),
    (2, 2, &["z1^2", "z2^2", "z1 zb1", "z1 zb2", "z2 zb1", "z2 zb2", "zb1 zb2", "z1 z2", "zb1^2 - zb2^2"]),
    (
        2,
        3,
        &[
            "z1^3",
            "z2^3",
            "z1^2 z2",
            "z1 z2^2",
            "z1^2 zb1",
            "z1 z2 zb1",
            "z2^2 zb1",
            "z1^2 zb2",
            "z1 z2 zb2",
            "z2^2 zb2",
            "z1 zb1 zb2",
            "z2 zb1 zb2",
            "zb1^3 - 3 zb1 zb2^2",
            "3 zb1^2 zb2 - zb2^3",
            "z1 zb1^2 - z1 zb2^2",
            "z2 zb1^2 - z2 zb2^2",
        ],
    ),
    (
        2,
        4,
        &[
            "z1^4",
            "z1^3 z2",
            "z1^2 z2^2",
            "z1 z2^3",
            "z2^4",
            "z1^3 zb1",
            "z1^2 z2 zb1",
            "z1 z2^2 zb1",
            "z2^3 zb1",
            "z1^3 zb2",
            "z1^2 z2 zb2",
            "z1 z2^2 zb2",
            "z2^3 zb2",
            "z1^2 zb1 zb2",
            "z1 z2 zb1 zb2",
            "z2^2 zb1 zb2",
            "zb1^4 - 6 zb1^2 zb2^2 + zb2^4",
            "zb1^3 zb2 - zb1 zb2^3",
            "z1 zb1^3 - 3 z1 zb1 zb2^2",
            "3 z1 zb1^2 zb2 - z1 zb2^3",
            "z2 zb1^3 - 3 z2 zb1 zb2^2",
            "3 z2 zb1^2 zb2 - z2 zb2^3",
            "z1^2 zb1^2 - z1^2 zb2^2",
            "z2^2 zb1^2 - z2^2 zb2^2",
            "z1 z2 zb1^2 - z1 z2 zb2^2",
        ],
    ),
];

/// Parsed form of one [`REFERENCE_BASES`] entry.
pub fn reference_basis(n: usize, k: u32) -> Option<Vec<CPolynomial>> {
    REFERENCE_BASES.iter().find(|(rn, rk, _)| *rn == n && *rk == k).map(|(_, _, texts)| {
        texts.iter().map(|t| CPolynomial::parse(n, t).expect("reference bases are well formed")).collect()
    })
}

/// One row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub n: usize,
    pub k: u32,
    pub computed: u128,
    pub formula: u128,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Dimension table for `k = 0..=kmax`, counting explicit basis polynomials
/// and checking each is annihilated by `L`.
pub fn dimension_table(n: usize, kmax: u32, exec: Execution) -> Result<Vec<DimRow>, KernelError> {
    (0..=kmax)
        .map(|k| {
            let basis = kernel_basis_with(n, k, exec)?;
            let all_null = exec.map_slice(&basis.polynomials, |p| ultrahyperbolic(p).is_zero()).into_iter().all(|b| b);
            let computed = basis.len() as u128;
            let formula = dim_formula(n, k);
            Ok(DimRow { n, k, computed, formula, matched: all_null && computed == formula })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zb(n: usize, j: usize) -> CPolynomial {
        CPolynomial::zbar(n, j).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(dim_formula(8, 1), 16);
        assert_eq!(dim_formula(8, 2), 135);
        assert_eq!(dim_formula(8, 3), 800);
        assert_eq!(dim_formula(8, 4), 3740);
        assert_eq!(dim_formula(1, 4), 2);
        assert_eq!(dim_formula(5, 0), 1);
    }

    #[test]
    fn block_shapes() {
        let b = build_block(1, 2).unwrap();
        assert_eq!(b.rows, vec![vec![0]]);
        assert_eq!(b.cols, vec![vec![2]]);
        assert_eq!(b.entries, vec![vec![(0, 2)]]);
        assert!(nullspace_exact(&b).unwrap().is_empty());

        let b = build_block(2, 2).unwrap();
        assert_eq!(b.cols, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(b.entries, vec![vec![(0, 2), (2, 2)]]);
        let ns = nullspace_exact(&b).unwrap();
        let q = |x: i64| Rational::from_integer(x);
        assert_eq!(ns, vec![vec![q(0), q(1), q(0)], vec![q(1), q(0), q(-1)]]);

        for n in 1..=4 {
            for m in 0..=5 {
                let b = build_block(n, m).unwrap();
                assert_eq!(b.cols.len() as u128, binomial((m as usize + n - 1) as u64, n as u64 - 1));
                let rows = if m >= 2 { binomial((m as usize + n - 3) as u64, n as u64 - 1) } else { 0 };
                assert_eq!(b.rows.len() as u128, rows);
                assert!(b.entries.iter().all(|r| r.len() <= n && r.iter().all(|&(_, v)| v > 0)));
            }
        }
    }

    #[test]
    fn low_degree_blocks_are_free() {
        for m in 0..2 {
            let b = build_block(1, m).unwrap();
            assert_eq!(nullspace_exact(&b).unwrap().len(), 1);
        }
    }

    #[test]
    fn small_kernels() {
        let h = kernel_basis(1, 2).unwrap();
        assert_eq!(h.len(), 2);
        let z = CPolynomial::z(1, 1).unwrap();
        assert!(span_contains(&h, &z.pow(2)).unwrap());
        assert!(span_contains(&h, &z.try_mul(&zb(1, 1)).unwrap()).unwrap());
        assert!(!span_contains(&h, &zb(1, 1).pow(2)).unwrap());
        assert!(span_contains(&h, &z.pow(3)).is_err());

        let h = kernel_basis(2, 3).unwrap();
        assert_eq!(h.len(), 16);
        let p = CPolynomial::parse(2, "zb1^3 - 3 zb1 zb2^2").unwrap();
        assert!(span_contains(&h, &p).unwrap());
        let p = CPolynomial::parse(2, "3 zb1^2 zb2 - zb2^3").unwrap();
        assert!(span_contains(&h, &p).unwrap());
    }

    #[test]
    fn kernel_matches_formula_and_is_null() {
        for n in 1..=3 {
            for k in 0..=5 {
                let h = kernel_basis(n, k).unwrap();
                assert_eq!(h.len() as u128, dim_formula(n, k), "n={n} k={k}");
                assert!(h.polynomials.iter().all(|p| ultrahyperbolic(p).is_zero() && p.is_homogeneous_of(k)));
                assert_eq!(kernel_dimension(n, k).unwrap(), dim_formula(n, k));
            }
        }
        assert!(kernel_basis(2, 4).unwrap().is_independent());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = kernel_basis_with(3, 4, Execution::Sequential).unwrap();
        let b = kernel_basis_with(3, 4, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn surjectivity_examples() {
        for (n, k, rank) in [(1, 2, 1), (2, 4, 10), (8, 4, 136)] {
            let r = verify_surjectivity(n, k).unwrap();
            assert_eq!(r.rank, rank);
            assert!(r.surjective);
        }
        assert!(verify_surjectivity(2, 1).is_err());
    }

    #[test]
    fn block_decomposition_matches_full_matrix() {
        for n in 1..=2 {
            for k in 0..=4 {
                let full = full_operator_matrix(n, k).unwrap();
                let nullity = full.cols() - full.rank();
                assert_eq!(nullity as u128, kernel_dimension(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn fischer_examples() {
        let r = fischer_intersection(1, 2).unwrap();
        assert_eq!((r.dim, r.dim_by_union), (1, 1));
        assert_eq!(r.witnesses, vec![CPolynomial::z(1, 1).unwrap().pow(2)]);

        // Q = z^2 and L(z^2 r) = z^2 L(r), so the intersection is Q H_1, which
        // is two-dimensional: z^3 and z^2 zbar.
        let r = fischer_intersection(1, 3).unwrap();
        assert_eq!((r.dim, r.dim_by_union), (2, 2));
        let z3 = CPolynomial::z(1, 1).unwrap().pow(3);
        let mut e = SparseEchelon::new();
        for w in &r.witnesses {
            e.insert(as_vector(w));
        }
        assert!(e.contains(as_vector(&z3)));

        let r = fischer_intersection(2, 2).unwrap();
        assert!(r.dim >= 1);
        assert_eq!(r.dim, r.dim_by_union);
        assert!(r.witnesses.contains(&quadric(2).unwrap()));
    }

    #[test]
    fn monogenic_construction() {
        let p = CPolynomial::parse(8, "z1 zb1").unwrap().with_coeff(&ComplexOctonion::one());
        let q = monogenic_from_kernel(&p).unwrap();
        assert_eq!(q, CPolynomial::z(8, 1).unwrap().mul_int(2).with_coeff(&ComplexOctonion::one()));
        assert!(apply_cr(CrOperator::D, &q).unwrap().is_zero());

        let c = OPolynomial::constant(8, ComplexOctonion::basis(3));
        assert!(monogenic_from_kernel(&c).unwrap().is_zero());

        let bad = zb(8, 1).pow(2).with_coeff(&ComplexOctonion::basis(5));
        assert_eq!(monogenic_from_kernel(&bad), Err(KernelError::NotInKernel { component: 5 }));
        assert!(monogenic_from_kernel(&OPolynomial::zero(2)).is_err());
    }

    #[test]
    fn octonionify_examples() {
        let basis = kernel_basis(8, 2).unwrap();
        let one = octonionify(&basis, &[ComplexOctonion::one()]).unwrap();
        assert_eq!(one, basis.polynomials[0].with_coeff(&ComplexOctonion::one()));
        assert!(octonionify(&basis, &vec![ComplexOctonion::zero(); 5]).unwrap().is_zero());
        let too_many = vec![ComplexOctonion::one(); basis.len() + 1];
        assert!(octonionify(&basis, &too_many).is_err());
    }

    #[test]
    fn reference_bases_parse() {
        for &(n, k, texts) in REFERENCE_BASES {
            let polys = reference_basis(n, k).unwrap();
            assert_eq!(polys.len(), texts.len());
            assert_eq!(polys.len() as u128, dim_formula(n, k));
        }
    }
}
