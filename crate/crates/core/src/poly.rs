//! Sparse polynomials in `z_1..z_n, zbar_1..zbar_n`.
//!
//! A monomial `z^alpha zbar^beta` is stored as the concatenated exponent
//! vector `(alpha_1..alpha_n, beta_1..beta_n)`. Monomials are ordered by total
//! degree, then lexicographically with larger leading exponents first, so
//! `homogeneous_basis(1, 2)` lists `z^2, z zbar, zbar^2`.
//!
//! [`Poly`] is generic over its coefficient ring: [`CPolynomial`] has Gaussian
//! rational coefficients and [`OPolynomial`] has complexified-octonion
//! coefficients. Octonion-valued polynomials are never multiplied with each
//! other; they are only differentiated, added and scaled.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cayley::ComplexOctonion;
use crate::random::ExactRng;
use crate::scalar::{CRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCount { left: usize, right: usize },
    #[error("expected {expected} values, got {found}")]
    Length { expected: usize, found: usize },
    #[error("variable index {j} out of range 1..={n}")]
    Index { j: usize, n: usize },
    #[error("polynomials need at least one variable")]
    NoVariables,
    #[error("expected a homogeneous polynomial of degree {expected}")]
    Degree { expected: usize },
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// `z^alpha zbar^beta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(alpha: &[u32], beta: &[u32]) -> Result<Self, PolyError> {
        if alpha.len() != beta.len() {
            return Err(PolyError::Length { expected: alpha.len(), found: beta.len() });
        }
        Ok(Self { exps: alpha.iter().chain(beta).copied().collect() })
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; 2 * n].into_boxed_slice() }
    }

    fn from_exps(exps: Vec<u32>) -> Self {
        Self { exps: exps.into_boxed_slice() }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn z_degree(&self) -> u32 {
        self.alpha().iter().sum()
    }

    pub fn zbar_degree(&self) -> u32 {
        self.beta().iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_exps(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect())
    }

    /// Lowers exponent `slot` (an index into the concatenated vector) by one,
    /// returning the old exponent, or `None` when it is already zero.
    pub(crate) fn lower(&self, slot: usize) -> Option<(u32, Self)> {
        let e = self.exps[slot];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.to_vec();
        exps[slot] -= 1;
        Some((e, Self::from_exps(exps)))
    }

    /// Exchanges the roles of `z` and `zbar`.
    pub fn swap_conj(&self) -> Self {
        Self::from_exps(self.beta().iter().chain(self.alpha()).copied().collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, exps) in [("z", self.alpha()), ("zb", self.beta())] {
            for (j, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", j + 1)),
                    _ => parts.push(format!("{name}{}^{e}", j + 1)),
                }
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Coefficient rings a [`Poly`] can carry. Every ring here is a module over
/// the Gaussian rationals.
pub trait Coeff: Clone + PartialEq + Zero + fmt::Debug + Send + Sync {
    /// Schema used in polynomial JSON.
    type Json: Serialize + DeserializeOwned;

    fn add_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    fn mul_i(&self) -> Self;
    fn scale(&self, c: &CRational) -> Self;
    /// Complex conjugation of the coefficient (`i -> -i`).
    fn star(&self) -> Self;
    fn to_json(&self) -> Self::Json;
    fn from_json(json: Self::Json) -> Self;
}

impl Coeff for CRational {
    type Json = CRational;

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        CRational::mul_int(self, k)
    }
    fn mul_i(&self) -> Self {
        CRational::mul_i(self)
    }
    fn scale(&self, c: &CRational) -> Self {
        self * c
    }
    fn star(&self) -> Self {
        self.conj()
    }
    fn to_json(&self) -> CRational {
        self.clone()
    }
    fn from_json(json: CRational) -> Self {
        json
    }
}

impl Coeff for ComplexOctonion {
    /// Complex coefficients of `e_0..e_7`.
    type Json = [CRational; 8];

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        ComplexOctonion::mul_int(self, k)
    }
    fn mul_i(&self) -> Self {
        ComplexOctonion::mul_i(self)
    }
    fn scale(&self, c: &CRational) -> Self {
        ComplexOctonion::scale(self, c)
    }
    fn star(&self) -> Self {
        ComplexOctonion::star(self)
    }
    fn to_json(&self) -> [CRational; 8] {
        std::array::from_fn(|j| self.component(j))
    }
    fn from_json(json: [CRational; 8]) -> Self {
        ComplexOctonion::from_components(json)
    }
}

/// A polynomial in `n` complex variables and their conjugates. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Poly<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

pub type CPolynomial = Poly<CRational>;
pub type OPolynomial = Poly<ComplexOctonion>;

impl<C: Coeff> Poly<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::from_terms(n, [(Monomial::one(n), c)])
    }

    pub fn monomial(n: usize, alpha: &[u32], beta: &[u32], c: C) -> Result<Self, PolyError> {
        if alpha.len() != n || beta.len() != n {
            return Err(PolyError::Length { expected: n, found: alpha.len().max(beta.len()) });
        }
        Ok(Self::from_terms(n, [(Monomial::new(alpha, beta)?, c)]))
    }

    /// Builds from `(monomial, coefficient)` pairs, summing repeats. Every
    /// monomial must have `n` variables.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial variable count");
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Total degree of the homogeneous polynomial, `None` for zero or mixed
    /// degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True for zero and for polynomials whose terms all have degree `k`.
    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add_ref(c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::VariableCount { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// In-place sum; panics on a variable-count mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        self.map_coeffs(C::neg_ref)
    }

    pub fn scale(&self, c: &CRational) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.map_coeffs(|x| x.mul_int(k))
    }

    pub fn mul_i(&self) -> Self {
        self.map_coeffs(C::mul_i)
    }

    /// Applies a coefficientwise map, dropping coefficients that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let v = f(c);
                    (!v.is_zero()).then(|| (m.clone(), v))
                })
                .collect(),
        }
    }

    /// Product with a scalar polynomial. Scalars commute with every
    /// coefficient ring here, so the order does not matter.
    pub fn mul_scalar_poly(&self, p: &CPolynomial) -> Result<Self, PolyError> {
        if self.n != p.n {
            return Err(PolyError::VariableCount { left: self.n, right: p.n });
        }
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &p.terms {
                out.add_term(m1.mul(m2), &c1.scale(c2));
            }
        }
        Ok(out)
    }

    /// The polynomial whose values are the complex conjugates of this one's:
    /// conjugates coefficients and swaps `z` with `zbar`.
    pub fn conj_function(&self) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, c)| (m.swap_conj(), c.star())))
    }

    /// Formal evaluation with independent values for `z_j` and `zbar_j`.
    pub fn evaluate(&self, zvals: &[(CRational, CRational)]) -> Result<C, PolyError> {
        if self.n == 0 {
            return Err(PolyError::NoVariables);
        }
        if zvals.len() != self.n {
            return Err(PolyError::Length { expected: self.n, found: zvals.len() });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = CRational::one();
            for (j, (z, zb)) in zvals.iter().enumerate() {
                for _ in 0..m.alpha()[j] {
                    v = &v * z;
                }
                for _ in 0..m.beta()[j] {
                    v = &v * zb;
                }
            }
            acc = acc.add_ref(&c.scale(&v));
        }
        Ok(acc)
    }

    /// Evaluation at the real point `z_j = x_j + i y_j`, `zbar_j = x_j - i y_j`.
    pub fn real_evaluate(&self, x: &[Rational], y: &[Rational]) -> Result<C, PolyError> {
        if x.len() != self.n || y.len() != self.n {
            return Err(PolyError::Length { expected: self.n, found: x.len().min(y.len()) });
        }
        let zvals: Vec<_> = x
            .iter()
            .zip(y)
            .map(|(a, b)| (CRational::new(a.clone(), b.clone()), CRational::new(a.clone(), -b)))
            .collect();
        self.evaluate(&zvals)
    }
}

impl CPolynomial {
    pub fn z(n: usize, j: usize) -> Result<Self, PolyError> {
        Self::variable(n, j, false)
    }

    pub fn zbar(n: usize, j: usize) -> Result<Self, PolyError> {
        Self::variable(n, j, true)
    }

    fn variable(n: usize, j: usize, conj: bool) -> Result<Self, PolyError> {
        if j == 0 || j > n {
            return Err(PolyError::Index { j, n });
        }
        let mut exps = vec![0; 2 * n];
        exps[if conj { n + j - 1 } else { j - 1 }] = 1;
        Ok(Self::from_terms(n, [(Monomial::from_exps(exps), CRational::one())]))
    }

    /// `x_j = (z_j + zbar_j) / 2`.
    pub fn x(n: usize, j: usize) -> Result<Self, PolyError> {
        let half = CRational::real(Rational::new(1, 2).expect("nonzero"));
        Ok(Self::z(n, j)?.try_add(&Self::zbar(n, j)?)?.scale(&half))
    }

    /// `y_j = (z_j - zbar_j) / (2i)`.
    pub fn y(n: usize, j: usize) -> Result<Self, PolyError> {
        let c = CRational::new(Rational::zero(), Rational::new(-1, 2).expect("nonzero"));
        Ok(Self::z(n, j)?.try_sub(&Self::zbar(n, j)?)?.scale(&c))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.mul_scalar_poly(other)
    }

    /// Places the constant coefficient `c` on every term.
    pub fn with_coeff(&self, c: &ComplexOctonion) -> OPolynomial {
        Poly::from_terms(self.n, self.terms.iter().map(|(m, s)| (m.clone(), c.scale(s))))
    }

    /// Parses integer-coefficient text such as `3*zb1^2*zb2 - zb2^3` or
    /// `z^2 + z*zb`. Variables are `z<j>` and `zb<j>`; a bare `z` or `zb`
    /// means index 1. Factors are joined by `*` or whitespace.
    pub fn parse(n: usize, text: &str) -> Result<Self, PolyError> {
        let bad = |msg: &str| PolyError::Malformed(format!("{msg} in `{text}`"));
        let mut out = Self::zero(n);
        let spaced = text.replace('-', " - ").replace('+', " + ");
        let mut sign = 1i64;
        let mut factors: Vec<String> = Vec::new();
        let flush = |sign: i64, factors: &mut Vec<String>, out: &mut Self| -> Result<(), PolyError> {
            if factors.is_empty() {
                return Ok(());
            }
            let mut coeff = sign;
            let mut exps = vec![0u32; 2 * n];
            for f in factors.drain(..) {
                let (base, pow) = match f.split_once('^') {
                    Some((b, e)) => (b.to_string(), e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (f.clone(), 1),
                };
                if let Ok(c) = base.parse::<i64>() {
                    coeff *= c.pow(pow);
                    continue;
                }
                let (conj, idx) = if let Some(rest) = base.strip_prefix("zb") {
                    (true, rest)
                } else if let Some(rest) = base.strip_prefix('z') {
                    (false, rest)
                } else {
                    return Err(bad("unknown factor"));
                };
                let j = if idx.is_empty() { 1 } else { idx.parse::<usize>().map_err(|_| bad("bad index"))? };
                if j == 0 || j > n {
                    return Err(PolyError::Index { j, n });
                }
                exps[if conj { n + j - 1 } else { j - 1 }] += pow;
            }
            out.add_term(Monomial::from_exps(exps), &CRational::from(coeff));
            Ok(())
        };
        for tok in spaced.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            match tok {
                "+" | "-" => {
                    flush(sign, &mut factors, &mut out)?;
                    sign = if tok == "-" { -1 } else { 1 };
                }
                _ => factors.push(tok.to_string()),
            }
        }
        flush(sign, &mut factors, &mut out)?;
        Ok(out)
    }

    /// Integer power of a polynomial.
    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.n, CRational::one());
        for _ in 0..e {
            out = out.try_mul(self).expect("same variable count");
        }
        out
    }
}

impl OPolynomial {
    /// The eight complex-valued component polynomials `f_j` with
    /// `f = sum_j e_j f_j`.
    pub fn components(&self) -> [CPolynomial; 8] {
        std::array::from_fn(|j| Poly::from_terms(self.n, self.terms.iter().map(|(m, c)| (m.clone(), c.component(j)))))
    }

    pub fn from_components(parts: &[CPolynomial; 8]) -> Result<Self, PolyError> {
        let n = parts[0].n;
        let mut out = Self::zero(n);
        for (j, p) in parts.iter().enumerate() {
            if p.n != n {
                return Err(PolyError::VariableCount { left: n, right: p.n });
            }
            out = out.try_add(&p.with_coeff(&ComplexOctonion::basis(j)))?;
        }
        Ok(out)
    }

    /// Real and imaginary octonion-valued parts `g`, `h` of `f = g + i h`,
    /// as functions of the real coordinates.
    pub fn real_imag_parts(&self) -> (Self, Self) {
        let conj = self.conj_function();
        let half = CRational::real(Rational::new(1, 2).expect("nonzero"));
        let minus_half_i = CRational::new(Rational::zero(), Rational::new(-1, 2).expect("nonzero"));
        let g = (self + &conj).scale(&half);
        let h = (self - &conj).scale(&minus_half_i);
        (g, h)
    }

    /// Left multiplication of every coefficient by the basis unit `e_j`.
    pub fn left_mul_unit(&self, j: usize) -> Self {
        self.map_coeffs(|c| c.left_mul_unit(j))
    }

    /// Left multiplication of every coefficient by a constant.
    pub fn left_mul(&self, a: &ComplexOctonion) -> Self {
        self.map_coeffs(|c| a * c)
    }
}

/// Panics on variable-count mismatch; use [`Poly::try_add`] for fallible
/// addition.
impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.try_add(rhs).expect("polynomials over different variable counts")
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.try_sub(rhs).expect("polynomials over different variable counts")
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c:?})*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Text form in the syntax of [`CPolynomial::parse`], highest terms first.
/// Non-real or fractional coefficients are written in parentheses, which
/// `parse` does not read back.
impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(m.degree()));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.im.is_zero() && c.re.is_negative();
            let c = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars = monomial_text(m);
            let coeff = if c.im.is_zero() && c.re.is_integer() {
                format!("{:?}", c.re)
            } else if c.im.is_zero() {
                format!("({:?})", c.re)
            } else {
                let (sign, im) = if c.im.is_negative() { ("-", -&c.im) } else { ("+", c.im.clone()) };
                format!("({:?}{sign}{im:?}i)", c.re)
            };
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{vars}")?,
                (false, false) => write!(f, "{coeff}*{vars}")?,
            }
        }
        Ok(())
    }
}

fn monomial_text(m: &Monomial) -> String {
    let n = m.n();
    let mut parts = Vec::new();
    for (pos, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if pos < n { format!("z{}", pos + 1) } else { format!("zb{}", pos - n + 1) };
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    parts.join("*")
}

/// Number of multi-index pairs `(alpha, beta)` with `|alpha| + |beta| = k`:
/// `C(2n + k - 1, 2n - 1)`.
pub fn dim_homogeneous(n: usize, k: usize) -> u128 {
    binomial((2 * n + k) as u64 - 1, (2 * n) as u64 - 1)
}

/// Number of multi-indices of length `n` and degree `k`.
pub fn count_multi_indices(n: usize, k: usize) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    binomial((n + k - 1) as u64, (n - 1) as u64)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All exponent vectors of the given length and total degree, larger leading
/// exponents first.
pub fn multi_indices(len: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == len {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(len, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, k, &mut Vec::with_capacity(len), &mut out);
    out
}

/// The monomials `z^alpha zbar^beta` with `|alpha| + |beta| = k`, in canonical
/// order.
pub fn homogeneous_basis(n: usize, k: u32) -> Result<Vec<Monomial>, PolyError> {
    if n == 0 {
        return Err(PolyError::NoVariables);
    }
    Ok(multi_indices(2 * n, k).into_iter().map(Monomial::from_exps).collect())
}

/// A random homogeneous scalar polynomial with integer coefficients in
/// `[-9, 9] + i[-9, 9]`. Deterministic in `seed`; never zero.
pub fn random_homogeneous(n: usize, k: u32, seed: u64) -> Result<CPolynomial, PolyError> {
    let basis = homogeneous_basis(n, k)?;
    let mut rng = ExactRng::seeded(seed);
    loop {
        let p = Poly::from_terms(n, basis.iter().map(|m| (m.clone(), rng.int_crational())));
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

/// Octonion-coefficient counterpart of [`random_homogeneous`].
pub fn random_homogeneous_octonion(n: usize, k: u32, seed: u64) -> Result<OPolynomial, PolyError> {
    let basis = homogeneous_basis(n, k)?;
    let mut rng = ExactRng::seeded(seed);
    loop {
        let p = Poly::from_terms(n, basis.iter().map(|m| (m.clone(), rng.int_complex_octonion())));
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

/// A random octonion-valued polynomial in the real `x` variables only,
/// homogeneous of degree `k` and expanded into `(z, zbar)` form.
pub fn random_x_only_octonion(n: usize, k: u32, seed: u64) -> Result<OPolynomial, PolyError> {
    let xs: Vec<CPolynomial> = (1..=n).map(|j| CPolynomial::x(n, j)).collect::<Result<_, _>>()?;
    let mut rng = ExactRng::seeded(seed);
    let mut out = OPolynomial::zero(n);
    for exps in multi_indices(n, k) {
        let mut term = CPolynomial::constant(n, CRational::one());
        for (x, &e) in xs.iter().zip(&exps) {
            term = term.try_mul(&x.pow(e))?;
        }
        let c = ComplexOctonion::from_real(rng.int_octonion());
        out = out.try_add(&term.with_coeff(&c))?;
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson<J> {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    coeff: J,
}

#[derive(Serialize, Deserialize)]
struct PolyJson<J> {
    n: usize,
    terms: Vec<TermJson<J>>,
}

impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { alpha: m.alpha().to_vec(), beta: m.beta().to_vec(), coeff: c.to_json() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::<C::Json>::deserialize(d)?;
        let mut p = Poly::zero(raw.n);
        for t in raw.terms {
            if t.alpha.len() != raw.n || t.beta.len() != raw.n {
                return Err(serde::de::Error::custom(PolyError::Malformed(format!(
                    "term exponent length differs from n = {}",
                    raw.n
                ))));
            }
            let m = Monomial::new(&t.alpha, &t.beta).map_err(serde::de::Error::custom)?;
            p.add_term(m, &C::from_json(t.coeff));
        }
        Ok(p)
    }
}
