//! Quaternions, octonions and complexified octonions over exact rationals.
//!
//! An octonion is stored as eight coefficients of `1, e1, ..., e7` and is
//! multiplied through its quaternionic form `x = a + b e4` with
//! `a = x0 + x1 e1 + x2 e2 + x3 e3` and `b = x4 + x5 e1 + x6 e2 + x7 e3`:
//!
//! ```text
//! (a + b e4)(c + d e4) = (ac - conj(d) b) + (b conj(c) + d a) e4
//! ```
//!
//! The signed basis table [`MULT_TABLE`] is the same product written out for
//! basis elements; [`check_multiplication_table`] verifies the two agree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{CRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("basis index {0} out of range 0..8")]
    BasisIndex(usize),
    #[error("multiplication table disagrees with the quaternionic product at e{i} e{j}")]
    TableMismatch { i: usize, j: usize },
    #[error("z conj(z) is not a complex scalar: {0}")]
    NotScalar(String),
}

/// `MULT_TABLE[i][j] = (sign, k)` means `e_i e_j = sign * e_k`, with `e_0 = 1`.
pub const MULT_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Signed basis product `e_i e_j`, read from the table.
pub fn basis_product(i: usize, j: usize) -> Result<(i8, usize), AlgebraError> {
    if i >= 8 {
        return Err(AlgebraError::BasisIndex(i));
    }
    if j >= 8 {
        return Err(AlgebraError::BasisIndex(j));
    }
    let (s, k) = MULT_TABLE[i][j];
    Ok((s, k as usize))
}

/// Recomputes every basis product with the quaternionic formula and compares
/// it to [`MULT_TABLE`].
pub fn check_multiplication_table() -> Result<(), AlgebraError> {
    for (i, row) in MULT_TABLE.iter().enumerate() {
        for (j, &(s, k)) in row.iter().enumerate() {
            let prod = Octonion::basis(i) * Octonion::basis(j);
            let expected = Octonion::basis(k as usize).scale(&Rational::from_integer(s as i64));
            if prod != expected {
                return Err(AlgebraError::TableMismatch { i, j });
            }
        }
    }
    Ok(())
}

/// A real quaternion `c0 + c1 e1 + c2 e2 + c3 e3` with `e1 e2 = e3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    c: [Rational; 4],
}

impl Quaternion {
    pub fn new(c: [Rational; 4]) -> Self {
        Self { c }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new([a.clone(), -b, -c, -d])
    }

    pub fn sc(&self) -> Rational {
        self.c[0].clone()
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Self::new(std::array::from_fn(|_| Rational::zero()))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(std::array::from_fn(|k| &self.c[k] + &rhs.c[k]))
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(std::array::from_fn(|k| &self.c[k] - &rhs.c[k]))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        Quaternion::new([
            &(&(a0 * b0) - &(a1 * b1)) - &(&(a2 * b2) + &(a3 * b3)),
            &(&(a0 * b1) + &(a1 * b0)) + &(&(a2 * b3) - &(a3 * b2)),
            &(&(a0 * b2) - &(a1 * b3)) + &(&(a2 * b0) + &(a3 * b1)),
            &(&(a0 * b3) + &(a1 * b2)) - &(&(a2 * b1) - &(a3 * b0)),
        ])
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{:?}", self.c)
    }
}

/// A real octonion `c0 + c1 e1 + ... + c7 e7`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Octonion {
    c: [Rational; 8],
}

impl Octonion {
    pub fn new(c: [Rational; 8]) -> Self {
        Self { c }
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Self::new(c.map(Rational::from_integer))
    }

    pub fn real(r: Rational) -> Self {
        let mut c: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        c[0] = r;
        Self { c }
    }

    /// The basis unit `e_j` (`e_0 = 1`). Panics if `j >= 8`.
    pub fn basis(j: usize) -> Self {
        let mut c: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        c[j] = Rational::one();
        Self { c }
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.c[j]
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.c
    }

    pub fn to_quaternion_pair(&self) -> (Quaternion, Quaternion) {
        let a = Quaternion::new(std::array::from_fn(|k| self.c[k].clone()));
        let b = Quaternion::new(std::array::from_fn(|k| self.c[k + 4].clone()));
        (a, b)
    }

    /// `a + b e4`.
    pub fn from_quaternion_pair(a: &Quaternion, b: &Quaternion) -> Self {
        Self::new(std::array::from_fn(|k| if k < 4 { a.c[k].clone() } else { b.c[k - 4].clone() }))
    }

    /// `conj(a) - b e4`, i.e. `x0 - vec(x)`.
    pub fn conj(&self) -> Self {
        Self::new(std::array::from_fn(|k| if k == 0 { self.c[0].clone() } else { -&self.c[k] }))
    }

    pub fn sc(&self) -> Rational {
        self.c[0].clone()
    }

    pub fn vec(&self) -> Self {
        Self::new(std::array::from_fn(|k| if k == 0 { Rational::zero() } else { self.c[k].clone() }))
    }

    /// `Sc(x conj(y))`.
    pub fn inner(&self, other: &Self) -> Rational {
        (self * &other.conj()).sc()
    }

    /// `x conj(x)`, returned as its (only nonzero) scalar part.
    pub fn norm_sq(&self) -> Rational {
        (self * &self.conj()).sc()
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.norm_sq();
        let inv = n.recip().map_err(|_| AlgebraError::ZeroInverse)?;
        Ok(self.conj().scale(&inv))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(std::array::from_fn(|k| &self.c[k] * r))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::new(std::array::from_fn(|j| self.c[j].mul_int(k)))
    }

    /// `e_j x`, as a signed permutation of coefficients.
    pub fn left_mul_unit(&self, j: usize) -> Self {
        let mut out: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for (k, ck) in self.c.iter().enumerate() {
            let (s, m) = MULT_TABLE[j][k];
            out[m as usize] = if s > 0 { ck.clone() } else { -ck };
        }
        Self::new(out)
    }
}

impl Zero for Octonion {
    fn zero() -> Self {
        Self::new(std::array::from_fn(|_| Rational::zero()))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for Octonion {
    fn one() -> Self {
        Self::basis(0)
    }
}

impl<'a> Add<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion::new(std::array::from_fn(|k| &self.c[k] + &rhs.c[k]))
    }
}

impl<'a> Sub<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion::new(std::array::from_fn(|k| &self.c[k] - &rhs.c[k]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(std::array::from_fn(|k| -&self.c[k]))
    }
}

impl<'a> Mul<&'a Octonion> for &'a Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        let (a, b) = self.to_quaternion_pair();
        let (c, d) = rhs.to_quaternion_pair();
        let first = &(&a * &c) - &(&d.conj() * &b);
        let second = &(&b * &c.conj()) + &(&d * &a);
        Octonion::from_quaternion_pair(&first, &second)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Octonion, Add add, Sub sub, Mul mul);

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c:?}")?;
            } else {
                write!(f, "{c:?}e{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Octonion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Self::new(<[Rational; 8]>::deserialize(d)?))
    }
}

/// A complexified octonion `x + i y` with real octonions `x`, `y`; the
/// complex unit `i` commutes with every `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexOctonion {
    pub x: Octonion,
    pub y: Octonion,
}

impl ComplexOctonion {
    pub fn new(x: Octonion, y: Octonion) -> Self {
        Self { x, y }
    }

    pub fn from_real(x: Octonion) -> Self {
        Self::new(x, Octonion::zero())
    }

    pub fn basis(j: usize) -> Self {
        Self::from_real(Octonion::basis(j))
    }

    pub fn scalar(c: &CRational) -> Self {
        Self::new(Octonion::real(c.re.clone()), Octonion::real(c.im.clone()))
    }

    /// The complex coefficient of `e_j`.
    pub fn component(&self, j: usize) -> CRational {
        CRational::new(self.x.coeff(j).clone(), self.y.coeff(j).clone())
    }

    pub fn from_components(c: [CRational; 8]) -> Self {
        let x = Octonion::new(std::array::from_fn(|j| c[j].re.clone()));
        let y = Octonion::new(std::array::from_fn(|j| c[j].im.clone()));
        Self::new(x, y)
    }

    /// `RE(z)`.
    pub fn re(&self) -> &Octonion {
        &self.x
    }

    /// `IM(z)`.
    pub fn im(&self) -> &Octonion {
        &self.y
    }

    /// The complex scalar part `z0`.
    pub fn sc(&self) -> CRational {
        self.component(0)
    }

    pub fn vec(&self) -> Self {
        Self::new(self.x.vec(), self.y.vec())
    }

    /// Algebraic conjugate `z0 - vec(z) = conj(x) + i conj(y)`.
    pub fn bar(&self) -> Self {
        Self::new(self.x.conj(), self.y.conj())
    }

    /// Complex conjugate `x - i y`.
    pub fn star(&self) -> Self {
        Self::new(self.x.clone(), -&self.y)
    }

    /// Hermitian conjugate `bar(z)*`.
    pub fn dagger(&self) -> Self {
        self.bar().star()
    }

    /// `Sc(z w^+)`.
    pub fn complex_inner(&self, w: &Self) -> CRational {
        (self * &w.dagger()).sc()
    }

    /// `z bar(z)`; checks that it equals `bar(z) z` and has no vector part.
    pub fn z_zbar_product(&self) -> Result<CRational, AlgebraError> {
        let left = self * &self.bar();
        let right = &self.bar() * self;
        if left != right || !left.vec().is_zero() {
            return Err(AlgebraError::NotScalar(format!("{left:?}")));
        }
        Ok(left.sc())
    }

    /// Multiplication by a complex scalar, which commutes with everything.
    pub fn scale(&self, c: &CRational) -> Self {
        let x = &self.x.scale(&c.re) - &self.y.scale(&c.im);
        let y = &self.y.scale(&c.re) + &self.x.scale(&c.im);
        Self::new(x, y)
    }

    pub fn scale_real(&self, r: &Rational) -> Self {
        Self::new(self.x.scale(r), self.y.scale(r))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::new(self.x.mul_int(k), self.y.mul_int(k))
    }

    pub fn mul_i(&self) -> Self {
        Self::new(-&self.y, self.x.clone())
    }

    /// `e_j z`.
    pub fn left_mul_unit(&self, j: usize) -> Self {
        Self::new(self.x.left_mul_unit(j), self.y.left_mul_unit(j))
    }
}

impl Zero for ComplexOctonion {
    fn zero() -> Self {
        Self::new(Octonion::zero(), Octonion::zero())
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for ComplexOctonion {
    fn one() -> Self {
        Self::basis(0)
    }
}

impl<'a> Add<&'a ComplexOctonion> for &'a ComplexOctonion {
    type Output = ComplexOctonion;
    fn add(self, rhs: &ComplexOctonion) -> ComplexOctonion {
        ComplexOctonion::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a ComplexOctonion> for &'a ComplexOctonion {
    type Output = ComplexOctonion;
    fn sub(self, rhs: &ComplexOctonion) -> ComplexOctonion {
        ComplexOctonion::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &ComplexOctonion {
    type Output = ComplexOctonion;
    fn neg(self) -> ComplexOctonion {
        ComplexOctonion::new(-&self.x, -&self.y)
    }
}

impl Neg for ComplexOctonion {
    type Output = ComplexOctonion;
    fn neg(self) -> ComplexOctonion {
        -&self
    }
}

/// `(x + iy)(u + iv) = (xu - yv) + i(xv + yu)`.
impl<'a> Mul<&'a ComplexOctonion> for &'a ComplexOctonion {
    type Output = ComplexOctonion;
    fn mul(self, rhs: &ComplexOctonion) -> ComplexOctonion {
        let re = &(&self.x * &rhs.x) - &(&self.y * &rhs.y);
        let im = &(&self.x * &rhs.y) + &(&self.y * &rhs.x);
        ComplexOctonion::new(re, im)
    }
}

forward_owned!(ComplexOctonion, Add add, Sub sub, Mul mul);

impl fmt::Debug for ComplexOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{:?}", self.x)
        } else {
            write!(f, "({:?}) + i({:?})", self.x, self.y)
        }
    }
}

impl Serialize for ComplexOctonion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [&self.x, &self.y].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexOctonion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y] = <[Octonion; 2]>::deserialize(d)?;
        Ok(Self::new(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::ExactRng;

    fn oct(c: [i64; 8]) -> Octonion {
        Octonion::from_ints(c)
    }

    fn e(j: usize) -> Octonion {
        Octonion::basis(j)
    }

    fn co(x: Octonion, y: Octonion) -> ComplexOctonion {
        ComplexOctonion::new(x, y)
    }

    #[test]
    fn table_matches_quaternionic_product() {
        check_multiplication_table().unwrap();
    }

    #[test]
    fn table_entries() {
        assert_eq!(basis_product(1, 2).unwrap(), (1, 3));
        assert_eq!(basis_product(0, 5).unwrap(), (1, 5));
        assert_eq!(basis_product(4, 5).unwrap(), (1, 1));
        assert_eq!(basis_product(8, 0), Err(AlgebraError::BasisIndex(8)));
        for i in 1..8 {
            assert_eq!(basis_product(i, i).unwrap(), (-1, 0));
            for j in 1..8 {
                if i != j {
                    let (s, k) = basis_product(i, j).unwrap();
                    assert_eq!(basis_product(j, i).unwrap(), (-s, k));
                }
            }
        }
    }

    #[test]
    fn brute_force_product_agrees() {
        // Sum of basis products over all 64 coefficient pairs.
        let mut rng = ExactRng::seeded(11);
        for _ in 0..50 {
            let x = rng.octonion();
            let y = rng.octonion();
            let mut acc: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
            for i in 0..8 {
                for j in 0..8 {
                    let (s, k) = basis_product(i, j).unwrap();
                    let t = x.coeff(i) * y.coeff(j);
                    acc[k] = if s > 0 { &acc[k] + &t } else { &acc[k] - &t };
                }
            }
            assert_eq!(&x * &y, Octonion::new(acc));
        }
        let one_e4 = oct([1, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(&one_e4 * &one_e4, oct([0, 0, 0, 0, 2, 0, 0, 0]));
        assert_eq!(&e(1) * &e(1), -&Octonion::one());
    }

    #[test]
    fn quaternionic_form_rules() {
        let mut rng = ExactRng::seeded(3);
        let e4 = e(4);
        let lift = |q: &Quaternion| Octonion::from_quaternion_pair(q, &Quaternion::zero());
        let times_e4 = |q: &Quaternion| Octonion::from_quaternion_pair(&Quaternion::zero(), q);
        for _ in 0..20 {
            let (a, _) = rng.octonion().to_quaternion_pair();
            let (b, _) = rng.octonion().to_quaternion_pair();
            assert_eq!(&e4 * &lift(&a), times_e4(&a.conj()));
            assert_eq!(&e4 * &times_e4(&a), -&lift(&a.conj()));
            assert_eq!(&times_e4(&a) * &e4, -&lift(&a));
            assert_eq!(&lift(&a) * &times_e4(&b), times_e4(&(&b * &a)));
            assert_eq!(&times_e4(&a) * &lift(&b), times_e4(&(&a * &b.conj())));
            assert_eq!(&times_e4(&a) * &times_e4(&b), -&lift(&(&b.conj() * &a)));
        }
    }

    #[test]
    fn quaternion_pair_round_trip() {
        let mut rng = ExactRng::seeded(5);
        for _ in 0..20 {
            let x = rng.octonion();
            let (a, b) = x.to_quaternion_pair();
            assert_eq!(Octonion::from_quaternion_pair(&a, &b), x);
        }
    }

    #[test]
    fn conjugation_and_projections() {
        assert_eq!(e(3).conj(), -&e(3));
        assert!((&e(1) * &e(2)).sc().is_zero());
        let mut rng = ExactRng::seeded(9);
        for _ in 0..20 {
            let x = rng.octonion();
            assert_eq!(x.conj().conj(), x);
            assert_eq!(&Octonion::real(x.sc()) + &x.vec(), x);
            assert!(x.vec().sc().is_zero());
            let half = Rational::new(1, 2).unwrap();
            assert_eq!(Octonion::real(x.sc()), (&x + &x.conj()).scale(&half));
        }
    }

    #[test]
    fn inner_product_and_norm() {
        assert_eq!(e(1).inner(&e(1)), Rational::one());
        assert!(e(1).inner(&e(2)).is_zero());
        let x = oct([1, 0, 0, 0, 0, 2, 0, 0]);
        let y = oct([3, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(x.inner(&y), Rational::from_integer(5));
        assert_eq!(oct([1, 1, 1, 1, 0, 0, 0, 0]).norm_sq(), Rational::from_integer(4));
        assert_eq!(e(7).inverse().unwrap(), -&e(7));
        assert_eq!(Octonion::zero().inverse(), Err(AlgebraError::ZeroInverse));
        let mut rng = ExactRng::seeded(17);
        for _ in 0..20 {
            let x = rng.octonion();
            let y = rng.octonion();
            let direct: Rational = (0..8).map(|j| x.coeff(j) * y.coeff(j)).sum();
            assert_eq!(x.inner(&y), direct);
            assert_eq!(x.inner(&y), y.inner(&x));
            if !x.is_zero() {
                let inv = x.inverse().unwrap();
                assert_eq!(&x * &inv, Octonion::one());
                assert_eq!(&inv * &x, Octonion::one());
            }
        }
    }

    #[test]
    fn left_mul_unit_is_oct_mul() {
        let mut rng = ExactRng::seeded(1);
        for _ in 0..10 {
            let c = rng.octonion();
            for j in 0..8 {
                assert_eq!(c.left_mul_unit(j), &e(j) * &c);
            }
        }
    }

    #[test]
    fn complex_product_examples() {
        let z = co(e(1), e(2));
        let w = co(e(1), -&e(2));
        assert_eq!(&z * &w, co(oct([-2, 0, 0, 0, 0, 0, 0, 0]), oct([0, 0, 0, -2, 0, 0, 0, 0])));
        assert_eq!(&z * &ComplexOctonion::one(), z);
        let i = co(Octonion::zero(), Octonion::one());
        assert_eq!(&i * &i, -&ComplexOctonion::one());
    }

    #[test]
    fn involutions() {
        let one = Octonion::one();
        assert_eq!(co(e(1), one.clone()).bar(), co(-&e(1), one.clone()));
        assert_eq!(co(e(1), e(2)).star(), co(e(1), -&e(2)));
        let ie3 = co(Octonion::zero(), e(3));
        assert_eq!(ie3.dagger(), ie3);
        let mut rng = ExactRng::seeded(23);
        for _ in 0..20 {
            let z = rng.complex_octonion();
            let w = rng.complex_octonion();
            assert_eq!(z.bar().bar(), z);
            assert_eq!(z.star().star(), z);
            assert_eq!(z.dagger().dagger(), z);
            assert_eq!((&z * &w).bar(), &w.bar() * &z.bar());
            assert_eq!((&z * &w).star(), &z.star() * &w.star());
            assert_eq!((&z * &w).dagger(), &w.dagger() * &z.dagger());
            assert!(z.vec().sc().is_zero());
        }
    }

    #[test]
    fn complex_inner_product() {
        let e1 = ComplexOctonion::basis(1);
        assert_eq!(e1.complex_inner(&e1), CRational::one());
        let ie2 = co(Octonion::zero(), e(2));
        assert_eq!(ie2.complex_inner(&ComplexOctonion::basis(2)), CRational::i());
        let mut rng = ExactRng::seeded(29);
        let s = CRational::i();
        let s2 = CRational::new(Rational::new(3, 5).unwrap(), Rational::new(4, 5).unwrap());
        for _ in 0..30 {
            let z = rng.complex_octonion();
            let w = rng.complex_octonion();
            let formula = CRational::new(&z.x.inner(&w.x) + &z.y.inner(&w.y), &z.y.inner(&w.x) - &z.x.inner(&w.y));
            assert_eq!(z.complex_inner(&w), formula);
            assert_eq!(z.complex_inner(&w), w.complex_inner(&z).conj());
            for s in [&s, &s2] {
                assert_eq!(z.scale(s).complex_inner(&w.scale(s)), z.complex_inner(&w));
            }
        }
    }

    #[test]
    fn z_zbar_examples() {
        assert!(co(e(1), e(2)).z_zbar_product().unwrap().is_zero());
        let x = oct([1, 2, 0, 0, 0, 0, 0, 3]);
        assert_eq!(ComplexOctonion::from_real(x.clone()).z_zbar_product().unwrap(), CRational::real(x.norm_sq()));
        let one = Octonion::one();
        assert_eq!(co(one.clone(), one).z_zbar_product().unwrap(), CRational::from_ints(0, 2));
        let mut rng = ExactRng::seeded(31);
        for _ in 0..20 {
            let z = rng.complex_octonion();
            let expected = CRational::new(&z.x.norm_sq() - &z.y.norm_sq(), z.x.inner(&z.y).mul_int(2));
            assert_eq!(z.z_zbar_product().unwrap(), expected);
        }
    }

    #[test]
    fn json_is_rational_strings() {
        let x = Octonion::new(std::array::from_fn(|k| Rational::new(k as i64, 2).unwrap()));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["0/1","1/2","1/1","3/2","2/1","5/2","3/1","7/2"]"#);
        let z = co(x.clone(), e(3));
        let back: ComplexOctonion = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        assert_eq!(back, z);
    }
}
