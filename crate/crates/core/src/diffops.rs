//! Differential operators acting exactly on polynomials.
//!
//! Everything is built from the formal partials `d/dz_j` and `d/dzbar_j`,
//! which treat `z_j` and `zbar_j` as independent. The operator written
//! `del_z(j)` here is `d/dx_j + i d/dy_j`; in the formal calculus it equals
//! `2 d/dzbar_j`, so it kills `z_j` and sends `zbar_j` to 2. Its conjugate
//! `del_zstar(j) = d/dx_j - i d/dy_j` equals `2 d/dz_j`.
//!
//! The octonionic operators need `n = 8`. The unit `e_u` pairs with variable
//! `u + 1`, and units act by left multiplication on the coefficients:
//!
//! ```text
//! D    = sum_u e_u del_z(u+1)          Dbar = del_z(1) - sum_{u>0} e_u del_z(u+1)
//! D+   = del_zstar(1) - sum_{u>0} e_u del_zstar(u+1)
//! dx   = sum_u e_u d/dx_{u+1}          dxbar = d/dx_1 - sum_{u>0} e_u d/dx_{u+1}
//! ```
//!
//! Compositions are applied one operator at a time. No operator identity is
//! assumed anywhere, so the factorization identities checked in the tests
//! are results of the computation.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::{Coeff, OPolynomial, Poly, PolyError};

/// Number of variables the octonionic operators act on.
pub const OCT_VARS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiffError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("octonionic operators need n = 8, got n = {0}")]
    NotOctonionic(usize),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("operator `{0}` does not apply to this kind of polynomial")]
    WrongKind(String),
}

fn check_index(j: usize, n: usize) -> Result<(), PolyError> {
    if j == 0 || j > n {
        Err(PolyError::Index { j, n })
    } else {
        Ok(())
    }
}

/// A scalar multiplier `k` or `k i` attached to one formal partial.
#[derive(Clone, Copy)]
struct Factor {
    k: i64,
    times_i: bool,
}

const ONE: Factor = Factor { k: 1, times_i: false };
const TWO: Factor = Factor { k: 2, times_i: false };
const PLUS_I: Factor = Factor { k: 1, times_i: true };
const MINUS_I: Factor = Factor { k: -1, times_i: true };

impl Factor {
    fn apply<C: Coeff>(self, c: &C, e: u32) -> C {
        let v = c.mul_int(self.k * e as i64);
        if self.times_i {
            v.mul_i()
        } else {
            v
        }
    }
}

/// `sum factor * d/d(slot)` over slots of the concatenated exponent vector,
/// computed in one pass over the terms.
fn partial_combo<C: Coeff>(p: &Poly<C>, parts: &[(usize, Factor)]) -> Poly<C> {
    let mut out = Poly::zero(p.n());
    for (m, c) in p.terms() {
        for &(slot, f) in parts {
            if let Some((e, lowered)) = m.lower(slot) {
                out.add_term(lowered, &f.apply(c, e));
            }
        }
    }
    out
}

fn partial<C: Coeff>(p: &Poly<C>, slot: usize, factor: i64) -> Poly<C> {
    partial_combo(p, &[(slot, Factor { k: factor, times_i: false })])
}

/// Slots and factors of `d/dx_j` and `d/dy_j` in the formal calculus.
fn dx_parts(n: usize, j: usize) -> [(usize, Factor); 2] {
    [(j - 1, ONE), (n + j - 1, ONE)]
}

fn dy_parts(n: usize, j: usize) -> [(usize, Factor); 2] {
    [(j - 1, PLUS_I), (n + j - 1, MINUS_I)]
}

/// `d/dz_j`, with `z_j`, `zbar_j` independent.
pub fn formal_dz<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial(p, j - 1, 1))
}

/// `d/dzbar_j`, with `z_j`, `zbar_j` independent.
pub fn formal_dzbar<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial(p, p.n() + j - 1, 1))
}

/// `d/dx_j + i d/dy_j = 2 d/dzbar_j`.
pub fn del_z<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial(p, p.n() + j - 1, 2))
}

/// `d/dx_j - i d/dy_j = 2 d/dz_j`.
pub fn del_zstar<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial(p, j - 1, 2))
}

/// `d/dx_j = d/dz_j + d/dzbar_j`.
pub fn dx<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial_combo(p, &dx_parts(p.n(), j)))
}

/// `d/dy_j = i (d/dz_j - d/dzbar_j)`.
pub fn dy<C: Coeff>(j: usize, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    check_index(j, p.n())?;
    Ok(partial_combo(p, &dy_parts(p.n(), j)))
}

/// First-order octonionic Cauchy-Riemann type operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrOperator {
    D,
    Dbar,
    Dplus,
    DxOct,
    DyOct,
    DxbarOct,
    DybarOct,
}

impl CrOperator {
    pub const ALL: [CrOperator; 7] = [
        CrOperator::D,
        CrOperator::Dbar,
        CrOperator::Dplus,
        CrOperator::DxOct,
        CrOperator::DyOct,
        CrOperator::DxbarOct,
        CrOperator::DybarOct,
    ];

    fn conjugated_units(self) -> bool {
        matches!(self, CrOperator::Dbar | CrOperator::Dplus | CrOperator::DxbarOct | CrOperator::DybarOct)
    }

    /// The scalar partial paired with variable `j`, as formal slots.
    fn parts(self, n: usize, j: usize) -> Vec<(usize, Factor)> {
        match self {
            CrOperator::D | CrOperator::Dbar => vec![(n + j - 1, TWO)],
            CrOperator::Dplus => vec![(j - 1, TWO)],
            CrOperator::DxOct | CrOperator::DxbarOct => dx_parts(n, j).to_vec(),
            CrOperator::DyOct | CrOperator::DybarOct => dy_parts(n, j).to_vec(),
        }
    }
}

/// Applies a first-order octonionic operator to an octonion-valued polynomial
/// in eight complex variables.
pub fn apply_cr(op: CrOperator, f: &OPolynomial) -> Result<OPolynomial, DiffError> {
    if f.n() != OCT_VARS {
        return Err(DiffError::NotOctonionic(f.n()));
    }
    let parts: Vec<Vec<(usize, Factor)>> = (0..8).map(|unit| op.parts(OCT_VARS, unit + 1)).collect();
    let mut out = OPolynomial::zero(OCT_VARS);
    for (m, c) in f.terms() {
        for (unit, unit_parts) in parts.iter().enumerate() {
            let negate = unit > 0 && op.conjugated_units();
            for &(slot, factor) in unit_parts {
                if let Some((e, lowered)) = m.lower(slot) {
                    let v = factor.apply(c, e).left_mul_unit(unit);
                    out.add_term(lowered, &if negate { -v } else { v });
                }
            }
        }
    }
    Ok(out)
}

/// Scalar second-order operators, valid for any `n` and coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SecondOrder {
    /// `sum_j d^2/dx_j^2`
    LaplaceX,
    /// `sum_j d^2/dy_j^2`
    LaplaceY,
    /// `LaplaceX + LaplaceY`
    Laplace,
    /// `LaplaceX - LaplaceY`
    Ultra,
    /// `2 sum_j d/dx_j d/dy_j`
    Mixed,
    /// `sum_j del_z(j)^2`
    L,
}

impl SecondOrder {
    pub const ALL: [SecondOrder; 6] = [
        SecondOrder::LaplaceX,
        SecondOrder::LaplaceY,
        SecondOrder::Laplace,
        SecondOrder::Ultra,
        SecondOrder::Mixed,
        SecondOrder::L,
    ];
}

fn sum_over_vars<C: Coeff>(
    p: &Poly<C>,
    each: impl Fn(usize, &Poly<C>) -> Result<Poly<C>, PolyError>,
) -> Result<Poly<C>, PolyError> {
    let mut out = Poly::zero(p.n());
    for j in 1..=p.n() {
        out.add_assign_ref(&each(j, p)?);
    }
    Ok(out)
}

pub fn apply_second_order<C: Coeff>(op: SecondOrder, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    match op {
        SecondOrder::LaplaceX => sum_over_vars(p, |j, q| dx(j, &dx(j, q)?)),
        SecondOrder::LaplaceY => sum_over_vars(p, |j, q| dy(j, &dy(j, q)?)),
        SecondOrder::Laplace => {
            Ok(&apply_second_order(SecondOrder::LaplaceX, p)? + &apply_second_order(SecondOrder::LaplaceY, p)?)
        }
        SecondOrder::Ultra => {
            Ok(&apply_second_order(SecondOrder::LaplaceX, p)? - &apply_second_order(SecondOrder::LaplaceY, p)?)
        }
        SecondOrder::Mixed => Ok(sum_over_vars(p, |j, q| dx(j, &dy(j, q)?))?.mul_int(2)),
        SecondOrder::L => sum_over_vars(p, |j, q| del_z(j, &del_z(j, q)?)),
    }
}

/// The ultrahyperbolic operator `sum_j del_z(j)^2`.
pub fn ultrahyperbolic<C: Coeff>(p: &Poly<C>) -> Poly<C> {
    apply_second_order(SecondOrder::L, p).expect("indices range over 1..=n")
}

/// Result of a monogenicity test; the residual is `D f`.
#[derive(Debug, Clone)]
pub struct MonogenicCheck {
    pub monogenic: bool,
    pub residual: OPolynomial,
}

/// Left monogenicity: `D f = 0`.
pub fn is_monogenic(f: &OPolynomial) -> Result<MonogenicCheck, DiffError> {
    let residual = apply_cr(CrOperator::D, f)?;
    Ok(MonogenicCheck { monogenic: residual.is_zero(), residual })
}

/// Checks the real system `dx g = dy h`, `dy g = -dx h` for `f = g + i h`,
/// where `g`, `h` are the octonion-valued real and imaginary parts of `f` as
/// functions of the real coordinates.
pub fn cr_system_check(f: &OPolynomial) -> Result<bool, DiffError> {
    let (g, h) = f.real_imag_parts();
    let first = apply_cr(CrOperator::DxOct, &g)? == apply_cr(CrOperator::DyOct, &h)?;
    let second = apply_cr(CrOperator::DyOct, &g)? == apply_cr(CrOperator::DxOct, &h)?.neg_ref();
    Ok(first && second)
}

/// Every operator name accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorTag {
    FormalDz(usize),
    FormalDzbar(usize),
    DelZ(usize),
    DelZstar(usize),
    Dx(usize),
    Dy(usize),
    Cr(CrOperator),
    Second(SecondOrder),
}

impl OperatorTag {
    /// Applies the operator to an octonion-valued polynomial.
    pub fn apply(self, f: &OPolynomial) -> Result<OPolynomial, DiffError> {
        Ok(match self {
            OperatorTag::FormalDz(j) => formal_dz(j, f)?,
            OperatorTag::FormalDzbar(j) => formal_dzbar(j, f)?,
            OperatorTag::DelZ(j) => del_z(j, f)?,
            OperatorTag::DelZstar(j) => del_zstar(j, f)?,
            OperatorTag::Dx(j) => dx(j, f)?,
            OperatorTag::Dy(j) => dy(j, f)?,
            OperatorTag::Cr(op) => apply_cr(op, f)?,
            OperatorTag::Second(op) => apply_second_order(op, f)?,
        })
    }

    /// Applies the operator to a scalar polynomial; octonionic operators are
    /// rejected.
    pub fn apply_scalar<C: Coeff>(self, p: &Poly<C>) -> Result<Poly<C>, DiffError> {
        Ok(match self {
            OperatorTag::FormalDz(j) => formal_dz(j, p)?,
            OperatorTag::FormalDzbar(j) => formal_dzbar(j, p)?,
            OperatorTag::DelZ(j) => del_z(j, p)?,
            OperatorTag::DelZstar(j) => del_zstar(j, p)?,
            OperatorTag::Dx(j) => dx(j, p)?,
            OperatorTag::Dy(j) => dy(j, p)?,
            OperatorTag::Second(op) => apply_second_order(op, p)?,
            OperatorTag::Cr(_) => return Err(DiffError::WrongKind(self.to_string())),
        })
    }
}

const INDEXED: [&str; 6] = ["formal_dz", "formal_dzbar", "del_z", "del_zstar", "dx", "dy"];

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OperatorTag::FormalDz(j) => return write!(f, "formal_dz_{j}"),
            OperatorTag::FormalDzbar(j) => return write!(f, "formal_dzbar_{j}"),
            OperatorTag::DelZ(j) => return write!(f, "del_z_{j}"),
            OperatorTag::DelZstar(j) => return write!(f, "del_zstar_{j}"),
            OperatorTag::Dx(j) => return write!(f, "dx_{j}"),
            OperatorTag::Dy(j) => return write!(f, "dy_{j}"),
            OperatorTag::Cr(CrOperator::D) => "D",
            OperatorTag::Cr(CrOperator::Dbar) => "Dbar",
            OperatorTag::Cr(CrOperator::Dplus) => "Dplus",
            OperatorTag::Cr(CrOperator::DxOct) => "dx_oct",
            OperatorTag::Cr(CrOperator::DyOct) => "dy_oct",
            OperatorTag::Cr(CrOperator::DxbarOct) => "dxbar_oct",
            OperatorTag::Cr(CrOperator::DybarOct) => "dybar_oct",
            OperatorTag::Second(SecondOrder::LaplaceX) => "laplace_x",
            OperatorTag::Second(SecondOrder::LaplaceY) => "laplace_y",
            OperatorTag::Second(SecondOrder::Laplace) => "laplace",
            OperatorTag::Second(SecondOrder::Ultra) => "ultra",
            OperatorTag::Second(SecondOrder::Mixed) => "mixed",
            OperatorTag::Second(SecondOrder::L) => "L",
        };
        f.write_str(name)
    }
}

impl FromStr for OperatorTag {
    type Err = DiffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fixed = CrOperator::ALL
            .iter()
            .map(|&op| OperatorTag::Cr(op))
            .chain(SecondOrder::ALL.iter().map(|&op| OperatorTag::Second(op)))
            .find(|tag| tag.to_string() == s);
        if let Some(tag) = fixed {
            return Ok(tag);
        }
        let unknown = || DiffError::UnknownOperator(s.to_string());
        let (name, idx) = s.rsplit_once('_').ok_or_else(unknown)?;
        let j: usize = idx.parse().map_err(|_| unknown())?;
        match INDEXED.iter().position(|&n| n == name) {
            Some(0) => Ok(OperatorTag::FormalDz(j)),
            Some(1) => Ok(OperatorTag::FormalDzbar(j)),
            Some(2) => Ok(OperatorTag::DelZ(j)),
            Some(3) => Ok(OperatorTag::DelZstar(j)),
            Some(4) => Ok(OperatorTag::Dx(j)),
            Some(5) => Ok(OperatorTag::Dy(j)),
            _ => Err(unknown()),
        }
    }
}
