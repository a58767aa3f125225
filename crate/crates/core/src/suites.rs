//! Seeded property suites behind `verify` and the acceptance tests.
//!
//! Every trial draws its inputs from its own generator, seeded from the suite
//! seed and the trial index, so results do not depend on execution order. A
//! failing property keeps the lowest-index counterexample, written out in
//! exact `p/q` form.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::{basis_product, check_multiplication_table, ComplexOctonion, Octonion};
use crate::diffops::{
    apply_cr, apply_second_order, cr_system_check, del_z, dx, dy, formal_dz, formal_dzbar, is_monogenic,
    ultrahyperbolic, CrOperator, SecondOrder, OCT_VARS,
};
use crate::exec::Execution;
use crate::kernel::{
    build_block, dim_formula, fischer_intersection, full_operator_matrix, kernel_basis_with, kernel_dimension,
    monogenic_from_kernel, octonionify, reference_basis, span_contains, verify_surjectivity, KernelBasis,
};
use crate::poly::{
    dim_homogeneous, random_homogeneous, random_homogeneous_octonion, random_x_only_octonion, CPolynomial, OPolynomial,
};
use crate::random::ExactRng;
use crate::scalar::CRational;

pub const DEFAULT_SEED: u64 = 1729;

/// Default trial counts: algebra, operators, kernel (monogenic seeds), fischer.
pub fn default_trials(suite: Suite) -> usize {
    match suite {
        Suite::Algebra => 1000,
        Suite::Operators => 100,
        Suite::Kernel => 20,
        Suite::Fischer => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Operators,
    Kernel,
    Fischer,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Algebra, Suite::Operators, Suite::Kernel, Suite::Fischer];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Algebra => "algebra",
            Suite::Operators => "operators",
            Suite::Kernel => "kernel",
            Suite::Fischer => "fischer",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected algebra, operators, kernel or fischer)"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// Per-trial seed (splitmix64 of the suite seed and index).
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `check` on `trials` inputs; `Err` carries the counterexample.
fn property<T, G, P>(name: &str, trials: usize, seed: u64, exec: Execution, generate: G, check: P) -> PropertyResult
where
    T: Send,
    G: Fn(&mut ExactRng, usize) -> T + Sync + Send,
    P: Fn(&T) -> Result<(), Value> + Sync + Send,
{
    let outcomes: Vec<Option<Value>> = exec.map_range(trials, |i| {
        let s = trial_seed(seed, i);
        let input = generate(&mut ExactRng::seeded(s), i);
        check(&input).err().map(|v| json!({ "trial": i, "trial_seed": s, "detail": v }))
    });
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    PropertyResult {
        name: name.to_string(),
        checked: trials,
        failures,
        passed: failures == 0,
        counterexample: outcomes.into_iter().flatten().next(),
    }
}

/// A single deterministic check.
fn structural(name: &str, outcome: Result<(), Value>) -> PropertyResult {
    let failed = outcome.is_err();
    PropertyResult {
        name: name.to_string(),
        checked: 1,
        failures: usize::from(failed),
        passed: !failed,
        counterexample: outcome.err(),
    }
}

fn finish(suite: Suite, seed: u64, trials: usize, properties: Vec<PropertyResult>) -> SuiteReport {
    let passed = properties.iter().all(|p| p.passed);
    SuiteReport { suite, seed, trials, passed, properties }
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64, exec: Execution) -> SuiteReport {
    match suite {
        Suite::Algebra => algebra_suite(trials, seed, exec),
        Suite::Operators => operator_suite(trials, seed, exec),
        Suite::Kernel => kernel_suite(trials, seed, exec),
        Suite::Fischer => fischer_suite(seed),
    }
}

fn oct_json(x: &Octonion) -> Value {
    serde_json::to_value(x).expect("octonions serialize")
}

fn coct_json(z: &ComplexOctonion) -> Value {
    serde_json::to_value(z).expect("complex octonions serialize")
}

fn poly_json<T: Serialize>(p: &T) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn equal_or<T: PartialEq>(lhs: &T, rhs: &T, dump: impl FnOnce() -> Value) -> Result<(), Value> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(dump())
    }
}

// ---------------------------------------------------------------- algebra

fn table_anticommutation() -> Result<(), Value> {
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = basis_product(i, j).expect("indices in range");
            let (t, l) = basis_product(j, i).expect("indices in range");
            let ok = match (i, j) {
                (0, _) | (_, 0) => s == 1 && t == 1 && k == i + j,
                _ if i == j => (s, k) == (-1, 0),
                _ => k == l && s == -t,
            };
            if !ok {
                return Err(json!({ "i": i, "j": j, "e_i e_j": [s, k], "e_j e_i": [t, l] }));
            }
        }
    }
    Ok(())
}

pub fn algebra_suite(trials: usize, seed: u64, exec: Execution) -> SuiteReport {
    let pair = |r: &mut ExactRng, _: usize| (r.octonion(), r.octonion());
    let triple = |r: &mut ExactRng, _: usize| (r.octonion(), r.octonion(), r.octonion());
    let mut props = vec![
        structural("table_anticommutation", table_anticommutation()),
        structural("table_matches_cayley_dickson", check_multiplication_table().map_err(|e| json!(e.to_string()))),
        structural("zero_divisor_witness", {
            let z = ComplexOctonion::new(Octonion::basis(1), Octonion::basis(2));
            match z.z_zbar_product() {
                Ok(c) if c.is_zero() && !z.is_zero() => Ok(()),
                other => Err(json!(format!("{other:?}"))),
            }
        }),
    ];
    props.push(property("alternativity", trials, seed, exec, pair, |(x, y)| {
        let xx = x * x;
        let yy = y * y;
        let xy = x * y;
        let ok = x * &xy == &xx * y && &xy * y == x * &yy && &xy * x == x * &(y * x);
        if ok {
            Ok(())
        } else {
            Err(json!({ "x": oct_json(x), "y": oct_json(y) }))
        }
    }));
    props.push(property("moufang", trials, seed, exec, triple, |(x, y, z)| {
        let yz = y * z;
        let a = &(x * y) * &(z * x);
        let b = &(x * &yz) * x;
        let c = x * &(&yz * x);
        if a == b && b == c {
            Ok(())
        } else {
            Err(json!({ "x": oct_json(x), "y": oct_json(y), "z": oct_json(z) }))
        }
    }));
    props.push(property("norm_composition", trials, seed, exec, pair, |(x, y)| {
        equal_or(&(x * y).norm_sq(), &(&x.norm_sq() * &y.norm_sq()), || json!({ "x": oct_json(x), "y": oct_json(y) }))
    }));
    props.push(property("conjugation_antihomomorphism", trials, seed, exec, pair, |(x, y)| {
        equal_or(&(x * y).conj(), &(&y.conj() * &x.conj()), || json!({ "x": oct_json(x), "y": oct_json(y) }))
    }));
    // Sc(xy) = Sc(ac) - Sc(conj(b) d) for x = a + b e4, y = c + d e4.
    props.push(property("scalar_part_formula", trials, seed, exec, pair, |(x, y)| {
        let (a, b) = x.to_quaternion_pair();
        let (c, d) = y.to_quaternion_pair();
        let rhs = &(&a * &c).sc() - &(&b.conj() * &d).sc();
        equal_or(&(x * y).sc(), &rhs, || json!({ "x": oct_json(x), "y": oct_json(y) }))
    }));
    props.push(property(
        "linearized_alternativity",
        trials,
        seed,
        exec,
        |r, _| r.octonion(),
        |c| {
            for i in 0..8 {
                for j in 0..8 {
                    let (ei, ej) = (Octonion::basis(i), Octonion::basis(j));
                    let lhs = &(&ei * &(&ej * c)) + &(&ej * &(&ei * c));
                    let rhs = &(&(&ei * &ej) + &(&ej * &ei)) * c;
                    if lhs != rhs {
                        return Err(json!({ "i": i, "j": j, "c": oct_json(c) }));
                    }
                }
            }
            Ok(())
        },
    ));
    props.push(property(
        "inverse",
        trials,
        seed,
        exec,
        |r, _| r.octonion(),
        |x| match x.inverse() {
            Ok(inv) if (x * &inv).is_one() && (&inv * x).is_one() => Ok(()),
            Err(_) if x.is_zero() => Ok(()),
            _ => Err(json!({ "x": oct_json(x) })),
        },
    ));
    props.push(property(
        "complexified_alternativity_octonion_factor",
        trials,
        seed,
        exec,
        |r, _| (ComplexOctonion::from_real(r.octonion()), r.complex_octonion()),
        |(x, z)| {
            let xx = x * x;
            let ok = x * &(x * z) == &xx * z && &(z * x) * x == z * &xx;
            if ok {
                Ok(())
            } else {
                Err(json!({ "x": coct_json(x), "z": coct_json(z) }))
            }
        },
    ));
    props.push(property(
        "involutions",
        trials,
        seed,
        exec,
        |r, _| (r.complex_octonion(), r.complex_octonion()),
        |(z, w)| {
            let zw = z * w;
            let ok = z.bar().bar() == *z
                && z.star().star() == *z
                && z.dagger().dagger() == *z
                && zw.bar() == &w.bar() * &z.bar()
                && zw.star() == &z.star() * &w.star()
                && zw.dagger() == &w.dagger() * &z.dagger();
            if ok {
                Ok(())
            } else {
                Err(json!({ "z": coct_json(z), "w": coct_json(w) }))
            }
        },
    ));
    props.push(property(
        "complex_inner_product",
        trials,
        seed,
        exec,
        |r, _| (r.complex_octonion(), r.complex_octonion()),
        |(z, w)| {
            let (x, y, u, v) = (z.re(), z.im(), w.re(), w.im());
            let expected = CRational::new(&x.inner(u) + &y.inner(v), &y.inner(u) - &x.inner(v));
            let ip = z.complex_inner(w);
            let i = CRational::i();
            let rotated = z.scale(&i).complex_inner(&w.scale(&i));
            let ok = ip == expected && w.complex_inner(z) == ip.conj() && rotated == ip;
            if ok {
                Ok(())
            } else {
                Err(json!({ "z": coct_json(z), "w": coct_json(w) }))
            }
        },
    ));
    props.push(property(
        "hermitian_positivity",
        trials,
        seed,
        exec,
        |r, _| r.complex_octonion(),
        |z| {
            if z.is_zero() {
                return Ok(());
            }
            let ip = z.complex_inner(z);
            if ip.im.is_zero() && ip.re > num_traits::Zero::zero() {
                Ok(())
            } else {
                Err(json!({ "z": coct_json(z) }))
            }
        },
    ));
    props.push(property(
        "z_zbar_scalar",
        trials,
        seed,
        exec,
        |r, _| r.complex_octonion(),
        |z| {
            let (x, y) = (z.re(), z.im());
            let expected = CRational::new(&x.norm_sq() - &y.norm_sq(), x.inner(y).mul_int(2));
            match z.z_zbar_product() {
                Ok(c) if c == expected => Ok(()),
                _ => Err(json!({ "z": coct_json(z) })),
            }
        },
    ));
    finish(Suite::Algebra, seed, trials, props)
}

// -------------------------------------------------------------- operators

fn cr(op: CrOperator, f: &OPolynomial) -> OPolynomial {
    apply_cr(op, f).expect("suite polynomials have n = 8")
}

fn second(op: SecondOrder, f: &OPolynomial) -> OPolynomial {
    apply_second_order(op, f).expect("indices in range")
}

/// Every second-order image of `f` the identities compare, computed once.
pub struct OperatorImages {
    pub d_dbar: OPolynomial,
    pub dbar_d: OPolynomial,
    pub d_dplus: OPolynomial,
    pub dplus_d: OPolynomial,
    pub dy_dxbar: OPolynomial,
    pub dx_dybar: OPolynomial,
    pub dxbar_dy: OPolynomial,
    pub dybar_dx: OPolynomial,
    pub ultra: OPolynomial,
    pub mixed: OPolynomial,
    pub laplace: OPolynomial,
}

impl OperatorImages {
    pub fn of(f: &OPolynomial) -> Self {
        let d = cr(CrOperator::D, f);
        let (fx, fy) = (cr(CrOperator::DxOct, f), cr(CrOperator::DyOct, f));
        let (fxbar, fybar) = (cr(CrOperator::DxbarOct, f), cr(CrOperator::DybarOct, f));
        Self {
            d_dbar: cr(CrOperator::D, &cr(CrOperator::Dbar, f)),
            dbar_d: cr(CrOperator::Dbar, &d),
            d_dplus: cr(CrOperator::D, &cr(CrOperator::Dplus, f)),
            dplus_d: cr(CrOperator::Dplus, &d),
            dy_dxbar: cr(CrOperator::DyOct, &fxbar),
            dx_dybar: cr(CrOperator::DxOct, &fybar),
            dxbar_dy: cr(CrOperator::DxbarOct, &fy),
            dybar_dx: cr(CrOperator::DybarOct, &fx),
            ultra: second(SecondOrder::Ultra, f),
            mixed: second(SecondOrder::Mixed, f),
            laplace: second(SecondOrder::Laplace, f),
        }
    }

    /// `ultra + i mixed`.
    fn l_form(&self) -> OPolynomial {
        &self.ultra + &self.mixed.mul_i()
    }

    /// `Laplace + i (dy dxbar - dx dybar)`.
    fn dplus_form(&self) -> OPolynomial {
        &self.laplace + &(&self.dy_dxbar - &self.dx_dybar).mul_i()
    }
}

/// An identity as `(name, images -> (lhs, rhs))`. All of them are linear in
/// `f`, which makes single-term shrinking valid.
type Identity = (&'static str, fn(&OperatorImages) -> (OPolynomial, OPolynomial));

pub const OPERATOR_IDENTITIES: [Identity; 8] = [
    ("d_dbar_commute", |m| (m.d_dbar.clone(), m.dbar_d.clone())),
    ("d_dbar_formula", |m| (m.d_dbar.clone(), m.l_form())),
    ("dbar_d_formula", |m| (m.dbar_d.clone(), m.l_form())),
    ("d_dplus_formula", |m| (m.d_dplus.clone(), m.dplus_form())),
    ("dplus_d_formula", |m| (m.dplus_d.clone(), m.dplus_form())),
    ("d_dplus_commute", |m| (m.d_dplus.clone(), m.dplus_d.clone())),
    // D+ D = Laplace + i (dxbar dy - dybar dx), the mirrored order.
    ("dplus_d_mirrored_formula", |m| (m.dplus_d.clone(), &m.laplace + &(&m.dxbar_dy - &m.dybar_dx).mul_i())),
    ("quaternionic_reduction", |m| (&m.dy_dxbar + &m.dx_dybar, m.mixed.clone())),
];

fn holds(identity: fn(&OperatorImages) -> (OPolynomial, OPolynomial), images: &OperatorImages) -> bool {
    let (l, r) = identity(images);
    l == r
}

/// Finds the first single term of `f` violating a linear identity.
fn shrink_linear(f: &OPolynomial, identity: fn(&OperatorImages) -> (OPolynomial, OPolynomial)) -> Value {
    for (m, c) in f.terms() {
        let term = OPolynomial::from_terms(f.n(), [(m.clone(), c.clone())]);
        if holds(identity, &OperatorImages::of(&term)) {
            continue;
        }
        // A unit coefficient gives the smallest witness when it also fails.
        let unit = OPolynomial::from_terms(f.n(), [(m.clone(), ComplexOctonion::one())]);
        let witness = if holds(identity, &OperatorImages::of(&unit)) { term } else { unit };
        let (l, r) = identity(&OperatorImages::of(&witness));
        return json!({
            "f": poly_json(&witness),
            "lhs": poly_json(&l),
            "rhs": poly_json(&r),
            "lhs_minus_rhs": poly_json(&(&l - &r)),
        });
    }
    json!("no single-term witness")
}

/// Degree of the `i`-th random sample: 2, 3, 4, 2, ...
pub fn sample_degree(i: usize) -> u32 {
    2 + (i % 3) as u32
}

pub fn operator_suite(trials: usize, seed: u64, exec: Execution) -> SuiteReport {
    let sample = |i: usize| {
        let s = trial_seed(seed, i);
        (s, random_homogeneous_octonion(OCT_VARS, sample_degree(i), s).expect("n = 8"))
    };
    // One row of outcomes per sample; images are dropped after each row.
    let outcomes: Vec<(Vec<bool>, bool)> = exec.map_range(trials, |i| {
        let (_, f) = sample(i);
        let images = OperatorImages::of(&f);
        let row = OPERATOR_IDENTITIES.iter().map(|(_, id)| holds(*id, &images)).collect();
        let k = sample_degree(i);
        let drop_ok = CrOperator::ALL.iter().all(|&op| {
            let g = cr(op, &f);
            g.is_zero() || g.is_homogeneous_of(k - 1)
        });
        (row, drop_ok)
    });
    let mut props = Vec::new();
    for (col, (name, identity)) in OPERATOR_IDENTITIES.iter().enumerate() {
        let first = outcomes.iter().position(|(row, _)| !row[col]);
        let counterexample = first.map(|i| {
            let (s, f) = sample(i);
            json!({
                "trial": i,
                "trial_seed": s,
                "generator": "random_homogeneous_octonion",
                "n": OCT_VARS,
                "k": sample_degree(i),
                "terms": f.len(),
                "single_term_witness": shrink_linear(&f, *identity),
            })
        });
        let failures = outcomes.iter().filter(|(row, _)| !row[col]).count();
        props.push(PropertyResult {
            name: name.to_string(),
            checked: trials,
            failures,
            passed: failures == 0,
            counterexample,
        });
    }
    let drop_failures = outcomes.iter().filter(|(_, ok)| !ok).count();
    props.push(PropertyResult {
        name: "degree_drop".to_string(),
        checked: trials,
        failures: drop_failures,
        passed: drop_failures == 0,
        counterexample: outcomes
            .iter()
            .position(|(_, ok)| !ok)
            .map(|i| json!({ "trial": i, "trial_seed": sample(i).0 })),
    });

    let scalar = |r: &mut ExactRng, i: usize| {
        let n = 1 + r.below(4);
        random_homogeneous(n, sample_degree(i), r.below(u32::MAX as usize) as u64).expect("n >= 1")
    };
    props.push(property("formal_partials_commute", trials, seed, exec, scalar, |p| {
        for i in 1..=p.n() {
            for j in 1..=p.n() {
                let a = formal_dz(i, &formal_dzbar(j, p).unwrap()).unwrap();
                let b = formal_dzbar(j, &formal_dz(i, p).unwrap()).unwrap();
                let c = formal_dz(i, &formal_dz(j, p).unwrap()).unwrap();
                let d = formal_dz(j, &formal_dz(i, p).unwrap()).unwrap();
                if a != b || c != d {
                    return Err(json!({ "p": poly_json(p), "i": i, "j": j }));
                }
            }
        }
        Ok(())
    }));
    props.push(property("coordinate_bridge", trials, seed, exec, scalar, |p| {
        for j in 1..=p.n() {
            let lhs = del_z(j, p).unwrap();
            let rhs = &dx(j, p).unwrap() + &dy(j, p).unwrap().mul_i();
            if lhs != rhs {
                return Err(json!({ "p": poly_json(p), "j": j }));
            }
        }
        Ok(())
    }));
    props.push(property(
        "real_factorization",
        trials,
        seed,
        exec,
        |r, i| random_x_only_octonion(OCT_VARS, sample_degree(i), r.below(u32::MAX as usize) as u64).expect("n = 8"),
        |f| {
            let a = cr(CrOperator::DxOct, &cr(CrOperator::DxbarOct, f));
            let b = cr(CrOperator::DxbarOct, &cr(CrOperator::DxOct, f));
            let lap = second(SecondOrder::LaplaceX, f);
            if a == lap && b == lap {
                Ok(())
            } else {
                Err(json!({ "f": poly_json(f) }))
            }
        },
    ));

    // Monogenic against non-monogenic samples, twice the trial count.
    let mixed = mixed_monogenic_samples(2 * trials, seed, exec);
    props.push(property(
        "monogenic_iff_cr_system",
        mixed.len(),
        seed,
        exec,
        |_, i| i,
        |&i| {
            let f = &mixed[i];
            let a = is_monogenic(f).expect("n = 8").monogenic;
            let b = cr_system_check(f).expect("n = 8");
            if a == b {
                Ok(())
            } else {
                Err(json!({ "f": poly_json(f), "is_monogenic": a, "cr_system": b }))
            }
        },
    ));
    props.push(property(
        "monogenic_components_null",
        mixed.len(),
        seed,
        exec,
        |_, i| i,
        |&i| {
            let f = &mixed[i];
            if !is_monogenic(f).expect("n = 8").monogenic {
                return Ok(());
            }
            for (j, comp) in f.components().iter().enumerate() {
                if !ultrahyperbolic(comp).is_zero() {
                    return Err(json!({ "f": poly_json(f), "component": j }));
                }
            }
            Ok(())
        },
    ));
    finish(Suite::Operators, seed, trials, props)
}

/// A random octonion combination of a few kernel elements.
pub fn random_kernel_element(basis: &KernelBasis, rng: &mut ExactRng, picks: usize) -> OPolynomial {
    let mut coeffs = vec![ComplexOctonion::zero(); basis.len()];
    for _ in 0..picks {
        let j = rng.below(basis.len());
        coeffs[j] = rng.int_complex_octonion();
    }
    octonionify(basis, &coeffs).expect("length matches")
}

/// Even indices are monogenic `Dbar P` with `P` from the kernel, odd
/// indices are random polynomials of low degree.
pub fn mixed_monogenic_samples(count: usize, seed: u64, exec: Execution) -> Vec<OPolynomial> {
    let bases: Vec<KernelBasis> = (2..=4).map(|k| kernel_basis_with(OCT_VARS, k, exec).expect("n = 8")).collect();
    exec.map_range(count, |i| {
        let mut rng = ExactRng::seeded(trial_seed(seed ^ 0xC0FFEE, i));
        let k = 1 + (i / 2 % 3) as u32;
        if i % 2 == 0 {
            let p = random_kernel_element(&bases[k as usize - 1], &mut rng, 6);
            monogenic_from_kernel(&p).expect("kernel elements")
        } else {
            let s = rng.below(u32::MAX as usize) as u64;
            random_homogeneous_octonion(OCT_VARS, k, s).expect("n = 8")
        }
    })
}

// ----------------------------------------------------------------- kernel

/// `(n, k)` pairs covered by the dimension checks.
pub fn dimension_cases() -> Vec<(usize, u32)> {
    let mut v: Vec<(usize, u32)> = (1..=3).flat_map(|n| (0..=6).map(move |k| (n, k))).collect();
    v.extend((0..=4).map(|k| (8, k)));
    v
}

pub fn kernel_suite(trials: usize, seed: u64, exec: Execution) -> SuiteReport {
    let mut props = Vec::new();
    let cases = dimension_cases();
    let bases: Vec<KernelBasis> = cases.iter().map(|&(n, k)| kernel_basis_with(n, k, exec).expect("n >= 1")).collect();

    props.push(structural("dimension_formula", {
        let bad: Vec<Value> = bases
            .iter()
            .filter(|b| b.len() as u128 != dim_formula(b.n, b.k))
            .map(|b| json!({ "n": b.n, "k": b.k, "computed": b.len(), "formula": dim_formula(b.n, b.k) as u64 }))
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("basis_annihilated", {
        let bad: Vec<Value> = bases
            .iter()
            .flat_map(|b| b.polynomials.iter().map(move |p| (b, p)))
            .filter(|(_, p)| !ultrahyperbolic(p).is_zero())
            .map(|(b, p)| json!({ "n": b.n, "k": b.k, "p": poly_json(p) }))
            .take(1)
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("basis_independent", {
        let bad: Vec<Value> =
            bases.iter().filter(|b| b.n <= 3 && !b.is_independent()).map(|b| json!({ "n": b.n, "k": b.k })).collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("block_full_row_rank", {
        let mut bad = Vec::new();
        for n in 1..=8 {
            for m in 0..=6 {
                let b = build_block(n, m).expect("n >= 1");
                let r = b.rank();
                if r != b.rows.len() {
                    bad.push(json!({ "n": n, "m": m, "rank": r, "rows": b.rows.len() }));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("block_independence", {
        let mut bad = Vec::new();
        for n in 1..=2 {
            for k in 0..=4 {
                let full = full_operator_matrix(n, k).expect("n >= 1");
                let nullity = (full.cols() - full.rank()) as u128;
                let blocks = kernel_dimension(n, k).expect("n >= 1");
                if nullity != blocks {
                    bad.push(json!({ "n": n, "k": k, "full": nullity as u64, "blocks": blocks as u64 }));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("rank_nullity", {
        let bad: Vec<Value> = cases
            .iter()
            .filter(|&&(_, k)| k >= 2)
            .filter_map(|&(n, k)| {
                let s = verify_surjectivity(n, k).expect("k >= 2");
                let ok = s.surjective && dim_homogeneous(n, k as usize) == dim_formula(n, k) + s.expected;
                (!ok).then(|| json!({ "n": n, "k": k, "rank": s.rank as u64, "expected": s.expected as u64 }))
            })
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    props.push(structural("reference_bases", check_reference_bases(exec)));

    // Monogenic chain: Q_k = Dbar P_{k+1} for k = 1, 2, 3.
    let lifts: Vec<&KernelBasis> =
        (2..=4).map(|k| bases.iter().find(|b| b.n == 8 && b.k == k).expect("cached")).collect();
    props.push(property(
        "monogenic_chain",
        3 * trials,
        seed,
        exec,
        |r, i| {
            let k = 1 + (i % 3) as u32;
            (k, random_kernel_element(lifts[k as usize - 1], r, 6))
        },
        |(k, p)| {
            let q = monogenic_from_kernel(p).map_err(|e| json!(e.to_string()))?;
            let residual = cr(CrOperator::D, &q);
            let null_components = q.components().iter().all(|c| ultrahyperbolic(c).is_zero());
            if residual.is_zero() && (q.is_zero() || q.is_homogeneous_of(*k)) && null_components {
                Ok(())
            } else {
                Err(json!({ "k": k, "p": poly_json(p), "residual": poly_json(&residual) }))
            }
        },
    ));
    let h2 = lifts[0];
    props.push(property(
        "octonionify_components_in_span",
        trials,
        seed,
        exec,
        |r, _| random_kernel_element(h2, r, 4),
        |p| {
            for (j, c) in p.components().iter().enumerate() {
                if !span_contains(h2, c).map_err(|e| json!(e.to_string()))? {
                    return Err(json!({ "p": poly_json(p), "component": j }));
                }
            }
            Ok(())
        },
    ));
    finish(Suite::Kernel, seed, trials, props)
}

/// Golden-table check: every listed polynomial is annihilated and lies in
/// the computed span, and each list is independent with the right size.
pub fn check_reference_bases(exec: Execution) -> Result<(), Value> {
    let mut bad = Vec::new();
    for &(n, k, _) in crate::kernel::REFERENCE_BASES {
        let listed = reference_basis(n, k).expect("entry exists");
        let basis = kernel_basis_with(n, k, exec).expect("n >= 1");
        let annihilated = listed.iter().all(|p| ultrahyperbolic(p).is_zero());
        let inside = listed.iter().all(|p| span_contains(&basis, p).unwrap_or(false));
        let independent = KernelBasis { n, k, polynomials: listed.clone() }.is_independent();
        let count = listed.len() as u128 == dim_formula(n, k);
        if !(annihilated && inside && independent && count) {
            bad.push(json!({
                "n": n, "k": k, "annihilated": annihilated, "in_span": inside,
                "independent": independent, "count": listed.len(),
            }));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(json!(bad))
    }
}

// ---------------------------------------------------------------- fischer

pub fn fischer_suite(seed: u64) -> SuiteReport {
    let mut props = Vec::new();
    props.push(structural("intersection_1_2_is_z_squared", {
        let r = fischer_intersection(1, 2).expect("k >= 2");
        let z2 = CPolynomial::z(1, 1).expect("index 1").pow(2);
        if r.dim == 1 && r.dim_by_union == 1 && r.witnesses == vec![z2] {
            Ok(())
        } else {
            Err(poly_json(&r))
        }
    }));
    props.push(structural("intersection_2_2_contains_quadric", {
        let r = fischer_intersection(2, 2).expect("k >= 2");
        let q = crate::kernel::quadric(2).expect("n >= 1");
        if r.dim >= 1 && r.witnesses.contains(&q) {
            Ok(())
        } else {
            Err(poly_json(&r))
        }
    }));
    // L(Q r) = Q L(r) because Q depends on z only, so the intersection is
    // Q H_{k-2} and has dimension dim H_{k-2}.
    props.push(structural("intersection_is_q_times_lower_kernel", {
        let mut bad = Vec::new();
        for n in 1..=3 {
            for k in 2..=5 {
                let r = fischer_intersection(n, k).expect("k >= 2");
                let lower = dim_formula(n, k - 2) as usize;
                let witnesses_ok = r.witnesses.iter().all(|w| ultrahyperbolic(w).is_zero() && w.is_homogeneous_of(k));
                if r.dim != lower || r.dim_by_union != lower || !witnesses_ok {
                    bad.push(json!({ "n": n, "k": k, "dim": r.dim, "by_union": r.dim_by_union, "expected": lower }));
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(json!(bad))
        }
    }));
    finish(Suite::Fischer, seed, 0, props)
}
