//! Floating-point checks for the one-variable operator `L = (d/dx + i d/dy)^2`.
//!
//! `E(z) = conj(z) / (4 pi z)` satisfies `L E = delta`. Three things are
//! checked numerically: the finite-difference residual of `L E` away from the
//! origin, the pairing `<E, L phi> = phi(0)` against Gaussian test functions,
//! and the symmetric-cutoff limit of `int cos(t)^(n-1) / sin(t) F(t) dt`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::exec::{pairwise_sum, Execution};
use crate::random::ExactRng;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FundsolError {
    #[error("E is singular at the origin")]
    SingularPoint,
    #[error("stencil of half-width {h} reaches within 4h of the origin at |z| = {modulus}")]
    StencilTouchesOrigin { modulus: f64, h: f64 },
    #[error("truncation radius {radius} is below 8 sigma = {needed}")]
    TruncationTooSmall { radius: f64, needed: f64 },
    #[error("grid needs at least one cell")]
    EmptyGrid,
    #[error("sigma must be positive and finite, got {0}")]
    BadSigma(f64),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("vectors of lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("cutoffs must be strictly decreasing in (0, pi/2)")]
    BadEpsilons,
    #[error("weight exponent needs n >= 1")]
    BadDimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub fn new(x: f64, y: f64) -> Result<Self, FundsolError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(FundsolError::NonFinite)
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn modulus(self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// `exp(-|z - c|^2 / (2 sigma^2))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianTest {
    pub sigma: f64,
    pub center: ComplexPoint,
}

impl GaussianTest {
    pub fn new(sigma: f64, center: ComplexPoint) -> Result<Self, FundsolError> {
        if sigma > 0.0 && sigma.is_finite() {
            Ok(Self { sigma, center })
        } else {
            Err(FundsolError::BadSigma(sigma))
        }
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        let (u, v) = (x - self.center.x, y - self.center.y);
        (-(u * u + v * v) / (2.0 * self.sigma * self.sigma)).exp()
    }

    /// `L phi = (w / sigma^2)^2 phi` with `w = (x - cx) + i (y - cy)`: the
    /// operator `d/dx + i d/dy` annihilates `w`, so each application only
    /// brings down `-w / sigma^2`.
    pub fn l_applied(&self, x: f64, y: f64) -> Complex64 {
        let w = Complex64::new(x - self.center.x, y - self.center.y);
        let s2 = self.sigma * self.sigma;
        (w * w) / (s2 * s2) * self.value(x, y)
    }

    /// `phi(0)`.
    pub fn at_origin(&self) -> f64 {
        self.value(0.0, 0.0)
    }
}

/// `E(z) = conj(z) / (4 pi z)`.
pub fn e1(z: ComplexPoint) -> Result<Complex64, FundsolError> {
    let w = z.to_c64();
    if w == Complex64::new(0.0, 0.0) {
        return Err(FundsolError::SingularPoint);
    }
    Ok(w.conj() / (4.0 * PI * w))
}

fn e1_raw(x: f64, y: f64) -> Complex64 {
    let w = Complex64::new(x, y);
    w.conj() / (4.0 * PI * w)
}

/// Central-difference value of `(d_xx - d_yy + 2i d_xy) E` at `z`.
pub fn residual_l_e1(z: ComplexPoint, h: f64) -> Result<Complex64, FundsolError> {
    let r = z.modulus();
    if h.is_nan() || h <= 0.0 || r <= 4.0 * h {
        return Err(FundsolError::StencilTouchesOrigin { modulus: r, h });
    }
    let (x, y) = (z.x, z.y);
    let c = e1_raw(x, y);
    let exx = (e1_raw(x + h, y) - 2.0 * c + e1_raw(x - h, y)) / (h * h);
    let eyy = (e1_raw(x, y + h) - 2.0 * c + e1_raw(x, y - h)) / (h * h);
    let exy =
        (e1_raw(x + h, y + h) - e1_raw(x + h, y - h) - e1_raw(x - h, y + h) + e1_raw(x - h, y - h)) / (4.0 * h * h);
    Ok(exx - eyy + Complex64::new(0.0, 2.0) * exy)
}

/// Square midpoint grid centered on the test function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    /// Cells per side.
    pub cells: usize,
    /// Half-width of the square.
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairingReport {
    pub sigma: f64,
    pub computed: [f64; 2],
    pub expected: f64,
    pub abs_error: f64,
    pub grid: Grid,
    /// Upper bound for the contribution of a skipped cell whose midpoint is
    /// the origin; zero when no cell was skipped.
    pub skipped_cell_bound: f64,
}

/// Midpoint-rule value of `int E (L phi) dx dy`, which should equal `phi(0)`.
pub fn delta_pairing(phi: &GaussianTest, grid: Grid, exec: Execution) -> Result<PairingReport, FundsolError> {
    let needed = 8.0 * phi.sigma;
    if grid.radius < needed {
        return Err(FundsolError::TruncationTooSmall { radius: grid.radius, needed });
    }
    if grid.cells == 0 {
        return Err(FundsolError::EmptyGrid);
    }
    let h = 2.0 * grid.radius / grid.cells as f64;
    let x0 = phi.center.x - grid.radius + 0.5 * h;
    let y0 = phi.center.y - grid.radius + 0.5 * h;
    let rows: Vec<(f64, f64, bool)> = exec.map_range(grid.cells, |i| {
        let y = y0 + i as f64 * h;
        let mut re = Vec::with_capacity(grid.cells);
        let mut im = Vec::with_capacity(grid.cells);
        let mut skipped = false;
        for j in 0..grid.cells {
            let x = x0 + j as f64 * h;
            if x == 0.0 && y == 0.0 {
                skipped = true;
                continue;
            }
            let v = e1_raw(x, y) * phi.l_applied(x, y);
            re.push(v.re);
            im.push(v.im);
        }
        (pairwise_sum(&re), pairwise_sum(&im), skipped)
    });
    let area = h * h;
    let re: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let im: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let computed = [pairwise_sum(&re) * area, pairwise_sum(&im) * area];
    let expected = phi.at_origin();
    let abs_error = Complex64::new(computed[0] - expected, computed[1]).norm();
    let skipped_cell_bound = if rows.iter().any(|r| r.2) {
        // |E| = 1/(4 pi) and |L phi| <= max_r r^2 e^{-r^2/2s^2} / s^4 = 2 / (e s^2).
        area / (4.0 * PI) * 2.0 / (std::f64::consts::E * phi.sigma * phi.sigma)
    } else {
        0.0
    };
    Ok(PairingReport { sigma: phi.sigma, computed, expected, abs_error, grid, skipped_cell_bound })
}

/// `-|xi|^2 + |eta|^2 - 2i <xi, eta>`.
pub fn symbol(xi: &[f64], eta: &[f64]) -> Result<Complex64, FundsolError> {
    if xi.len() != eta.len() {
        return Err(FundsolError::LengthMismatch(xi.len(), eta.len()));
    }
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>();
    Ok(Complex64::new(-dot(xi, xi) + dot(eta, eta), -2.0 * dot(xi, eta)))
}

/// A pair with `|xi| = |eta|` and `<xi, eta> = 0`, built from small integers
/// so both conditions hold exactly in floating point. Needs `n >= 2`.
pub fn characteristic_pair(n: usize, rng: &mut ExactRng) -> Option<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return None;
    }
    loop {
        let mut xi = vec![0.0; n];
        let mut eta = vec![0.0; n];
        // Rotate each coordinate pair by a quarter turn.
        for p in 0..n / 2 {
            let (a, b) = (rng.int() as f64, rng.int() as f64);
            xi[2 * p] = a;
            xi[2 * p + 1] = b;
            eta[2 * p] = -b;
            eta[2 * p + 1] = a;
        }
        if xi.iter().any(|&v| v != 0.0) {
            return Some((xi, eta));
        }
    }
}

/// How the neighbourhood of `t = 0` is removed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cutoff {
    /// `[-pi/2, -eps] ∪ [eps, pi/2]`.
    Symmetric,
    /// `[-pi/2, -eps] ∪ [ratio * eps, pi/2]`. Converges, but to the principal
    /// value minus `F(0) ln(ratio)`.
    Scaled { ratio: f64 },
    /// `[-pi/2, -eps] ∪ [eps^exponent, pi/2]`. For `exponent > 1` the
    /// right-hand gap shrinks faster and the values drift like
    /// `F(0) (exponent - 1) ln(1/eps)`.
    Power { exponent: f64 },
}

impl Cutoff {
    fn right(self, eps: f64) -> f64 {
        match self {
            Cutoff::Symmetric => eps,
            Cutoff::Scaled { ratio } => ratio * eps,
            Cutoff::Power { exponent } => eps.powf(exponent),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PVReport {
    pub n: u32,
    pub cutoff: Cutoff,
    pub epsilon_sequence: Vec<f64>,
    /// `[re, im]` for each cutoff.
    pub partial_values: Vec<[f64; 2]>,
    /// Richardson estimate from the last two cutoffs, assuming an error linear
    /// in `eps`.
    pub extrapolated: [f64; 2],
    /// Distance between the last two partial values.
    pub spread: f64,
    pub tolerance: f64,
    pub converged: bool,
}

/// Gauss-Legendre on geometric panels `[a, 2a], [2a, 4a], ...`, which resolves
/// the `1/t` growth next to the cut.
fn graded_integral(gl: &GaussLegendre, a: f64, b: f64, f: &dyn Fn(f64) -> Complex64) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    let mut lo = a;
    while lo < b {
        let hi = (2.0 * lo).min(b);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut s = Complex64::new(0.0, 0.0);
        for &(x, w) in gl.as_node_weight_pairs() {
            s += f(mid + half * x) * w;
        }
        total += s * half;
        lo = hi;
    }
    total
}

fn weight(n: u32, t: f64) -> f64 {
    t.cos().powi(n as i32 - 1) / t.sin()
}

/// Cut-off values of `int cos(t)^(n-1) / sin(t) F(t) dt` over `[-pi/2, pi/2]`.
pub fn pv_inner_integral(
    f: &(dyn Fn(f64) -> Complex64 + Sync),
    n: u32,
    epsilons: &[f64],
    cutoff: Cutoff,
    tolerance: f64,
    exec: Execution,
) -> Result<PVReport, FundsolError> {
    if n == 0 {
        return Err(FundsolError::BadDimension);
    }
    let ok = !epsilons.is_empty()
        && epsilons.iter().all(|&e| e > 0.0 && e < FRAC_PI_2 && cutoff.right(e) > 0.0 && cutoff.right(e) < FRAC_PI_2)
        && epsilons.windows(2).all(|w| w[1] < w[0]);
    if !ok {
        return Err(FundsolError::BadEpsilons);
    }
    let gl = GaussLegendre::new(NonZeroUsize::new(24).expect("nonzero"));
    let partial: Vec<Complex64> = exec.map_slice(epsilons, |&eps| {
        let right = graded_integral(&gl, cutoff.right(eps), FRAC_PI_2, &|t| f(t) * weight(n, t));
        let left = graded_integral(&gl, eps, FRAC_PI_2, &|s| f(-s) * weight(n, -s));
        right + left
    });
    let last = *partial.last().expect("nonempty");
    let (extrapolated, spread) = if partial.len() >= 2 {
        let prev = partial[partial.len() - 2];
        let (e1, e2) = (epsilons[epsilons.len() - 2], epsilons[epsilons.len() - 1]);
        ((last * e1 - prev * e2) / (e1 - e2), (last - prev).norm())
    } else {
        (last, f64::INFINITY)
    };
    Ok(PVReport {
        n,
        cutoff,
        epsilon_sequence: epsilons.to_vec(),
        partial_values: partial.iter().map(|c| [c.re, c.im]).collect(),
        extrapolated: [extrapolated.re, extrapolated.im],
        spread,
        tolerance,
        converged: spread < tolerance,
    })
}

/// Reference value of the principal value: fold the integrand onto
/// `(0, pi/2]`, where `cos(t)^(n-1) (F(t) - F(-t)) / sin(t)` is bounded.
pub fn pv_folded(f: &dyn Fn(f64) -> Complex64, n: u32, nodes: usize) -> Complex64 {
    let gl = GaussLegendre::new(NonZeroUsize::new(nodes.max(1)).expect("nonzero"));
    let mut s = Complex64::new(0.0, 0.0);
    for &(x, w) in gl.as_node_weight_pairs() {
        let t = FRAC_PI_2 * 0.5 * (x + 1.0);
        s += (f(t) - f(-t)) * weight(n, t) * w;
    }
    s * (FRAC_PI_2 * 0.5)
}

/// Decades `10^-first, ..., 10^-last`.
pub fn decades(first: i32, last: i32) -> Vec<f64> {
    (first..=last).map(|p| 10f64.powi(-p)).collect()
}

/// Smooth demonstration profile `exp(-R^2 cos^2(pi/4 + t/2))`, with
/// `F(0) = exp(-R^2/2)`.
pub fn demo_profile(radius: f64) -> impl Fn(f64) -> Complex64 + Sync {
    move |t: f64| {
        let c = (PI / 4.0 + t / 2.0).cos();
        Complex64::new((-(radius * c).powi(2)).exp(), 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

    fn pt(x: f64, y: f64) -> ComplexPoint {
        ComplexPoint::new(x, y).unwrap()
    }

    #[test]
    fn e1_values() {
        let q = 1.0 / (4.0 * PI);
        assert!((e1(pt(1.0, 0.0)).unwrap() - q).norm() < 1e-15);
        assert!((e1(pt(0.0, 1.0)).unwrap() + q).norm() < 1e-15);
        assert_eq!(e1(pt(0.0, 0.0)), Err(FundsolError::SingularPoint));
        let mut rng = ExactRng::seeded(3);
        for _ in 0..100 {
            let z = pt(rng.f64_in(-5.0, 5.0), rng.f64_in(-5.0, 5.0));
            assert!((e1(z).unwrap().norm() - q).abs() < 1e-15);
        }
    }

    #[test]
    fn residual_small_and_second_order() {
        let r = residual_l_e1(pt(1.0, 1.0), 1e-3).unwrap();
        assert!(r.norm() < 1e-5, "{r}");
        let a = residual_l_e1(pt(2.0, 0.0), 1e-2).unwrap().norm();
        let b = residual_l_e1(pt(2.0, 0.0), 5e-3).unwrap().norm();
        assert!((a / b - 4.0).abs() < 0.8, "{}", a / b);
        assert!(residual_l_e1(pt(0.1, 0.0), 0.03).is_err());
    }

    #[test]
    fn residual_matches_leading_term() {
        // Leading error (i h^2 / 6) d_x d_y Laplace E, with Laplace E = -1/(pi z^2).
        let z = Complex64::new(0.6, -0.8);
        let h = 1e-2;
        let predicted = Complex64::new(0.0, h * h / 6.0) * Complex64::new(0.0, 1.0) * (-6.0 / (PI * z.powi(4)));
        let got = residual_l_e1(pt(z.re, z.im), h).unwrap();
        assert!((got - predicted).norm() < 0.05 * predicted.norm());
    }

    #[test]
    fn l_of_gaussian_matches_finite_differences() {
        let phi = GaussianTest::new(0.7, pt(0.3, -0.2)).unwrap();
        let (x, y, h) = (0.5, 0.1, 1e-3);
        let v = |a: f64, b: f64| phi.value(a, b);
        let fxx = (v(x + h, y) - 2.0 * v(x, y) + v(x - h, y)) / (h * h);
        let fyy = (v(x, y + h) - 2.0 * v(x, y) + v(x, y - h)) / (h * h);
        let fxy = (v(x + h, y + h) - v(x + h, y - h) - v(x - h, y + h) + v(x - h, y - h)) / (4.0 * h * h);
        let fd = Complex64::new(fxx - fyy, 2.0 * fxy);
        assert!((fd - phi.l_applied(x, y)).norm() < 1e-5);
    }

    #[test]
    fn pairing_small_grid() {
        let phi = GaussianTest::new(1.0, pt(0.0, 0.0)).unwrap();
        let rep = delta_pairing(&phi, Grid { cells: 400, radius: 10.0 }, Execution::Sequential).unwrap();
        assert!(rep.abs_error < 1e-4, "{rep:?}");
        assert_eq!(rep.skipped_cell_bound, 0.0);
        let odd = delta_pairing(&phi, Grid { cells: 401, radius: 10.0 }, Execution::Sequential).unwrap();
        assert!(odd.skipped_cell_bound > 0.0);
        assert!(odd.abs_error < 1e-4 + odd.skipped_cell_bound);
        assert!(delta_pairing(&phi, Grid { cells: 10, radius: 7.0 }, Execution::Sequential).is_err());
    }

    #[test]
    fn pairing_is_linear_and_mode_independent() {
        let a = GaussianTest::new(1.0, pt(0.0, 0.0)).unwrap();
        let b = GaussianTest::new(1.0, pt(0.5, 0.0)).unwrap();
        let grid = Grid { cells: 300, radius: 12.0 };
        let ra = delta_pairing(&a, grid, Execution::Sequential).unwrap();
        let rb = delta_pairing(&b, grid, Execution::Parallel).unwrap();
        let rb_seq = delta_pairing(&b, grid, Execution::Sequential).unwrap();
        assert_eq!(rb, rb_seq);
        assert!(rb.abs_error < 1e-3, "{rb:?}");
        assert!((ra.computed[0] + rb.computed[0] - ra.expected - rb.expected).abs() < 2e-3);
    }

    #[test]
    fn symbol_values() {
        assert_eq!(symbol(&[1.0, 0.0], &[1.0, 0.0]).unwrap(), Complex64::new(0.0, -2.0));
        assert_eq!(symbol(&[3.0, 4.0], &[-4.0, 3.0]).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(symbol(&[0.0, 0.0], &[1.0, 2.0]).unwrap(), Complex64::new(5.0, 0.0));
        assert!(symbol(&[1.0], &[1.0, 2.0]).is_err());
        let mut rng = ExactRng::seeded(9);
        for n in 2..6 {
            let (xi, eta) = characteristic_pair(n, &mut rng).unwrap();
            assert_eq!(symbol(&xi, &eta).unwrap(), Complex64::new(0.0, 0.0));
        }
        assert!(characteristic_pair(1, &mut rng).is_none());
    }

    #[test]
    fn pv_odd_integrand_vanishes() {
        let one = |_t: f64| Complex64::new(1.0, 0.0);
        let rep = pv_inner_integral(&one, 1, &decades(1, 6), Cutoff::Symmetric, 1e-10, Execution::Sequential).unwrap();
        assert!(rep.partial_values.iter().all(|v| v[0].abs() < 1e-12));
        assert!(rep.converged);
    }

    #[test]
    fn pv_of_t_is_four_catalan() {
        let f = |t: f64| Complex64::new(t, 0.0);
        let rep = pv_inner_integral(&f, 1, &decades(1, 8), Cutoff::Symmetric, 1e-6, Execution::Sequential).unwrap();
        assert!((rep.extrapolated[0] - 4.0 * CATALAN).abs() < 1e-10, "{:?}", rep.extrapolated);
        assert!((pv_folded(&f, 1, 64).re - 4.0 * CATALAN).abs() < 1e-12);
        assert!(rep.converged);
    }

    #[test]
    fn pv_matches_folded_oracle() {
        let f = demo_profile(1.5);
        for n in 1..=4 {
            let rep = pv_inner_integral(&f, n, &decades(1, 8), Cutoff::Symmetric, 1e-6, Execution::Sequential).unwrap();
            let oracle = pv_folded(&f, n, 80);
            assert!((rep.extrapolated[0] - oracle.re).abs() < 1e-9, "n={n}");
            assert!(rep.converged);
        }
    }

    #[test]
    fn scaled_cutoff_shifts_by_log_ratio() {
        let f = demo_profile(1.5);
        let f0 = f(0.0).re;
        let rep = pv_inner_integral(&f, 2, &decades(2, 8), Cutoff::Scaled { ratio: 2.0 }, 1e-6, Execution::Sequential)
            .unwrap();
        let oracle = pv_folded(&f, 2, 80).re;
        assert!((rep.extrapolated[0] - (oracle - f0 * 2f64.ln())).abs() < 1e-8);
    }

    #[test]
    fn power_cutoff_drifts_logarithmically() {
        let f = demo_profile(1.5);
        let f0 = f(0.0).re;
        let eps = decades(2, 6);
        let rep = pv_inner_integral(&f, 1, &eps, Cutoff::Power { exponent: 2.0 }, 1e-6, Execution::Sequential).unwrap();
        let vals: Vec<f64> = rep.partial_values.iter().map(|v| v[0]).collect();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
        // Each decade adds about F(0) ln 10.
        for w in vals.windows(2) {
            assert!(((w[1] - w[0]) / (f0 * 10f64.ln()) - 1.0).abs() < 0.05);
        }
        assert!(!rep.converged);
    }

    #[test]
    fn bad_epsilons_rejected() {
        let f = |_t: f64| Complex64::new(1.0, 0.0);
        for eps in [vec![], vec![0.1, 0.1], vec![0.01, 0.1], vec![-0.1], vec![2.0]] {
            assert_eq!(
                pv_inner_integral(&f, 1, &eps, Cutoff::Symmetric, 1e-6, Execution::Sequential),
                Err(FundsolError::BadEpsilons)
            );
        }
    }
}
