//! Seeded generators for exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley::{ComplexOctonion, Octonion};
use crate::scalar::{CRational, Rational};

/// Numerators are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 9;
/// Denominators of random rationals are drawn from `1..=DENOM_BOUND`.
pub const DENOM_BOUND: i64 = 5;

/// ChaCha-backed generator; identical seeds give identical streams on every
/// platform.
pub struct ExactRng(ChaCha8Rng);

impl ExactRng {
    pub fn seeded(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn int(&mut self) -> i64 {
        self.0.gen_range(-COEFF_BOUND..=COEFF_BOUND)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.int();
        let den = self.0.gen_range(1..=DENOM_BOUND);
        Rational::new(num, den).expect("positive denominator")
    }

    pub fn crational(&mut self) -> CRational {
        CRational::new(self.rational(), self.rational())
    }

    pub fn int_crational(&mut self) -> CRational {
        CRational::from_ints(self.int(), self.int())
    }

    pub fn octonion(&mut self) -> Octonion {
        Octonion::new(std::array::from_fn(|_| self.rational()))
    }

    pub fn int_octonion(&mut self) -> Octonion {
        Octonion::new(std::array::from_fn(|_| Rational::from_integer(self.int())))
    }

    pub fn complex_octonion(&mut self) -> ComplexOctonion {
        ComplexOctonion::new(self.octonion(), self.octonion())
    }

    pub fn int_complex_octonion(&mut self) -> ComplexOctonion {
        ComplexOctonion::new(self.int_octonion(), self.int_octonion())
    }

    pub fn f64_in(&mut self, lo: f64, hi: f64) -> f64 {
        self.0.gen_range(lo..hi)
    }
}
