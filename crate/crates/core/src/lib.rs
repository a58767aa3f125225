//! Exact function theory of complexified octonions.
//!
//! - [`scalar`]: exact rationals and Gaussian rationals.
//! - [`cayley`]: quaternions, octonions and complexified octonions.
//! - [`poly`]: sparse polynomials in `z, zbar` with scalar or octonion coefficients.
//! - [`diffops`]: formal partials and the octonionic Cauchy-Riemann operators.
//! - [`linalg`]: exact elimination, rank and nullspace.
//! - [`kernel`]: homogeneous polynomial kernels of the ultrahyperbolic operator.
//! - [`fundsol`]: floating-point checks of the `n = 1` fundamental solution and
//!   the principal-value mechanism.
//! - [`suites`]: seeded property suites shared by the CLI and the tests.

pub mod cayley;
pub mod diffops;
pub mod exec;
pub mod fundsol;
pub mod kernel;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod suites;

pub use cayley::{ComplexOctonion, Octonion, Quaternion};
pub use exec::Execution;
pub use poly::{CPolynomial, Monomial, OPolynomial};
pub use scalar::{CRational, Rational};
