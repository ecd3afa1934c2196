//! Exact solutions of polynomial matrix equations `p(X) = A` over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: rational scalars, dense univariate polynomials, resultants and
//!   factorization over ℚ (Zassenhaus with Hensel lifting).
//! * [`numfield`]: arithmetic in `ℚ[λ]/(g)` and the roots of `p(t) = λ̄` there.
//! * [`linalg`]: dense matrices, exact linear solving, Kronecker products,
//!   characteristic and minimal polynomials.
//! * [`canonical`]: invariant factors and the companion-Jordan form with an
//!   explicit rational similarity.
//! * [`delta`]: the divided-difference operator `Δp(W, Y)(Z)`.
//! * [`solver`]: per-block base roots, the superdiagonal chain solves and the
//!   enumeration of all rational solutions.
//! * [`format`]: the JSON text formats shared with the command-line tool.
//!
//! Polynomials and matrices are generic over a [`Scalar`] field type. The
//! exact pipeline runs on [`Rational`]; `f64` instances are available for
//! quick numerical experiments through the same API.

pub mod arith;
pub mod canonical;
pub mod delta;
mod error;
pub mod format;
pub mod linalg;
pub mod numfield;
mod scalar;
pub mod solver;

pub use arith::{Factorization, Polynomial};
pub use canonical::{CompanionJordanDecomposition, ElementaryBlock};
pub use error::{Error, Result};
pub use linalg::{LinearSolution, Matrix, SolutionStatus};
pub use numfield::{NumberField, NumberFieldElement};
pub use scalar::Scalar;
pub use solver::{BlockSolution, ChainKind, SolveOutcome, SolveStatus};

/// Arbitrary-precision fraction, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Polynomial over ℚ.
pub type QPoly = Polynomial<Rational>;
/// Dense matrix over ℚ.
pub type QMatrix = Matrix<Rational>;

/// Polynomial with `f64` coefficients.
pub type Poly64 = Polynomial<f64>;
/// Dense `f64` matrix.
pub type Matrix64 = Matrix<f64>;
/// Dense `f32` matrix.
pub type Matrix32 = Matrix<f32>;
