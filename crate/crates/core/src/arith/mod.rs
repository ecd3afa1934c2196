//! Scalars and univariate polynomials over ℚ.

mod factor;
pub(crate) mod modp;
mod poly;
pub mod rational;

pub use factor::{canonical_cmp, factor, is_irreducible, Factorization};
pub use poly::Polynomial;
pub use rational::{format_rational, parse_rational};
