use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field scalar: rationals for exact work, `f32`/`f64` for numerics.
///
/// Algorithms that test for zero (pivoting, degree trimming) are exact only
/// for exact types; for floats they compare against literal zero.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive {}
