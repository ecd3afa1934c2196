use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, Scalar};

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of `λ^i`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty
/// coefficient vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The indeterminate `λ`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·λ^n`
    pub fn monomial(c: T, n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from small integer coefficients, low to high.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| T::from_i64(c).expect("integer fits scalar"))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `λ^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits scalar"))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self
            .leading()
            .ok_or_else(|| Error::domain("the zero polynomial has no monic associate"))?;
        let inv = T::one() / lc.clone();
        Ok(self.scale(&inv))
    }

    /// Euclidean division, `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of a division known to be exact; errors if a remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::domain("polynomial division is not exact"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::domain("gcd(0, 0) is undefined"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::domain("gcd(0, 0) is undefined"));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = T::one() / r0.leading().expect("nonzero gcd").clone();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The composition `self(inner(λ))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Resultant `Res(self, other)`, computed along the Euclidean remainder sequence.
    ///
    /// Zero exactly when the two polynomials share a root over ℂ (or one of
    /// them is zero).
    pub fn resultant(&self, other: &Self) -> T {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return T::zero();
        };
        if n == 0 {
            return pow_scalar(&other.coeffs[0], m);
        }
        if m == 0 {
            return pow_scalar(&self.coeffs[0], n);
        }
        let r = self.rem(other).expect("nonzero divisor");
        let Some(dr) = r.degree() else {
            return T::zero();
        };
        let mut res = pow_scalar(&other.coeffs[n], m - dr) * other.resultant(&r);
        if (m * n) % 2 == 1 {
            res = -res;
        }
        res
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("square-free part of the zero polynomial"));
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative())?;
        self.div_exact(&g)?.monic()
    }
}

pub(crate) fn pow_scalar<T: Scalar>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, _| acc * x.clone())
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "λ")?,
                1 => write!(f, "({c})λ")?,
                _ if c.is_one() => write!(f, "λ^{i}")?,
                _ => write!(f, "({c})λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn horner_oracle(coeffs: &[i64], x: i64) -> i64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    #[test]
    fn cube_of_lambda_squared_plus_four() {
        let g = QPoly::from_i64(&[4, 0, 1]);
        assert_eq!(&(&g * &g) * &g, QPoly::from_i64(&[64, 0, 48, 0, 12, 0, 1]));
    }

    #[test]
    fn self_division() {
        let a = QPoly::from_i64(&[3, -1, 0, 2]);
        let (quot, rem) = a.divrem(&a).unwrap();
        assert_eq!(quot, QPoly::one());
        assert!(rem.is_zero());
    }

    #[test]
    fn remainder_matches_horner() {
        let p = QPoly::from_i64(&[1, 0, -4, 1]);
        let rem = p.rem(&QPoly::from_i64(&[-2, 1])).unwrap();
        let expected = horner_oracle(&[1, 0, -4, 1], 2);
        assert_eq!(expected, -7);
        assert_eq!(rem, QPoly::constant(q(expected)));
    }

    #[test]
    fn division_by_zero_is_domain_error() {
        let a = QPoly::from_i64(&[1, 1]);
        assert!(matches!(a.divrem(&QPoly::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn gcd_examples() {
        let g = QPoly::from_i64(&[4, 0, 1]);
        let h = QPoly::from_i64(&[2, 0, 0, 1]);
        assert_eq!(g.gcd(&h).unwrap(), QPoly::one());
        let a = QPoly::from_i64(&[6, 0, 3]);
        assert_eq!(a.gcd(&QPoly::zero()).unwrap(), QPoly::from_i64(&[2, 0, 1]));
        let cube = g.pow(3);
        let other = &g * &QPoly::from_i64(&[-1, 1]);
        assert_eq!(cube.gcd(&other).unwrap(), g);
        assert!(QPoly::zero().gcd(&QPoly::zero()).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let p = QPoly::from_i64(&[1, 5, -4, 1]);
        assert_eq!(p.eval(&q(2)), q(3));
        assert_eq!(p.eval(&q(1)), q(3));
        assert_eq!(p.eval(&q(0)), q(1));
    }

    #[test]
    fn derivative_examples() {
        let p = QPoly::from_i64(&[1, 5, -4, 1]);
        let dp = p.derivative();
        assert_eq!(dp, QPoly::from_i64(&[5, -8, 3]));
        assert_eq!(dp.eval(&q(1)), q(0));
        assert!(QPoly::from_i64(&[7]).derivative().is_zero());
        assert_eq!(QPoly::from_i64(&[0, 0, 1]).derivative(), QPoly::from_i64(&[0, 2]));
    }

    #[test]
    fn squarefree_examples() {
        let g = QPoly::from_i64(&[4, 0, 1]);
        assert_eq!(g.pow(3).squarefree_part().unwrap(), g);
        assert_eq!(QPoly::from_i64(&[4, 0, 2]).squarefree_part().unwrap(), QPoly::from_i64(&[2, 0, 1]));
        let p = &QPoly::from_i64(&[-2, 1]).pow(2) * &QPoly::from_i64(&[-1, 1]);
        assert_eq!(p.squarefree_part().unwrap(), QPoly::from_i64(&[2, -3, 1]));
        assert!(QPoly::zero().squarefree_part().is_err());
    }

    #[test]
    fn resultant_examples() {
        let g = QPoly::from_i64(&[4, 0, 1]);
        assert_eq!(g.resultant(&g), q(0));
        let b = QPoly::from_i64(&[3, -1, 0, 2]);
        let lin = QPoly::from_i64(&[-5, 1]);
        assert_eq!(lin.resultant(&b), b.eval(&q(5)));
        // Res(λ²+4, λ³+2) = b(2i)·b(−2i) = |2 − 8i|² = 68
        assert_eq!(g.resultant(&QPoly::from_i64(&[2, 0, 0, 1])), q(68));
    }

    #[test]
    fn resultant_matches_complex_root_product() {
        use num_complex::Complex64;
        let a = QPoly::from_i64(&[4, 0, 1]);
        let b = QPoly::from_i64(&[2, 0, 0, 1]);
        let roots = [Complex64::new(0.0, 2.0), Complex64::new(0.0, -2.0)];
        let eval = |x: Complex64| x * x * x + 2.0;
        let product: Complex64 = roots.iter().map(|&r| eval(r)).product();
        let exact = a.resultant(&b);
        let exact_f: f64 = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        assert!((product.re - exact_f).abs() < 1e-9 && product.im.abs() < 1e-9);
    }

    #[test]
    fn float_instances_share_the_api() {
        let p = crate::Poly64::from_i64(&[1, 0, 1]);
        assert_eq!(p.eval(&2.0), 5.0);
        assert_eq!(p.derivative().coeffs(), &[0.0, 2.0]);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| QPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(4), b in small_poly(4), c in small_poly(4)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn divrem_round_trip(a in small_poly(6), b in small_poly(3)) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&quot * &b) + &rem, a);
            prop_assert!(rem.degree() < b.degree());
        }

        #[test]
        fn derivative_is_linear_and_leibniz(a in small_poly(4), b in small_poly(4)) {
            prop_assert_eq!((&a + &b).derivative(), &a.derivative() + &b.derivative());
            prop_assert_eq!(
                (&a * &b).derivative(),
                &(&a.derivative() * &b) + &(&a * &b.derivative())
            );
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(a in small_poly(6), b in small_poly(6)) {
            prop_assume!(a.degree().is_some_and(|d| d >= 1) && b.degree().is_some_and(|d| d >= 1));
            let shared = a.gcd(&b).unwrap().degree().unwrap() >= 1;
            prop_assert_eq!(a.resultant(&b).is_zero(), shared);
        }

        #[test]
        fn ext_gcd_bezout(a in small_poly(4), b in small_poly(4)) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (g, s, t) = a.ext_gcd(&b).unwrap();
            prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
            prop_assert_eq!(g, a.gcd(&b).unwrap());
        }
    }
}
