//! The simple extension `K = ℚ[λ]/(g)` and roots of `p(t) = λ̄` inside it.
//!
//! Elements are coordinate vectors over the power basis `1, λ̄, …, λ̄^{k−1}`.
//! [`roots_in_extension`] follows Trager: shift until the norm of
//! `p(t − s·λ̄) − λ̄` is square-free over ℚ, factor that norm, and pull each
//! degree-`k` factor back to a linear factor over `K` with a gcd in `K[t]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::factor;
use crate::{Error, QPoly, Rational, Result};

/// `ℚ[λ]/(g)` for a monic irreducible `g`. Cheap to clone.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    modulus: Arc<QPoly>,
}

impl NumberField {
    /// Checks that `g` is monic and irreducible over ℚ.
    pub fn new(g: QPoly) -> Result<Self> {
        if !g.is_monic() || g.degree().unwrap_or(0) == 0 {
            return Err(Error::domain(format!("field modulus {g} must be monic of degree ≥ 1")));
        }
        if !crate::arith::is_irreducible(&g)? {
            return Err(Error::domain(format!("field modulus {g} is reducible over ℚ")));
        }
        Ok(Self::new_unchecked(g))
    }

    pub(crate) fn new_unchecked(g: QPoly) -> Self {
        NumberField { modulus: Arc::new(g) }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero modulus")
    }

    /// The class of `q(λ)`.
    pub fn from_poly(&self, q: &QPoly) -> NumberFieldElement {
        let r = q.rem(&self.modulus).expect("nonzero modulus");
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        NumberFieldElement {
            field: self.clone(),
            coords,
        }
    }

    /// Element with the given power-basis coordinates.
    pub fn element(&self, coords: Vec<Rational>) -> Result<NumberFieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::domain(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(NumberFieldElement {
            field: self.clone(),
            coords,
        })
    }

    pub fn from_rational(&self, c: Rational) -> NumberFieldElement {
        self.from_poly(&QPoly::constant(c))
    }

    pub fn zero(&self) -> NumberFieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> NumberFieldElement {
        self.from_rational(Rational::one())
    }

    /// The residue class `λ̄` of the indeterminate.
    pub fn generator(&self) -> NumberFieldElement {
        self.from_poly(&QPoly::x())
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(ℚ[λ]/({}))", self.modulus)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NumberFieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NumberFieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Power-basis coordinates, always exactly `k` of them.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Representative polynomial of degree `< k`.
    pub fn to_poly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "elements of {:?} and {:?} cannot be combined",
                self.field, other.field
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.from_poly(&(&self.to_poly() + &other.to_poly())))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.from_poly(&(&self.to_poly() - &other.to_poly())))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.from_poly(&(&self.to_poly() * &other.to_poly())))
    }

    /// Inverse through the extended Euclidean algorithm against the modulus.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("zero has no inverse"));
        }
        let (g, s, _) = self.to_poly().ext_gcd(self.field.modulus())?;
        debug_assert!(g == QPoly::one(), "modulus is irreducible");
        Ok(self.field.from_poly(&s))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `N_{K/ℚ}(self) = Res(g, q)` for the representative `q`.
    pub fn norm(&self) -> Rational {
        self.field.modulus().resultant(&self.to_poly())
    }

    fn scale(&self, c: &Rational) -> Self {
        NumberFieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn add(self, rhs: Self) -> NumberFieldElement {
        self.checked_add(rhs).expect("same field")
    }
}

impl Sub for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn sub(self, rhs: Self) -> NumberFieldElement {
        self.checked_sub(rhs).expect("same field")
    }
}

impl Mul for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn mul(self, rhs: Self) -> NumberFieldElement {
        self.checked_mul(rhs).expect("same field")
    }
}

impl Neg for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn neg(self) -> NumberFieldElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.to_poly(), self.field.modulus())
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberFieldElement({self})")
    }
}

/// Horner evaluation of a rational polynomial at `mu`.
pub fn nf_poly_eval(p: &QPoly, mu: &NumberFieldElement) -> NumberFieldElement {
    let field = mu.field();
    p.coeffs().iter().rev().fold(field.zero(), |acc, c| {
        &(&acc * mu) + &field.from_rational(c.clone())
    })
}

/// Every `μ ∈ ℚ[λ]/(g)` with `p(μ) = λ̄`, sorted by coordinates.
pub fn roots_in_extension(p: &QPoly, g: &QPoly) -> Result<Vec<NumberFieldElement>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("root finding needs a nonconstant polynomial"));
    }
    let field = NumberField::new(g.clone())?;
    let lambda = field.generator();

    let mut big_p = KPoly::from_rational(&field, p);
    big_p.0[0] = &big_p.0[0] - &lambda;
    let dp = KPoly::from_rational(&field, &p.derivative());
    let common = big_p.gcd(&dp)?;
    let target = big_p.monic()?.divrem(&common)?.0;

    let k = field.degree();
    let deg = target.degree();
    for s in shifts() {
        let shift = lambda.scale(&Rational::from_integer(s.into()));
        let shifted = target.compose_shift(&shift);
        let norm = shifted.norm_poly(k * deg);
        if norm.degree() != Some(k * deg) || norm.gcd(&norm.derivative())?.degree() != Some(0) {
            continue;
        }
        let mut roots = Vec::new();
        for (h, _) in factor(&norm)?.factors {
            if h.degree() != Some(k) {
                continue;
            }
            let lin = shifted.gcd(&KPoly::from_rational(&field, &h))?;
            if lin.degree() != 1 {
                return Err(Error::Internal(format!("norm factor {h} did not pull back to a linear factor")));
            }
            let root = &(-&lin.0[0]) - &shift;
            if nf_poly_eval(p, &root) != lambda {
                return Err(Error::Internal(format!("root {root} fails p(μ) = λ̄")));
            }
            roots.push(root);
        }
        roots.sort_by(|a, b| a.coords.cmp(&b.coords));
        return Ok(roots);
    }
    unreachable!("shift search is unbounded")
}

/// 0, 1, −1, 2, −2, …
fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|i| if i == 0 { vec![0] } else { vec![i, -i] })
}

/// Dense polynomial over `K`, low to high, no trailing zeros.
#[derive(Clone, Debug)]
struct KPoly(Vec<NumberFieldElement>);

impl KPoly {
    fn from_rational(field: &NumberField, p: &QPoly) -> Self {
        KPoly(p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect()).trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(NumberFieldElement::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn monic(&self) -> Result<Self> {
        let inv = self.0.last().ok_or_else(|| Error::domain("zero polynomial"))?.inverse()?;
        Ok(KPoly(self.0.iter().map(|c| c * &inv).collect()))
    }

    /// Division by the monic associate of `d`.
    fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let d = d.monic()?;
        let dd = d.degree();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Ok((KPoly(Vec::new()), self.clone()));
        }
        let field = d.0[0].field().clone();
        let mut quot = vec![field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((KPoly(quot).trim(), KPoly(rem).trim()))
    }

    fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone().trim(), other.clone().trim());
        while !b.0.is_empty() {
            let r = a.divrem(&b)?.1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `self(t − shift)`.
    fn compose_shift(&self, shift: &NumberFieldElement) -> Self {
        let field = shift.field().clone();
        let mut acc: Vec<NumberFieldElement> = Vec::new();
        for c in self.0.iter().rev() {
            // acc ← acc·(t − shift) + c
            let mut next = vec![field.zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                next[i] = &next[i] - &(a * shift);
            }
            next[0] = &next[0] + c;
            acc = next;
        }
        KPoly(acc).trim()
    }

    fn eval(&self, x: &NumberFieldElement) -> NumberFieldElement {
        self.0
            .iter()
            .rev()
            .fold(x.field().zero(), |acc, c| &(&acc * x) + c)
    }

    /// `N(t) = Π_σ σ(self)(t)`, degree `≤ bound`, by interpolation at `0..=bound`.
    fn norm_poly(&self, bound: usize) -> QPoly {
        let field = self.0[0].field();
        let xs: Vec<Rational> = (0..=bound).map(|i| Rational::from_integer(i.into())).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| self.eval(&field.from_rational(x.clone())).norm())
            .collect();
        newton_interpolate(&xs, &ys)
    }
}

fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> QPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = QPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = QPoly::new(vec![-xs[i].clone(), Rational::one()]);
        out = &(&out * &lin) + &QPoly::constant(coef[i].clone());
    }
    out
}
