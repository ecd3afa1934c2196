//! Factorization of rational polynomials into monic irreducibles.
//!
//! Square-free decomposition (Yun) splits off multiplicities; each square-free
//! part is cleared to a primitive integer polynomial and factored by
//! Zassenhaus' method: factor modulo a prime where the image stays
//! square-free, Hensel-lift the modular factors past a Mignotte-type
//! coefficient bound, then recombine subsets of lifted factors by trial
//! division over ℤ.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::{Integer as _};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PolyP};
use super::rational::{integer_poly_to_rational, primitive_integer_part};
use crate::{Error, QPoly, Rational, Result};

/// `unit · Π factor^multiplicity`, factors monic, irreducible and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(QPoly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Canonical order on monic polynomials: by degree, then coefficients low to high.
pub fn canonical_cmp(a: &QPoly, b: &QPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Complete factorization over ℚ, factors sorted by [`canonical_cmp`].
pub fn factor(p: &QPoly) -> Result<Factorization> {
    let unit = p
        .leading()
        .cloned()
        .ok_or_else(|| Error::domain("cannot factor the zero polynomial"))?;
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic()?)? {
        for f in factor_squarefree_integer(&primitive_integer_part(&part)) {
            factors.push((integer_poly_to_rational(&f).monic()?, mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// True iff `p` has a single irreducible factor of multiplicity one.
pub fn is_irreducible(p: &QPoly) -> Result<bool> {
    match p.degree() {
        None | Some(0) => Err(Error::domain("irreducibility is undefined for constants")),
        Some(1) => Ok(true),
        Some(_) => Ok(factor(p)?.is_irreducible()),
    }
}

/// Yun's algorithm on a monic polynomial: `p = Π a_i^i` with square-free, pairwise coprime `a_i`.
pub(crate) fn squarefree_decomposition(p: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.div_exact(&a0)?;
    let mut c = dp.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        b = b.div_exact(&a)?;
        c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

type ZPoly = Vec<BigInt>;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zreduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    ztrim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Division by a monic divisor modulo `m`.
fn zdivrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    let db = b.len() - 1;
    let mut rem = zreduce(a, m);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    rem.resize(a.len(), BigInt::zero());
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] = (&rem[i + j] - &c * bc).mod_floor(m);
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (zreduce(&quot, m), zreduce(&rem, m))
}

fn to_modp(a: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut out: PolyP = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn primitive(a: ZPoly) -> ZPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: ZPoly = if content.is_zero() || content.is_one() {
        a
    } else {
        a.into_iter().map(|c| c / &content).collect()
    };
    if out.last().is_some_and(|c| c.is_negative()) {
        out.iter_mut().for_each(|c| *c = -&*c);
    }
    out
}

/// Exact quotient `f / g` over ℤ if `g` divides `f`.
fn zdivide(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let (q, r) = integer_poly_to_rational(f)
        .divrem(&integer_poly_to_rational(g))
        .ok()?;
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// One quadratic Hensel step: from `f ≡ g·h (mod m)`, `s·g + t·h ≡ 1 (mod m)`
/// with `h` monic, produce the same relations modulo `m²`.
struct HenselPair {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

fn hensel_step(f: &[BigInt], pair: HenselPair, m: &BigInt) -> HenselPair {
    let m2 = m * m;
    let HenselPair { g, h, s, t } = pair;
    let e = zreduce(&zsub(f, &zmul(&g, &h)), &m2);
    let (q, r) = zdivrem_monic(&zmul(&s, &e), &h, &m2);
    let g_new = zreduce(&zadd(&zadd(&g, &zmul(&t, &e)), &zmul(&q, &g)), &m2);
    let h_new = zreduce(&zadd(&h, &r), &m2);
    let b = zreduce(
        &zsub(&zadd(&zmul(&s, &g_new), &zmul(&t, &h_new)), &[BigInt::one()]),
        &m2,
    );
    let (c, d) = zdivrem_monic(&zmul(&s, &b), &h_new, &m2);
    let s_new = zreduce(&zsub(&s, &d), &m2);
    let t_new = zreduce(&zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &g_new)), &m2);
    HenselPair {
        g: g_new,
        h: h_new,
        s: s_new,
        t: t_new,
    }
}

/// Lifts `f ≡ lc(f)·Π factors (mod p)` to monic factors modulo `p^(2^steps)`.
fn multifactor_lift(f: &[BigInt], factors: &[PolyP], field: Fp, steps: u32) -> (Vec<ZPoly>, BigInt) {
    let p = BigInt::from(field.p);
    let modulus = (0..steps).fold(p.clone(), |m, _| &m * &m);
    let mut current: ZPoly = f.to_vec();
    let mut lifted = Vec::with_capacity(factors.len());
    for i in 0..factors.len() - 1 {
        let h0 = &factors[i];
        let lc = to_modp(&[current.last().unwrap().clone()], field.p);
        let rest = factors[i + 1..]
            .iter()
            .fold(lc, |acc, fac| field.mul_poly(&acc, fac));
        let (one, s0, t0) = field.ext_gcd(&rest, h0);
        debug_assert_eq!(one, vec![1]);
        let mut pair = HenselPair {
            g: from_modp(&rest),
            h: from_modp(h0),
            s: from_modp(&s0),
            t: from_modp(&t0),
        };
        let mut m = p.clone();
        for _ in 0..steps {
            let target = zreduce(&current, &(&m * &m));
            pair = hensel_step(&target, pair, &m);
            m = &m * &m;
        }
        lifted.push(pair.h);
        current = pair.g;
    }
    // the remaining cofactor is lc·(last factor)
    let lc = current.last().unwrap().clone();
    let inv = lc
        .extended_gcd(&modulus)
        .x
        .mod_floor(&modulus);
    lifted.push(zreduce(
        &current.iter().map(|c| c * &inv).collect::<Vec<_>>(),
        &modulus,
    ));
    (lifted, modulus)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let n = f.len() - 1;
    let lc = f.last().unwrap().abs();
    lc * norm * (BigInt::one() << n)
}

/// Factors a primitive, square-free integer polynomial of positive degree into
/// primitive irreducibles with positive leading coefficients.
pub(crate) fn factor_squarefree_integer(f: &[BigInt]) -> Vec<ZPoly> {
    let f = primitive(ztrim(f.to_vec()));
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let mut rest = factor_squarefree_integer(&f[1..]);
        rest.push(vec![BigInt::zero(), BigInt::one()]);
        return rest;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let lc = f.last().unwrap().clone();
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let field = Fp::new(p);
        let fp = to_modp(&f, p);
        if fp.len() != f.len() || !field.is_squarefree(&fp) {
            continue;
        }
        let factors = field.factor_squarefree(&field.monic(&fp), &mut rng);
        if factors.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((field, factors));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (field, modular) = best.expect("some prime keeps f square-free");

    let bound = coefficient_bound(&f) * 2;
    let mut steps = 0;
    let mut m = BigInt::from(field.p);
    while m <= bound {
        m = &m * &m;
        steps += 1;
    }
    let (lifted, modulus) = multifactor_lift(&f, &modular, field, steps);
    recombine(f, lifted, &modulus)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in Subsets::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let candidate = subset
                .iter()
                .fold(vec![lc], |acc, &i| zreduce(&zmul(&acc, &lifted[i]), modulus));
            let candidate = primitive(symmetric(&candidate, modulus));
            if let Some(quotient) = zdivide(&f, &candidate) {
                out.push(candidate);
                f = quotient;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        out.push(primitive(f));
    }
    out
}

/// Index subsets of a fixed size in lexicographic order.
struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
