//! Dense polynomials over a small prime field `F_p`, coefficients low to high.
//!
//! Only what the factorization needs: distinct-degree and equal-degree
//! splitting (Cantor–Zassenhaus) plus the extended gcd that seeds Hensel lifting.

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Fp { p }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(self, mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    #[cfg(test)]
    pub fn add_poly(self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(out)
    }

    pub fn sub_poly(self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(out)
    }

    pub fn mul_poly(self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn divrem(self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut rem = a.to_vec();
        if rem.len() <= db {
            return (Vec::new(), self.trim(rem));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.mul(rem[i + db], inv);
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                rem[i + j] = self.sub(rem[i + j], self.mul(c, bc));
            }
            quot[i] = c;
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(self, a: &[u64], b: &[u64]) -> PolyP {
        self.divrem(a, b).1
    }

    pub fn monic(self, a: &[u64]) -> PolyP {
        let inv = self.inv(*a.last().expect("nonzero polynomial"));
        a.iter().map(|&c| self.mul(c, inv)).collect()
    }

    pub fn gcd(self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        if a.is_empty() {
            a
        } else {
            self.monic(&a)
        }
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn ext_gcd(self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        let scale = |v: &[u64]| self.trim(v.iter().map(|&c| self.mul(c, inv)).collect());
        (scale(&r0), scale(&s0), scale(&t0))
    }

    pub fn derivative(self, a: &[u64]) -> PolyP {
        let out = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        self.trim(out)
    }

    pub fn is_squarefree(self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// `base^exp mod modulus`.
    pub fn powmod(self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> PolyP {
        let mut acc: PolyP = vec![1];
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul_poly(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.mul_poly(&acc, &base), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    /// Returns `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 1;
        while f.len() > 1 && 2 * d <= f.len() - 1 {
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
            d += 1;
        }
        if f.len() > 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
        }
        out
    }

    /// Splits a monic product of irreducibles all of degree `d` (odd `p`).
    pub fn equal_degree<R: Rng>(self, f: &[u64], d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub_poly(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let rest = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&rest, d, rng));
                return out;
            }
        }
    }

    /// Complete factorization of a monic square-free polynomial into monic irreducibles.
    pub fn factor_squarefree<R: Rng>(self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}
