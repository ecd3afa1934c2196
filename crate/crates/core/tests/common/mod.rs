//! Fixtures, random generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use matpoly::arith::rational::{rat, rat_frac};
use matpoly::numfield::{nf_poly_eval, NumberField};
use matpoly::{QMatrix, QPoly, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub fn poly(c: &[i64]) -> QPoly {
    QPoly::from_i64(c)
}

pub fn qm(rows: usize, cols: usize, e: &[i64]) -> QMatrix {
    QMatrix::from_i64(rows, cols, e)
}

/// `(1/den) · entries`.
pub fn scaled(den: i64, rows: usize, cols: usize, e: &[i64]) -> QMatrix {
    QMatrix::new(rows, cols, e.iter().map(|&n| rat_frac(n, den)).collect()).unwrap()
}

pub fn fracs(rows: usize, cols: usize, e: &[(i64, i64)]) -> QMatrix {
    QMatrix::new(rows, cols, e.iter().map(|&(n, d)| rat_frac(n, d)).collect()).unwrap()
}

/// Companion matrix written out directly from the definition.
pub fn companion_by_hand(g: &QPoly) -> QMatrix {
    let k = g.degree().unwrap();
    let mut c = QMatrix::zeros(k, k);
    for i in 0..k - 1 {
        c[(i, i + 1)] = rat(1);
    }
    for j in 0..k {
        c[(k - 1, j)] = -g.coeff(j);
    }
    c
}

pub fn cj_block_by_hand(g: &QPoly, d: usize) -> QMatrix {
    let c = companion_by_hand(g);
    let k = c.rows();
    let mut out = QMatrix::zeros(k * d, k * d);
    for b in 0..d {
        for i in 0..k {
            for j in 0..k {
                out[(b * k + i, b * k + j)] = c[(i, j)].clone();
            }
            if b + 1 < d {
                out[(b * k + i, (b + 1) * k + i)] = rat(1);
            }
        }
    }
    out
}

pub fn toeplitz_by_hand(parts: &[QMatrix]) -> QMatrix {
    let k = parts[0].rows();
    let d = parts.len();
    let mut y = QMatrix::zeros(k * d, k * d);
    for r in 0..d {
        for c in r..d {
            for i in 0..k {
                for j in 0..k {
                    y[(r * k + i, c * k + j)] = parts[c - r][(i, j)].clone();
                }
            }
        }
    }
    y
}

pub mod worked {
    use super::*;

    pub fn example1_a() -> QMatrix {
        companion_by_hand(&poly(&[64, 0, 48, 0, 12, 0, 1]))
    }

    pub fn example1_t() -> QMatrix {
        qm(
            6,
            6,
            &[
                1, 0, 0, 0, 0, 0, //
                0, 1, 1, 0, 0, 0, //
                -4, 0, 0, 2, 1, 0, //
                0, -4, -12, 0, 0, 3, //
                16, 0, 0, -16, -24, 0, //
                0, 16, 80, 0, 0, -40,
            ],
        )
    }

    pub fn example1_x() -> QMatrix {
        scaled(
            1024,
            6,
            6,
            &[
                672, 720, -112, 72, -6, 5, //
                -320, 672, 480, -112, 12, -6, //
                384, -320, 960, 480, -40, 12, //
                -768, 384, -896, 960, 336, -40, //
                2560, -768, 2304, -896, 1440, 336, //
                -21504, 2560, -16896, 2304, -4928, 1440,
            ],
        )
    }

    pub fn example1_x1() -> QMatrix {
        fracs(2, 2, &[(1, 1), (1, 2), (-2, 1), (1, 1)])
    }

    pub fn example1_x2() -> QMatrix {
        fracs(2, 2, &[(1, 4), (-1, 8), (1, 2), (1, 4)])
    }

    pub fn example2_a() -> QMatrix {
        qm(4, 4, &[-2, 2, 1, 0, -2, -2, 0, 1, 0, 0, -2, 2, 0, 0, -2, -2])
    }

    pub fn example2_x() -> QMatrix {
        scaled(16, 4, 4, &[16, 16, 0, -1, -16, 16, 1, 0, 0, 0, 16, 16, 0, 0, -16, 16])
    }

    pub fn example2_x1() -> QMatrix {
        fracs(2, 2, &[(2, 1), (1, 2), (-4, 1), (0, 1)])
    }

    pub fn example2_x2() -> QMatrix {
        scaled(12, 2, 2, &[-2, -1, 8, 2])
    }

    pub fn example2_kron() -> QMatrix {
        fracs(
            4,
            4,
            &[
                (8, 1), (2, 1), (-16, 1), (-2, 1),
                (-16, 1), (0, 1), (16, 1), (-8, 1),
                (2, 1), (1, 4), (0, 1), (1, 1),
                (-2, 1), (1, 1), (-8, 1), (-4, 1),
            ],
        )
    }

    pub fn example3_a() -> QMatrix {
        companion_by_hand(&poly(&[4, 0, 0, 4, 0, 0, 1]))
    }

    pub fn example3_p() -> QPoly {
        poly(&[1, 0, -4, 1])
    }

    pub fn example3_t() -> QMatrix {
        qm(
            6,
            6,
            &[
                1, 0, 0, 0, 0, 0, //
                0, 1, 0, 1, 0, 0, //
                0, 0, 1, 0, 2, 0, //
                -2, 0, 0, 0, 0, 3, //
                0, -2, 0, -8, 0, 0, //
                0, 0, -2, 0, -10, 0,
            ],
        )
    }

    pub fn example3_x1() -> QMatrix {
        qm(3, 3, &[1, -1, 1, -2, 1, -1, 2, -2, 1])
    }

    pub fn example3_x2() -> QMatrix {
        scaled(307, 3, 3, &[41, 26, 9, -18, 41, 26, -52, -18, 41])
    }

    pub fn example3_x() -> QMatrix {
        scaled(
            27 * 307,
            6,
            6,
            &[
                8451, -11421, 13581, 81, -1566, 2646, //
                -10584, 8451, -11421, 2997, 81, -1566, //
                6264, -10584, 8451, -5157, 2997, 81, //
                -324, 6264, -10584, 8127, -5157, 2997, //
                -11988, -324, 6264, -22572, 8127, -5157, //
                20628, -11988, -324, 26892, -22572, 8127,
            ],
        )
    }

    pub fn example4_p() -> QPoly {
        poly(&[1, 5, -4, 1])
    }

    pub fn j5_3() -> QMatrix {
        cj_block_by_hand(&poly(&[-3, 1]), 5)
    }

    pub fn example4_chain() -> Vec<i64> {
        vec![2, 1, -2, 7, -30]
    }

    pub fn intro_a() -> QMatrix {
        qm(2, 2, &[4, 1, 0, 4])
    }

    pub fn intro_x() -> QMatrix {
        fracs(2, 2, &[(2, 1), (1, 4), (0, 1), (2, 1)])
    }

    pub fn j2_0() -> QMatrix {
        qm(2, 2, &[0, 1, 0, 0])
    }

    pub fn j2_0_plus_0() -> QMatrix {
        qm(3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 0])
    }
}

pub mod random {
    use super::*;

    pub fn small_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
        rat_frac(rng.gen_range(-num..=num), rng.gen_range(1..=den))
    }

    pub fn rational_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, num: i64, den: i64) -> QMatrix {
        QMatrix::new(rows, cols, (0..rows * cols).map(|_| small_rational(rng, num, den)).collect()).unwrap()
    }

    pub fn integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> QMatrix {
        QMatrix::new(rows, cols, (0..rows * cols).map(|_| rat(rng.gen_range(-bound..=bound))).collect()).unwrap()
    }

    pub fn rational_poly<R: Rng>(rng: &mut R, max_deg: usize, num: i64, den: i64) -> QPoly {
        let deg = rng.gen_range(0..=max_deg);
        QPoly::new((0..=deg).map(|_| small_rational(rng, num, den)).collect())
    }

    pub fn monic_integer_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> QPoly {
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        c.push(1);
        poly(&c)
    }

    /// Monic irreducible of degree `k ≤ 3`, irreducibility decided by the rational root test.
    pub fn irreducible<R: Rng>(rng: &mut R, k: usize, bound: i64) -> QPoly {
        assert!((1..=3).contains(&k));
        loop {
            let g = monic_integer_poly(rng, k, bound);
            if k == 1 || oracle::rational_roots(&g).is_empty() {
                return g;
            }
        }
    }

    /// Integer `R` with `det R = ±1` and its inverse, both built from elementary operations.
    pub fn unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (QMatrix, QMatrix) {
        let mut r = QMatrix::identity(n);
        let mut r_inv = QMatrix::identity(n);
        if n < 2 {
            return (r, r_inv);
        }
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = rat(*[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap());
            // R ← E·R with E = I + c·e_i e_jᵀ;  R⁻¹ ← R⁻¹·E⁻¹
            for col in 0..n {
                let v = &r[(i, col)] + &(&c * &r[(j, col)]);
                r[(i, col)] = v;
            }
            for row in 0..n {
                let v = &r_inv[(row, j)] - &(&c * &r_inv[(row, i)]);
                r_inv[(row, j)] = v;
            }
        }
        (r, r_inv)
    }
}

pub mod oracle {
    use super::*;

    fn divisors(n: &BigInt) -> Vec<BigInt> {
        let n = n.abs().to_u64().expect("small constant for the rational root test");
        let mut out = Vec::new();
        let mut d = 1u64;
        while d * d <= n {
            if n % d == 0 {
                out.push(BigInt::from(d));
                if d * d != n {
                    out.push(BigInt::from(n / d));
                }
            }
            d += 1;
        }
        out
    }

    fn integer_coeffs(p: &QPoly) -> Vec<BigInt> {
        let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        p.coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    /// Distinct rational roots, by the rational root theorem.
    pub fn rational_roots(p: &QPoly) -> Vec<Rational> {
        let mut c = integer_coeffs(p);
        let mut roots = Vec::new();
        if c.iter().all(Zero::is_zero) {
            panic!("rational_roots of zero");
        }
        if c[0].is_zero() {
            roots.push(Rational::zero());
            while c[0].is_zero() {
                c.remove(0);
            }
        }
        if c.len() < 2 {
            return roots;
        }
        let lead = c.last().unwrap().clone();
        let p_int = QPoly::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect());
        for num in divisors(&c[0]) {
            for den in divisors(&lead) {
                for sign in [1, -1] {
                    let r = Rational::new(&num * sign, den.clone());
                    if p_int.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
        c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// All complex roots of a monic polynomial (Durand–Kerner, then Newton).
    pub fn complex_roots(c: &[Complex64]) -> Vec<Complex64> {
        let n = c.len() - 1;
        let deriv: Vec<Complex64> = c.iter().enumerate().skip(1).map(|(i, &a)| a * i as f64).collect();
        let seed = Complex64::new(0.4, 0.9);
        let scale = 1.0 + c.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32) * scale).collect();
        for _ in 0..2000 {
            let mut delta = 0.0f64;
            for i in 0..n {
                let mut den = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        den *= z[i] - z[j];
                    }
                }
                let step = horner(c, z[i]) / den;
                z[i] -= step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-15 * scale {
                break;
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..4 {
                let d = horner(&deriv, *zi);
                if d.norm() > 1e-300 {
                    *zi -= horner(c, *zi) / d;
                }
            }
        }
        z
    }

    fn to_c(r: &Rational) -> Complex64 {
        Complex64::new(r.to_f64().unwrap(), 0.0)
    }

    fn complex_solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
        let n = b.len();
        for col in 0..n {
            let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).unwrap();
            a.swap(col, piv);
            b.swap(col, piv);
            for row in col + 1..n {
                let f = a[row][col] / a[col][col];
                for k in col..n {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
                let v = b[col];
                b[row] -= f * v;
            }
        }
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for row in (0..n).rev() {
            let mut acc = b[row];
            for k in row + 1..n {
                acc -= a[row][k] * x[k];
            }
            x[row] = acc / a[row][row];
        }
        x
    }

    /// Number of `μ ∈ ℚ[λ]/(g)` with `p(μ) = λ̄`, found through the complex embeddings.
    ///
    /// `p` must be monic with integer coefficients and `g` monic integer
    /// irreducible, so every such `μ` is an algebraic integer and its
    /// coordinates lie in `(1/disc g)·ℤ`. Candidates are rounded to that
    /// lattice and confirmed with exact arithmetic.
    pub fn embedding_root_count(p: &QPoly, g: &QPoly) -> usize {
        let k = g.degree().unwrap();
        let thetas = complex_roots(&g.coeffs().iter().map(to_c).collect::<Vec<_>>());
        let per_conjugate: Vec<Vec<Complex64>> = thetas
            .iter()
            .map(|&th| {
                let mut c: Vec<Complex64> = p.coeffs().iter().map(to_c).collect();
                c[0] -= th;
                complex_roots(&c)
            })
            .collect();
        let disc = g.resultant(&g.derivative()).abs();
        let field = NumberField::new(g.clone()).unwrap();
        let lambda = field.generator();
        let vander: Vec<Vec<Complex64>> = thetas.iter().map(|&th| (0..k).map(|i| th.powu(i as u32)).collect()).collect();
        let mut found: Vec<Vec<Rational>> = Vec::new();
        let l = per_conjugate[0].len();
        for idx in 0..l.pow(k as u32) {
            let mut choice = idx;
            let rhs: Vec<Complex64> = per_conjugate
                .iter()
                .map(|roots| {
                    let t = roots[choice % l];
                    choice /= l;
                    t
                })
                .collect();
            let c = complex_solve(vander.clone(), rhs);
            if c.iter().any(|z| z.im.abs() > 1e-6 * (1.0 + z.re.abs())) {
                continue;
            }
            let d = disc.to_f64().unwrap();
            let coords: Vec<Rational> = c
                .iter()
                .map(|z| {
                    let n = (z.re * d).round();
                    Rational::new(BigInt::from(n as i64), disc.to_integer())
                })
                .collect();
            let mu = field.element(coords.clone()).unwrap();
            if nf_poly_eval(p, &mu) == lambda && !found.contains(&coords) {
                found.push(coords);
            }
        }
        found.len()
    }

    /// Every rational 2×2 `X` with `p(X) = A` for quadratic `p` and non-scalar `A`.
    ///
    /// Cayley–Hamilton gives `p(X) = s·X + c·I` with `s = p₂·tr X + p₁` and
    /// `c = p₀ − p₂·det X`. Non-scalar `A` forces `s ≠ 0` and `X = (A − cI)/s`;
    /// the trace and determinant conditions then leave a quartic in `s`
    /// whose rational roots are enumerated.
    pub fn brute_force_2x2(p: &QPoly, a: &QMatrix) -> Vec<QMatrix> {
        assert_eq!(p.degree(), Some(2));
        assert!(!(a[(0, 1)].is_zero() && a[(1, 0)].is_zero() && a[(0, 0)] == a[(1, 1)]));
        let (p0, p1, p2) = (p.coeff(0), p.coeff(1), p.coeff(2));
        let tr = &a[(0, 0)] + &a[(1, 1)];
        let det = &a[(0, 0)] * &a[(1, 1)] - &a[(0, 1)] * &a[(1, 0)];
        let s = QPoly::x();
        let k = |x: &Rational| QPoly::constant(x.clone());
        // c(s) = (p₂·tr + p₁·s − s²) / (2p₂)
        let c = &(&(&k(&(&p2 * &tr)) + &(&k(&p1) * &s)) - &(&s * &s)) * &k(&(Rational::one() / (&p2 * rat(2))));
        // (p₀ − c)·s² = p₂·(c² − c·tr + det)
        let lhs = &(&k(&p0) - &c) * &(&s * &s);
        let rhs = &(&(&(&c * &c) - &(&c * &k(&tr))) + &k(&det)) * &k(&p2);
        let quartic = &lhs - &rhs;
        let mut out = Vec::new();
        for sv in rational_roots(&quartic) {
            if sv.is_zero() {
                continue;
            }
            let cv = c.eval(&sv);
            let mut x = a.clone();
            for i in 0..2 {
                x[(i, i)] = &x[(i, i)] - &cv;
            }
            let x = x.scale(&(Rational::one() / sv));
            if x.eval_poly(p).unwrap() == *a {
                out.push(x);
            }
        }
        out
    }

    /// Right-hand side of the chain equation for `X_j` written with the
    /// explicit `W_i` expansion, `parts = [X₁, …, X_{j−1}]`, `j ≥ 3`.
    pub fn chain_rhs_expanded(p: &QPoly, parts: &[QMatrix]) -> QMatrix {
        let j = parts.len() + 1;
        assert!(j >= 3);
        let k = parts[0].rows();
        let x1 = &parts[0];
        let mut row = QMatrix::zeros(k, (j - 2) * k);
        let mut col = QMatrix::zeros((j - 2) * k, k);
        for b in 0..j - 2 {
            row.set_block(0, b * k, &parts[b + 1]);
            col.set_block(b * k, 0, &parts[j - 2 - b]);
        }
        let x1_tilde = toeplitz_by_hand(&parts[..j - 2]);
        let pow = |m: &QMatrix, e: usize| m.pow(e as u32).unwrap();
        let mut acc = QMatrix::zeros(k, k);
        let l = p.degree().unwrap();
        for m in 2..=l {
            let pm = p.coeff(m);
            if pm.is_zero() {
                continue;
            }
            for i in 0..=m - 2 {
                for nu in 0..=m - i - 2 {
                    let term = &(&(&(&pow(x1, m - i - 2 - nu) * &row) * &pow(&x1_tilde, nu)) * &col) * &pow(x1, i);
                    acc = &acc + &term.scale(&pm);
                }
            }
        }
        -&acc
    }
}
