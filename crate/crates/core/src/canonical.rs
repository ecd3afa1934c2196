//! Companion matrices, invariant factors and the companion-Jordan form.
//!
//! Orientation: a decomposition stores `T` and `T_inv` with
//! `T_inv · A · T = C_1 ⊕ … ⊕ C_r`, where each `C_j` has `C_{g_j}` on the
//! diagonal and identity blocks on the first block superdiagonal.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::arith::{canonical_cmp, factor, is_irreducible};
use crate::linalg::{charpoly, inverse, nullspace, rank};
use crate::{Error, QMatrix, QPoly, Rational, Result};

/// One elementary divisor `g^d` with `g` monic irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryBlock {
    pub g: QPoly,
    pub d: usize,
}

impl ElementaryBlock {
    pub fn k(&self) -> usize {
        self.g.degree().expect("nonzero g")
    }

    pub fn dim(&self) -> usize {
        self.k() * self.d
    }

    /// The block bidiagonal `C_j`.
    pub fn matrix(&self) -> QMatrix {
        cj_block(&self.g, self.d).expect("validated block")
    }

    fn canonical_order(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.g, &other.g).then(other.d.cmp(&self.d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionJordanDecomposition {
    pub blocks: Vec<ElementaryBlock>,
    pub t: QMatrix,
    pub t_inv: QMatrix,
}

impl CompanionJordanDecomposition {
    /// `C_1 ⊕ … ⊕ C_r`.
    pub fn canonical_matrix(&self) -> QMatrix {
        let parts: Vec<QMatrix> = self.blocks.iter().map(ElementaryBlock::matrix).collect();
        QMatrix::direct_sum(&parts)
    }

    /// Starting row/column of each block inside the canonical matrix.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                let start = *acc;
                *acc += b.dim();
                Some(start)
            })
            .collect()
    }
}

/// Companion matrix: ones on the superdiagonal, last row `−g_0, …, −g_{k−1}`.
pub fn companion(g: &QPoly) -> Result<QMatrix> {
    let k = match g.degree() {
        Some(k) if k >= 1 && g.is_monic() => k,
        _ => return Err(Error::domain(format!("companion matrix needs a monic nonconstant polynomial, got {g}"))),
    };
    let mut c = QMatrix::zeros(k, k);
    for i in 0..k - 1 {
        c[(i, i + 1)] = Rational::one();
    }
    for j in 0..k {
        c[(k - 1, j)] = -g.coeff(j);
    }
    Ok(c)
}

fn binomial(n: usize, r: usize) -> Rational {
    (0..r).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into())
    })
}

/// `S_j` of size `n`: `binom(r, j)` at `(r, r − j)`, so `S_j·v_n(λ) = v_n^{(j)}(λ)/j!`.
pub fn s_matrix(j: usize, n: usize) -> Result<QMatrix> {
    if j > n {
        return Err(Error::domain(format!("S_{j} is undefined for size {n}")));
    }
    let mut s = QMatrix::zeros(n, n);
    for r in j..n {
        s[(r, r - j)] = binomial(r, j);
    }
    Ok(s)
}

/// `n × k` matrix whose row `i` holds the coordinates of `λ^i mod g`, `n = k·d`.
pub fn build_w(g: &QPoly, d: usize) -> Result<QMatrix> {
    if d == 0 {
        return Err(Error::domain("block multiplicity must be positive"));
    }
    companion(g)?;
    if !is_irreducible(g)? {
        return Err(Error::domain(format!("{g} is reducible over ℚ")));
    }
    Ok(power_residues(g, d))
}

fn power_residues(g: &QPoly, d: usize) -> QMatrix {
    let k = g.degree().expect("nonzero g");
    let n = k * d;
    let mut w = QMatrix::zeros(n, k);
    let mut cur = QPoly::one();
    for i in 0..n {
        for (j, c) in cur.coeffs().iter().enumerate() {
            w[(i, j)] = c.clone();
        }
        cur = (&cur * &QPoly::x()).rem(g).expect("nonzero g");
    }
    w
}

/// Block bidiagonal matrix with `C_g` on the diagonal and `I_k` above it.
pub fn cj_block(g: &QPoly, d: usize) -> Result<QMatrix> {
    let c = companion(g)?;
    let k = c.rows();
    let mut j = QMatrix::zeros(k * d, k * d);
    for b in 0..d {
        j.set_block(b * k, b * k, &c);
        if b + 1 < d {
            j.set_block(b * k, (b + 1) * k, &QMatrix::identity(k));
        }
    }
    Ok(j)
}

/// `T = [W | S_1 W | … | S_{d−1} W]`, with `C_{g^d} · T = T · cj_block(g, d)` checked.
pub fn cj_block_transform(g: &QPoly, d: usize) -> Result<QMatrix> {
    let w = build_w(g, d)?;
    let n = w.rows();
    let parts = (0..d)
        .map(|j| Ok(&s_matrix(j, n)? * &w))
        .collect::<Result<Vec<_>>>()?;
    let t = QMatrix::hstack(&parts)?;
    let big = companion(&g.pow(d as u32))?;
    if &big * &t != &t * &cj_block(g, d)? {
        return Err(Error::Internal(format!("block transform for ({g})^{d} fails its chain identity")));
    }
    Ok(t)
}

/// Monic invariant factors `f_1 | f_2 | …` from the Smith form of `λI − A`.
pub fn invariant_factors(a: &QMatrix) -> Result<Vec<QPoly>> {
    a.require_square("invariant_factors")?;
    let n = a.rows();
    let mut m: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { QPoly::x() } else { QPoly::zero() };
                    &diag - &QPoly::constant(a[(i, j)].clone())
                })
                .collect()
        })
        .collect();
    for t in 0..n {
        smith_step(&mut m, t)?;
    }
    let mut out = Vec::new();
    for (t, row) in m.iter().enumerate() {
        let f = row[t].monic()?;
        if f.degree() != Some(0) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Clears row and column `t` beyond the pivot and makes the pivot divide the rest.
fn smith_step(m: &mut [Vec<QPoly>], t: usize) -> Result<()> {
    let n = m.len();
    loop {
        let pivot = (t..n)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by_key(|&(i, j)| m[i][j].degree());
        let Some((pi, pj)) = pivot else {
            return Ok(());
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..n {
            let (q, r) = m[i][t].divrem(&m[t][t])?;
            for j in t..n {
                let sub = &q * &m[t][j];
                m[i][j] = &m[i][j] - &sub;
            }
            clean &= r.is_zero();
        }
        for j in t + 1..n {
            let (q, r) = m[t][j].divrem(&m[t][t])?;
            for row in m.iter_mut().skip(t) {
                let sub = &q * &row[t];
                row[j] = &row[j] - &sub;
            }
            clean &= r.is_zero();
        }
        if !clean {
            continue;
        }
        let offender = (t + 1..n)
            .find(|&i| (t + 1..n).any(|j| !m[i][j].rem(&m[t][t]).map(|r| r.is_zero()).unwrap_or(true)));
        match offender {
            Some(i) => {
                for j in t..n {
                    let add = m[i][j].clone();
                    m[t][j] = &m[t][j] + &add;
                }
            }
            None => return Ok(()),
        }
    }
}

/// Companion-Jordan form with an explicit rational similarity.
///
/// Chain tops for each irreducible factor `g` are chosen level by level in
/// the kernels of `g(Aᵀ)^j`; the row-Krylov matrix `R` of all tops satisfies
/// `R·A·R⁻¹ = ⊕ C_{g^d}`, and the per-block transforms finish the job.
pub fn companion_jordan_form(a: &QMatrix) -> Result<CompanionJordanDecomposition> {
    a.require_square("companion_jordan_form")?;
    let n = a.rows();
    let b = a.transpose();
    let mut chains: Vec<(ElementaryBlock, QMatrix)> = Vec::new();
    for (g, e) in factor(&charpoly(a)?)?.factors {
        for (d, top) in chain_tops(&b, &g, e)? {
            chains.push((ElementaryBlock { g: g.clone(), d }, top));
        }
    }
    chains.sort_by(|x, y| x.0.canonical_order(&y.0));

    let mut rows = Vec::with_capacity(n);
    let mut transforms = Vec::new();
    let mut transform_invs = Vec::new();
    for (block, top) in &chains {
        let mut v = top.clone();
        for _ in 0..block.dim() {
            let next = &b * &v;
            rows.push(v.transpose());
            v = next;
        }
        let tc = cj_block_transform(&block.g, block.d)?;
        transform_invs.push(inverse(&tc)?);
        transforms.push(tc);
    }
    let r = if n == 0 { QMatrix::zeros(0, 0) } else { QMatrix::vstack(&rows)? };
    let t = &inverse(&r)? * &QMatrix::direct_sum(&transforms);
    let t_inv = &QMatrix::direct_sum(&transform_invs) * &r;
    let decomposition = CompanionJordanDecomposition {
        blocks: chains.into_iter().map(|(b, _)| b).collect(),
        t,
        t_inv,
    };
    if &(&decomposition.t_inv * a) * &decomposition.t != decomposition.canonical_matrix() {
        return Err(Error::Internal("companion-Jordan similarity failed to verify".into()));
    }
    Ok(decomposition)
}

/// `(d, top)` pairs for the `g`-primary part, `e` the multiplicity of `g` in the charpoly.
fn chain_tops(b: &QMatrix, g: &QPoly, e: usize) -> Result<Vec<(usize, QMatrix)>> {
    let n = b.rows();
    let k = g.degree().expect("nonzero g");
    let ng = b.eval_poly(g)?;
    let mut powers = vec![QMatrix::identity(n)];
    let mut kernels: Vec<Vec<QMatrix>> = vec![Vec::new()];
    while kernels.last().map_or(0, Vec::len) < k * e {
        let next = &ng * powers.last().expect("nonempty");
        kernels.push(nullspace(&next));
        powers.push(next);
        if powers.len() > n + 1 {
            return Err(Error::Internal(format!("kernel chain of ({g}) does not stabilise")));
        }
    }
    let m = kernels.len() - 1;
    let at_least = |j: usize| {
        if j > m {
            0
        } else {
            (kernels[j].len() - kernels[j - 1].len()) / k
        }
    };
    let krylov = |v: &QMatrix| -> Vec<QMatrix> {
        let mut out = Vec::with_capacity(k);
        let mut cur = v.clone();
        for _ in 0..k {
            let next = b * &cur;
            out.push(cur);
            cur = next;
        }
        out
    };

    let mut tops: Vec<(usize, QMatrix)> = Vec::new();
    for j in (1..=m).rev() {
        let needed = at_least(j) - at_least(j + 1);
        let mut span = kernels[j - 1].clone();
        for (level, c) in &tops {
            span.extend(krylov(&(&powers[level - j] * c)));
        }
        let mut current = span_rank(&span);
        let standard = (0..n).filter_map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            let v = QMatrix::column_vector(e);
            (&powers[j] * &v).is_zero().then_some(v)
        });
        let mut chosen = 0;
        for c in standard.chain(kernels[j].iter().cloned()) {
            if chosen == needed {
                break;
            }
            let mut trial = span.clone();
            trial.extend(krylov(&c));
            let r = span_rank(&trial);
            if r == current + k {
                span = trial;
                current = r;
                tops.push((j, c));
                chosen += 1;
            }
        }
        if chosen < needed {
            return Err(Error::Internal(format!("no chain top at level {j} for ({g})")));
        }
    }
    Ok(tops)
}

fn span_rank(vectors: &[QMatrix]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        rank(&QMatrix::hstack(vectors).expect("column vectors"))
    }
}
