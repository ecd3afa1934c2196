//! Row reduction, rank, inverses and general linear systems.
//!
//! Two routes solve `M·v = rhs`: [`solve_linear_gauss`] runs Gauss–Jordan
//! over any [`Scalar`] field, and [`solve_linear`] clears denominators and
//! runs fraction-free (Bareiss) elimination over ℤ before back-substituting
//! in ℚ. Both set free variables to zero, so on exact input they agree
//! entry for entry.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::Matrix;
use crate::{Error, QMatrix, Rational, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionStatus {
    Unique,
    AffineFamily,
    Inconsistent,
}

/// Solution set of `M·v = rhs`: `particular + span(nullspace_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution<T: Scalar> {
    pub status: SolutionStatus,
    pub particular: Option<Matrix<T>>,
    pub nullspace_basis: Vec<Matrix<T>>,
}

impl<T: Scalar> LinearSolution<T> {
    fn from_parts(particular: Option<Matrix<T>>, nullspace_basis: Vec<Matrix<T>>) -> Self {
        let status = match (&particular, nullspace_basis.is_empty()) {
            (None, _) => SolutionStatus::Inconsistent,
            (Some(_), true) => SolutionStatus::Unique,
            (Some(_), false) => SolutionStatus::AffineFamily,
        };
        LinearSolution {
            status,
            particular,
            nullspace_basis,
        }
    }
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = T::one() / a[(r, c)].clone();
        for j in c..cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : M·v = 0}`, one vector per free column (that column set to one).
pub fn nullspace<T: Scalar>(m: &Matrix<T>) -> Vec<Matrix<T>> {
    let (r, pivots) = rref(m);
    free_basis(m.cols(), &pivots, |row, col| r[(row, col)].clone())
}

fn free_basis<T: Scalar>(
    cols: usize,
    pivots: &[usize],
    reduced: impl Fn(usize, usize) -> T,
) -> Vec<Matrix<T>> {
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); cols];
            v[free] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced(row, free);
            }
            Matrix::column_vector(v)
        })
        .collect()
}

fn check_system<T: Scalar>(m: &Matrix<T>, rhs: &Matrix<T>) -> Result<()> {
    if rhs.cols() != 1 || rhs.rows() != m.rows() {
        return Err(Error::Shape {
            op: "solve_linear",
            left: m.shape(),
            right: rhs.shape(),
        });
    }
    Ok(())
}

/// Gauss–Jordan solution of `M·v = rhs` over any field.
pub fn solve_linear_gauss<T: Scalar>(m: &Matrix<T>, rhs: &Matrix<T>) -> Result<LinearSolution<T>> {
    check_system(m, rhs)?;
    let n = m.cols();
    let aug = Matrix::hstack(&[m.clone(), rhs.clone()])?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::from_parts(None, Vec::new()));
    }
    let mut x = vec![T::zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, n)].clone();
    }
    let basis = free_basis(n, &pivots, |row, col| r[(row, col)].clone());
    Ok(LinearSolution::from_parts(Some(Matrix::column_vector(x)), basis))
}

/// Inverse by Gauss–Jordan on `[A | I]`.
pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square("inverse")?;
    let n = a.rows();
    let aug = Matrix::hstack(&[a.clone(), Matrix::identity(n)])?;
    let (r, pivots) = rref(&aug);
    let rank = pivots.iter().filter(|&&c| c < n).count();
    if rank < n {
        return Err(Error::Singular { size: n, rank });
    }
    Ok(r.block(0, n, n, n))
}

/// Integer echelon form of `[m | rhs]` produced by Bareiss elimination.
struct Bareiss {
    a: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Bareiss {
    fn eliminate(rows: Vec<Vec<BigInt>>, elim_cols: usize) -> Self {
        let mut a = rows;
        let nrows = a.len();
        let total = a.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..elim_cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            for i in r + 1..nrows {
                let factor = a[i][c].clone();
                for j in c + 1..total {
                    let num = &a[r][c] * &a[i][j] - &factor * &a[r][j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division is exact");
                    a[i][j] = q;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Bareiss { a, pivots }
    }

    /// Back-substitution with the given free-variable values (all others zero).
    fn back_substitute(&self, n: usize, rhs_col: Option<usize>, free: Option<usize>) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        if let Some(f) = free {
            x[f] = Rational::one();
        }
        for (row, &pc) in self.pivots.iter().enumerate().rev() {
            let mut acc = match rhs_col {
                Some(c) => Rational::from_integer(self.a[row][c].clone()),
                None => Rational::zero(),
            };
            for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                if !xj.is_zero() && !self.a[row][j].is_zero() {
                    acc -= Rational::from_integer(self.a[row][j].clone()) * xj;
                }
            }
            x[pc] = acc / Rational::from_integer(self.a[row][pc].clone());
        }
        x
    }
}

fn integer_rows(m: &QMatrix, rhs: Option<&QMatrix>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let mut row: Vec<Rational> = m.row(i).to_vec();
            if let Some(b) = rhs {
                row.push(b[(i, 0)].clone());
            }
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Exact solution of `M·v = rhs` over ℚ by fraction-free elimination.
///
/// The particular solution sets every free (non-pivot) variable to zero; the
/// nullspace basis has one vector per free variable.
pub fn solve_linear(m: &QMatrix, rhs: &QMatrix) -> Result<LinearSolution<Rational>> {
    check_system(m, rhs)?;
    let n = m.cols();
    let echelon = Bareiss::eliminate(integer_rows(m, Some(rhs)), n);
    let rank = echelon.pivots.len();
    if echelon.a[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(LinearSolution::from_parts(None, Vec::new()));
    }
    let particular = Matrix::column_vector(echelon.back_substitute(n, Some(n), None));
    let basis = (0..n)
        .filter(|c| !echelon.pivots.contains(c))
        .map(|f| Matrix::column_vector(echelon.back_substitute(n, None, Some(f))))
        .collect();
    Ok(LinearSolution::from_parts(Some(particular), basis))
}

/// Rank over ℚ via fraction-free elimination.
pub fn rank_exact(m: &QMatrix) -> usize {
    Bareiss::eliminate(integer_rows(m, None), m.cols()).pivots.len()
}
