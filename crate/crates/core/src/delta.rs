//! The divided-difference operator `Δp(W, Y)(Z)`: the upper-right block of
//! `p([[W, Z], [0, Y]])`, linear in `Z`.

use crate::linalg::rank;
use crate::{Error, Matrix, Polynomial, QMatrix, QPoly, Result, Scalar};

/// `Δp(W, Y)` for square `W` (size a) and `Y` (size b), acting on `a × b` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaOperator<T: Scalar> {
    p: Polynomial<T>,
    left: Matrix<T>,
    right: Matrix<T>,
}

impl<T: Scalar> DeltaOperator<T> {
    pub fn new(p: Polynomial<T>, left: Matrix<T>, right: Matrix<T>) -> Result<Self> {
        left.require_square("delta operator")?;
        right.require_square("delta operator")?;
        Ok(DeltaOperator { p, left, right })
    }

    pub fn p(&self) -> &Polynomial<T> {
        &self.p
    }

    pub fn left(&self) -> &Matrix<T> {
        &self.left
    }

    pub fn right(&self) -> &Matrix<T> {
        &self.right
    }

    /// `Σ_m p_m D_m` with `D_1 = Z` and `D_m = W^{m−1} Z + D_{m−1} Y`.
    pub fn apply(&self, z: &Matrix<T>) -> Result<Matrix<T>> {
        let shape = (self.left.rows(), self.right.rows());
        if z.shape() != shape {
            return Err(Error::Shape {
                op: "delta_apply",
                left: shape,
                right: z.shape(),
            });
        }
        let mut acc = Matrix::zeros(shape.0, shape.1);
        let mut d = z.clone();
        let mut w_pow = Matrix::identity(shape.0);
        for (m, c) in self.p.coeffs().iter().enumerate().skip(1) {
            if m > 1 {
                w_pow = &w_pow * &self.left;
                d = &(&w_pow * z) + &(&d * &self.right);
            }
            if !c.is_zero() {
                acc = &acc + &d.scale(c);
            }
        }
        Ok(acc)
    }
}

pub fn delta_apply<T: Scalar>(op: &DeltaOperator<T>, z: &Matrix<T>) -> Result<Matrix<T>> {
    op.apply(z)
}

/// `M = Σ_m p_m Σ_i (X₁ᵀ)^i ⊗ X₁^{m−1−i}`, so that `M·vec(Z) = vec(Δp(X₁, X₁)(Z))`.
pub fn delta_coeff_matrix<T: Scalar>(p: &Polynomial<T>, x1: &Matrix<T>) -> Result<Matrix<T>> {
    x1.require_square("delta_coeff_matrix")?;
    let k = x1.rows();
    let l = p.degree().unwrap_or(0);
    let powers = x1.powers(l.saturating_sub(1))?;
    let transposed: Vec<Matrix<T>> = powers.iter().map(Matrix::transpose).collect();
    let mut m = Matrix::zeros(k * k, k * k);
    for i in 0..l {
        // Σ_{m>i} p_m X₁^{m−1−i}
        let mut inner = Matrix::zeros(k, k);
        for deg in i + 1..=l {
            let c = p.coeff(deg);
            if !c.is_zero() {
                inner = &inner + &powers[deg - 1 - i].scale(&c);
            }
        }
        m = &m + &transposed[i].kron(&inner);
    }
    Ok(m)
}

/// Exact nonsingularity of [`delta_coeff_matrix`].
pub fn is_delta_invertible(p: &QPoly, x1: &QMatrix) -> Result<bool> {
    let m = delta_coeff_matrix(p, x1)?;
    Ok(rank(&m) == m.rows())
}
