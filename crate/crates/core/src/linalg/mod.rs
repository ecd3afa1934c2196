//! Dense matrices, exact linear systems, characteristic and minimal polynomials.

mod matrix;
mod solve;

pub use matrix::{mat_poly_eval, Matrix};
pub use solve::{
    inverse, nullspace, rank, rank_exact, rref, solve_linear, solve_linear_gauss, LinearSolution,
    SolutionStatus,
};

use crate::{Error, Polynomial, Result, Scalar};

/// `det(λI − A)` by the Faddeev–LeVerrier recurrence.
pub fn charpoly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    a.require_square("charpoly")?;
    let n = a.rows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = &(a * &m) + &Matrix::scalar(n, coeffs[n + 1 - k].clone());
        let k_t = T::from_usize(k).ok_or_else(|| Error::Internal("index overflow".into()))?;
        coeffs[n - k] = -((a * &m).trace() / k_t);
    }
    Ok(Polynomial::new(coeffs))
}

/// Minimal polynomial as the lcm of the Krylov relations of the standard basis vectors.
pub fn minpoly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    a.require_square("minpoly")?;
    let n = a.rows();
    let mut acc = Polynomial::one();
    for i in 0..n {
        let mut e = vec![T::zero(); n];
        e[i] = T::one();
        let rel = krylov_relation(a, &Matrix::column_vector(e))?;
        let g = acc.gcd(&rel)?;
        acc = (&acc * &rel).div_exact(&g)?;
    }
    acc.monic()
}

/// Monic polynomial `q` of least degree with `q(A)·v = 0`.
pub(crate) fn krylov_relation<T: Scalar>(a: &Matrix<T>, v: &Matrix<T>) -> Result<Polynomial<T>> {
    let mut basis: Vec<Matrix<T>> = Vec::new();
    let mut current = v.clone();
    loop {
        if basis.is_empty() {
            if current.is_zero() {
                return Ok(Polynomial::one());
            }
        } else {
            let k = Matrix::hstack(&basis)?;
            let sol = solve_linear_gauss(&k, &current)?;
            if let Some(c) = sol.particular {
                let j = basis.len();
                let mut coeffs: Vec<T> = (0..j).map(|i| -c[(i, 0)].clone()).collect();
                coeffs.push(T::one());
                return Ok(Polynomial::new(coeffs));
            }
        }
        let next = a * &current;
        basis.push(current);
        current = next;
    }
}

/// `true` iff the minimal and characteristic polynomials coincide.
pub fn is_nonderogatory<T: Scalar>(a: &Matrix<T>) -> Result<bool> {
    Ok(minpoly(a)? == charpoly(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use crate::{QMatrix, QPoly};
    use proptest::prelude::*;

    fn example_one() -> QMatrix {
        let mut a = QMatrix::zeros(6, 6);
        for i in 0..5 {
            a[(i, i + 1)] = rat(1);
        }
        for (j, c) in [-64, 0, -48, 0, -12, 0].into_iter().enumerate() {
            a[(5, j)] = rat(c);
        }
        a
    }

    fn derogatory_j2() -> QMatrix {
        QMatrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 0])
    }

    #[test]
    fn charpoly_examples() {
        let target = QPoly::from_i64(&[64, 0, 48, 0, 12, 0, 1]);
        assert_eq!(charpoly(&example_one()).unwrap(), target);
        let j5 = QMatrix::from_i64(
            5,
            5,
            &[3, 1, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 3],
        );
        assert_eq!(charpoly(&j5).unwrap(), QPoly::from_i64(&[-3, 1]).pow(5));
        assert!(charpoly(&QMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn minpoly_examples() {
        assert_eq!(minpoly(&QMatrix::identity(2)).unwrap(), QPoly::from_i64(&[-1, 1]));
        assert_eq!(minpoly(&derogatory_j2()).unwrap(), QPoly::from_i64(&[0, 0, 1]));
        assert_eq!(
            minpoly(&example_one()).unwrap(),
            QPoly::from_i64(&[4, 0, 1]).pow(3)
        );
    }

    #[test]
    fn nonderogatory_examples() {
        assert!(is_nonderogatory(&example_one()).unwrap());
        assert!(!is_nonderogatory(&QMatrix::identity(2)).unwrap());
        assert!(!is_nonderogatory(&derogatory_j2()).unwrap());
    }

    #[test]
    fn float_charpoly() {
        let a = crate::Matrix64::from_i64(2, 2, &[1, 2, 3, 4]);
        let p = charpoly(&a).unwrap();
        assert_eq!(p.coeffs(), &[-2.0, -5.0, 1.0]);
    }

    fn companion_of(g: &QPoly) -> QMatrix {
        let k = g.degree().unwrap();
        let mut c = QMatrix::zeros(k, k);
        for i in 0..k.saturating_sub(1) {
            c[(i, i + 1)] = rat(1);
        }
        for j in 0..k {
            c[(k - 1, j)] = -g.coeff(j);
        }
        c
    }

    fn small_square() -> impl Strategy<Value = QMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| QMatrix::from_i64(n, n, &v))
        })
    }

    proptest! {
        #[test]
        fn companion_round_trip(tail in prop::collection::vec(-9i64..=9, 1..=8)) {
            let mut c = tail.clone();
            c.push(1);
            let g = QPoly::from_i64(&c);
            let comp = companion_of(&g);
            prop_assert_eq!(charpoly(&comp).unwrap(), g);
            prop_assert!(is_nonderogatory(&comp).unwrap());
        }

        #[test]
        fn cayley_hamilton_and_divisibility(a in small_square()) {
            let chi = charpoly(&a).unwrap();
            prop_assert!(mat_poly_eval(&chi, &a).unwrap().is_zero());
            let mu = minpoly(&a).unwrap();
            prop_assert!(mat_poly_eval(&mu, &a).unwrap().is_zero());
            prop_assert!(chi.rem(&mu).unwrap().is_zero());
        }
    }
}
