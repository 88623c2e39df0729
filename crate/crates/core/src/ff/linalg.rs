//! Dense linear algebra over a [`Field`]: row-major matrices as
//! `Vec<Vec<E>>`, exact Gauss–Jordan elimination.

use super::Field;
use crate::error::{Error, Result};

pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix; [`Error::SingularMatrix`] if it has none.
pub fn invert<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: m.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(n),
        });
    }
    let mut a = m.clone();
    let mut inv = identity(field, n);
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !field.is_zero(&a[r][col]))
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = field.inv(&a[col][col])?;
        for j in 0..n {
            a[col][j] = field.mul(&a[col][j], &s);
            inv[col][j] = field.mul(&inv[col][j], &s);
        }
        for r in 0..n {
            if r == col || field.is_zero(&a[r][col]) {
                continue;
            }
            let c = a[r][col].clone();
            for j in 0..n {
                let t = field.mul(&c, &a[col][j]);
                a[r][j] = field.sub(&a[r][j], &t);
                let t = field.mul(&c, &inv[col][j]);
                inv[r][j] = field.sub(&inv[r][j], &t);
            }
        }
    }
    Ok(inv)
}

/// Row vector times matrix: `(v·M)_j = Σ_i v_i M_ij`.
pub fn vec_mat<F: Field>(field: &F, v: &[F::Elem], m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![field.zero(); cols];
    for (vi, row) in v.iter().zip(m) {
        if field.is_zero(vi) {
            continue;
        }
        for (o, mij) in out.iter_mut().zip(row) {
            *o = field.add(o, &field.mul(vi, mij));
        }
    }
    out
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    a.iter().map(|row| vec_mat(field, row, b)).collect()
}

/// Solves `M x = b` for square invertible `M`.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let inv = invert(field, m)?;
    Ok(inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(b)
                .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;

    #[test]
    fn invert_and_solve() {
        let f = FieldSpec::prime(7).unwrap();
        let e = |v: u64| f.from_u64(v);
        let m = vec![
            vec![e(0), e(2), e(1)],
            vec![e(1), e(1), e(0)],
            vec![e(3), e(0), e(5)],
        ];
        let inv = invert(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 3));
        let x = solve(&f, &m, &[e(1), e(2), e(3)]).unwrap();
        let back: Vec<_> = m
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&x)
                    .fold(f.zero(), |a, (p, q)| f.add(&a, &f.mul(p, q)))
            })
            .collect();
        assert_eq!(back, vec![e(1), e(2), e(3)]);
        let sing = vec![vec![e(1), e(2)], vec![e(2), e(4)]];
        assert_eq!(invert(&f, &sing), Err(Error::SingularMatrix));
    }
}
