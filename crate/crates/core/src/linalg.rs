//! Small dense exact linear algebra over the rationals (Gaussian elimination).

use num_traits::{One, Zero};

use crate::algebra::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn from_ints(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Reduces the augmented system `[a | rhs]` in place to reduced row echelon
/// form. Returns `None` when `a` is singular, else the determinant of `a`.
fn eliminate(a: &mut Matrix, rhs: &mut Matrix) -> Option<Rational> {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        if pivot != col {
            a.swap(pivot, col);
            rhs.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let p_inv = p.recip();
        for x in a[col].iter_mut() {
            *x *= &p_inv;
        }
        for x in rhs[col].iter_mut() {
            *x *= &p_inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
            for c in 0..rhs[r].len() {
                let delta = &f * &rhs[col][c];
                rhs[r][c] -= delta;
            }
        }
    }
    Some(det)
}

pub fn determinant(a: &Matrix) -> Rational {
    let mut work = a.clone();
    let mut rhs: Matrix = vec![Vec::new(); a.len()];
    eliminate(&mut work, &mut rhs).unwrap_or_else(Rational::zero)
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let mut work = a.clone();
    let mut rhs = identity(a.len());
    eliminate(&mut work, &mut rhs)?;
    Some(rhs)
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let mut work = a.clone();
    let mut rhs: Matrix = b.iter().map(|x| vec![x.clone()]).collect();
    eliminate(&mut work, &mut rhs)?;
    Some(rhs.into_iter().map(|mut r| r.remove(0)).collect())
}
