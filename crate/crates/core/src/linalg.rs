//! Small dense matrices over [`Scalar`].

use crate::scalars::int;
use crate::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

fn pivot_row(m: &Matrix, col: usize) -> Option<usize> {
    (col..m.len())
        .filter(|&r| !m[r][col].is_zero())
        .min_by_key(|&r| m[r][col].num().len() + m[r][col].den().len())
}

/// Determinant by Gaussian elimination over the fraction field.
pub fn det(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut d = int(1);
    for col in 0..n {
        let Some(p) = pivot_row(&a, col) else {
            return int(0);
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let piv = a[col][col].clone();
        d = &d * &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let v = &a[r][c] - &(&f * &a[col][c]);
                a[r][c] = v;
            }
        }
    }
    d
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| int((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let p = pivot_row(&a, col)?;
        a.swap(p, col);
        inv.swap(p, col);
        let piv = a[col][col].inv().ok()?;
        for c in 0..n {
            a[col][c] = &a[col][c] * &piv;
            inv[col][c] = &inv[col][c] * &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let v = &a[r][c] - &(&f * &a[col][c]);
                a[r][c] = v;
                let w = &inv[r][c] - &(&f * &inv[col][c]);
                inv[r][c] = w;
            }
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(int(0), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

/// Cofactor expansion along the first row. Stays inside the ring when the
/// entries do, so it avoids gcd work on polynomial matrices.
fn expand(m: &[Vec<Scalar>]) -> Scalar {
    match m.len() {
        0 => int(1),
        1 => m[0][0].clone(),
        n => {
            let mut acc = int(0);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][c] * &expand(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Solve `m x = b`; `None` when singular.
///
/// Small systems go through Cramer's rule, larger ones through [`inverse`].
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    if m.len() > 5 {
        return inverse(m).map(|inv| mat_vec(&inv, b));
    }
    let d = expand(m);
    if d.is_zero() {
        return None;
    }
    let x = (0..m.len())
        .map(|i| {
            let mi: Matrix = m
                .iter()
                .zip(b)
                .map(|(row, bi)| {
                    let mut row = row.clone();
                    row[i] = bi.clone();
                    row
                })
                .collect();
            &expand(&mi) / &d
        })
        .collect();
    Some(x)
}
