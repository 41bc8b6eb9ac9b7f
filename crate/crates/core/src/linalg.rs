//! Exact determinants and ranks.
//!
//! Rational matrices are scaled row by row to integer matrices and reduced
//! with Bareiss' fraction-free elimination, so every intermediate value is an
//! exact integer and every division is exact. Polynomial matrices use Laplace
//! expansion memoized on the set of remaining columns; no division by a
//! polynomial ever happens.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;

fn check_square<T>(matrix: &[Vec<T>]) -> Result<usize> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

fn check_rectangular<T>(matrix: &[Vec<T>]) -> Result<usize> {
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged rows".into()));
    }
    Ok(cols)
}

/// Scales every row to integers. Returns the integer matrix and the product
/// of the row multipliers.
fn integer_rows(matrix: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = matrix
        .iter()
        .map(|row| {
            let l = Rational::lcm_denominators(row);
            let out = row
                .iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect();
            scale *= &l;
            out
        })
        .collect();
    (rows, scale)
}

/// Bareiss elimination in place. Returns the determinant of the leading
/// square block, with row swaps accounted for.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square rational matrix. The 0×0 determinant is 1.
pub fn determinant_exact(matrix: &[Vec<Rational>]) -> Result<Rational> {
    check_square(matrix)?;
    let (ints, scale) = integer_rows(matrix);
    let det = bareiss_det(ints);
    Rational::from_big(det, scale)
}

/// Exact rank of a rectangular rational matrix via fraction-free elimination.
pub fn rank_exact(matrix: &[Vec<Rational>]) -> Result<usize> {
    let cols = check_rectangular(matrix)?;
    let (mut a, _) = integer_rows(matrix);
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    Ok(rank)
}

/// Exact determinant of a square matrix of polynomials.
///
/// Expands along rows, memoizing minors by the bitmask of unused columns.
/// Supports up to 63 columns, far beyond what is ever needed here.
pub fn determinant_polynomial(matrix: &[Vec<SparsePolynomial>]) -> Result<SparsePolynomial> {
    let n = check_square(matrix)?;
    if n >= 64 {
        return Err(Error::Dimension(format!("{n}x{n} exceeds the expansion limit")));
    }
    let mut memo: HashMap<u64, SparsePolynomial> = HashMap::new();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    Ok(laplace(matrix, full, &mut memo))
}

fn laplace(
    matrix: &[Vec<SparsePolynomial>],
    cols: u64,
    memo: &mut HashMap<u64, SparsePolynomial>,
) -> SparsePolynomial {
    let n = matrix.len();
    let row = n - cols.count_ones() as usize;
    if row == n {
        return SparsePolynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = SparsePolynomial::zero();
    let mut seen = 0u32;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &matrix[row][c];
        if !entry.is_zero() {
            let sub = laplace(matrix, cols & !(1 << c), memo);
            let term = entry * &sub;
            acc = if seen.is_multiple_of(2) { &acc + &term } else { &acc - &term };
        }
        seen += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Rows `rows` and columns `cols` of `matrix`.
pub fn submatrix<T: Clone>(matrix: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| matrix[r][c].clone()).collect())
        .collect()
}

/// Product of two polynomial matrices.
pub fn matmul_polynomial(
    a: &[Vec<SparsePolynomial>],
    b: &[Vec<SparsePolynomial>],
) -> Result<Vec<Vec<SparsePolynomial>>> {
    let inner = check_rectangular(a)?;
    if b.len() != inner {
        return Err(Error::Dimension(format!(
            "cannot multiply {}x{inner} by {}x_",
            a.len(),
            b.len()
        )));
    }
    let cols = check_rectangular(b)?;
    Ok(a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(SparsePolynomial::zero(), |acc, (x, brow)| {
                            &acc + &(x * &brow[j])
                        })
                })
                .collect()
        })
        .collect())
}
