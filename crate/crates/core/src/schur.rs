//! Skew Schur polynomials: tableau sums, Jacobi–Trudi determinants, and
//! complete homogeneous symmetric polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::linalg::{determinant_exact, determinant_polynomial};
use crate::poly::{Monomial, SparsePolynomial, Var};
use crate::rational::Rational;
use crate::tableau::{enumerate_ssyt, SkewShape};

/// A point `(x_1, …, x_n)` with `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvaluationPoint(Vec<Rational>);

impl EvaluationPoint {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        contract!(!values.is_empty(), "an evaluation point needs at least one coordinate");
        Ok(EvaluationPoint(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `s_(λ/μ)(x)` as the sum of `x^T` over semistandard tableaux with entries
/// below `n`.
pub fn schur_eval(shape: &SkewShape, point: &EvaluationPoint) -> Rational {
    let x = point.values();
    enumerate_ssyt(shape, x.len())
        .map(|t| {
            t.weight(x.len())
                .iter()
                .zip(x)
                .map(|(&e, xi)| xi.pow(e as u32))
                .product::<Rational>()
        })
        .sum()
}

/// `h_0, …, h_kmax` at the point, by the recurrence
/// `h_k(x_1..x_j) = h_k(x_1..x_(j-1)) + x_j · h_(k-1)(x_1..x_j)`.
pub fn complete_homogeneous_all(kmax: usize, point: &EvaluationPoint) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); kmax + 1];
    h[0] = Rational::one();
    for x in point.values() {
        for k in 1..=kmax {
            let add = x * &h[k - 1];
            h[k] += add;
        }
    }
    h
}

/// `h_i` at the point; `h_0 = 1` and `h_i = 0` for `i < 0`.
pub fn complete_homogeneous(i: i64, point: &EvaluationPoint) -> Rational {
    if i < 0 {
        return Rational::zero();
    }
    complete_homogeneous_all(i as usize, point).pop().unwrap()
}

/// Index conventions for the Jacobi–Trudi matrix of `λ/μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiTrudiConvention {
    /// Entry `(p, q)` is `h_(λ_p - μ_q - p + q)`; agrees with the tableau sum.
    Standard,
    /// Entry `(p, q)` is `h_(λ_p - μ_q + p - q)`. Kept only to document that
    /// it disagrees with the tableau sum.
    SignFlipped,
}

fn jt_index(shape: &SkewShape, p: usize, q: usize, convention: JacobiTrudiConvention) -> i64 {
    let base = shape.outer().part(p) as i64 - shape.inner().part(q) as i64;
    match convention {
        JacobiTrudiConvention::Standard => base - p as i64 + q as i64,
        JacobiTrudiConvention::SignFlipped => base + p as i64 - q as i64,
    }
}

pub fn jacobi_trudi_eval_with(
    shape: &SkewShape,
    point: &EvaluationPoint,
    convention: JacobiTrudiConvention,
) -> Rational {
    let n = shape.num_rows();
    let kmax = shape.outer().part(0) + n;
    let h = complete_homogeneous_all(kmax, point);
    let get = |k: i64| {
        if k < 0 {
            Rational::zero()
        } else {
            h[k as usize].clone()
        }
    };
    let m: Vec<Vec<Rational>> = (0..n)
        .map(|p| (0..n).map(|q| get(jt_index(shape, p, q, convention))).collect())
        .collect();
    determinant_exact(&m).expect("square by construction")
}

/// `s_(λ/μ) = det(h_(λ_p - μ_q - p + q))`.
pub fn jacobi_trudi_eval(shape: &SkewShape, point: &EvaluationPoint) -> Rational {
    jacobi_trudi_eval_with(shape, point, JacobiTrudiConvention::Standard)
}

/// The skew Schur polynomial in `X1, …, Xn` as a tableau sum.
pub fn schur_polynomial(shape: &SkewShape, n: usize) -> SparsePolynomial {
    SparsePolynomial::from_terms(enumerate_ssyt(shape, n).map(|t| {
        let exps = t
            .weight(n)
            .into_iter()
            .enumerate()
            .map(|(k, e)| (Var::X(k as u32 + 1), e as u32));
        (Monomial::from_exponents(exps), Rational::one())
    }))
}

/// `h_k(X1, …, Xn)` as a polynomial.
pub fn complete_homogeneous_polynomial(k: i64, n: usize) -> SparsePolynomial {
    if k < 0 {
        return SparsePolynomial::zero();
    }
    // h_k(X1..Xn) is the single-row Schur polynomial s_(k).
    let row = crate::tableau::Partition::new(vec![k as usize]).expect("one part");
    schur_polynomial(&SkewShape::straight(row), n)
}

/// The Jacobi–Trudi determinant computed symbolically.
pub fn jacobi_trudi_polynomial(shape: &SkewShape, n: usize) -> SparsePolynomial {
    let rows = shape.num_rows();
    let m: Vec<Vec<SparsePolynomial>> = (0..rows)
        .map(|p| {
            (0..rows)
                .map(|q| {
                    complete_homogeneous_polynomial(
                        jt_index(shape, p, q, JacobiTrudiConvention::Standard),
                        n,
                    )
                })
                .collect()
        })
        .collect();
    determinant_polynomial(&m).expect("square by construction")
}
