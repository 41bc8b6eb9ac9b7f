//! Homogeneous bivariate forms in normalized-coefficient representation.
//!
//! A degree-`d` form is stored as `(c_0, …, c_d)` with
//! `F = Σ_k binom(d, k) · c_k · X^k · Y^(d-k)`. The plain monomial
//! coefficients `binom(d, k) · c_k` are computed on demand.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::poly::{Monomial, SparsePolynomial, Var};
use crate::rational::Rational;
use crate::univariate::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BivariateForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BivariateForm {
    /// Builds a form from its normalized coefficients `(c_0, …, c_d)`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        contract!(!coeffs.is_empty(), "a form needs at least one coefficient");
        Ok(BivariateForm {
            degree: coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
            .expect("nonempty coefficient list")
    }

    pub fn zero(degree: usize) -> Self {
        BivariateForm {
            degree,
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    /// Builds a form from plain monomial coefficients `m_k` of `X^k Y^(d-k)`.
    pub fn from_monomial_coeffs(m: Vec<Rational>) -> Result<Self> {
        contract!(!m.is_empty(), "a form needs at least one coefficient");
        let d = (m.len() - 1) as u32;
        let coeffs = m
            .into_iter()
            .enumerate()
            .map(|(k, mk)| mk / Rational::binomial(d, k as u32))
            .collect();
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `c_k`, or zero when `k` is outside `0..=d`.
    pub fn coeff(&self, k: i64) -> Rational {
        if k < 0 || k as usize > self.degree {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn monomial_coeffs(&self) -> Vec<Rational> {
        let d = self.degree as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::binomial(d, k as u32))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Smallest `a` with `c_a ≠ 0`.
    pub fn first_nonzero_index(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Contract("the zero form has no nonzero coefficient".into()))
    }

    /// `x ∘ F = ∂F/∂X`; normalized coefficients `d · c_(k+1)`.
    pub fn apply_x(&self) -> Result<Self> {
        self.apply_operator(1, 0)
    }

    /// `y ∘ F = ∂F/∂Y`; normalized coefficients `d · c_k`.
    pub fn apply_y(&self) -> Result<Self> {
        self.apply_operator(0, 1)
    }

    /// `(x^p y^q) ∘ F`, a form of degree `d - p - q` with normalized
    /// coefficients `d!/(d-p-q)! · c_(k+p)`.
    pub fn apply_operator(&self, p: usize, q: usize) -> Result<Self> {
        contract!(
            p + q <= self.degree,
            "operator of order {} exceeds degree {}",
            p + q,
            self.degree
        );
        let d = self.degree;
        let falling: Rational = ((d - p - q + 1)..=d)
            .map(|k| Rational::from(k as i64))
            .product();
        let coeffs = (0..=d - p - q)
            .map(|k| &self.coeffs[k + p] * &falling)
            .collect();
        Self::new(coeffs)
    }

    /// `F(aX + bY, cX + eY)`.
    pub fn apply_linear_map(&self, a: &Rational, b: &Rational, c: &Rational, e: &Rational) -> Self {
        // Dehomogenize at Y = 1; the result is still homogeneous of degree d.
        let first = UniPoly::new(vec![b.clone(), a.clone()]);
        let second = UniPoly::new(vec![e.clone(), c.clone()]);
        let d = self.degree as u32;
        let mut total = UniPoly::zero();
        for (k, mk) in self.monomial_coeffs().iter().enumerate() {
            if mk.is_zero() {
                continue;
            }
            let k = k as u32;
            let term = first.pow(k).mul(&second.pow(d - k)).scale(mk);
            total = total.add(&term);
        }
        let m = (0..=self.degree).map(|k| total.coeff(k)).collect();
        Self::from_monomial_coeffs(m).expect("degree preserved")
    }

    /// `G_t(X, Y) = F(X + tY, tX + Y)`.
    pub fn substitute_linear(&self, t: &Rational) -> Self {
        let one = Rational::one();
        self.apply_linear_map(&one, t, t, &one)
    }

    /// `H_(t,u) = G_t + (-1)^s · u · Y^d`. Only `c_0` differs from `G_t`.
    pub fn perturb(&self, t: &Rational, u: &Rational, s: u32) -> Self {
        let mut h = self.substitute_linear(t);
        if s.is_multiple_of(2) {
            h.coeffs[0] += u;
        } else {
            h.coeffs[0] -= u;
        }
        h
    }

    /// `X^extra_x · Y^extra_y · Π_k (X + roots_k · Y)`.
    pub fn from_factors(roots: &[Rational], extra_x: usize, extra_y: usize) -> Self {
        let d = roots.len() + extra_x + extra_y;
        let mut p = UniPoly::constant(Rational::one());
        for r in roots {
            p = p.mul(&UniPoly::linear(r.clone()));
        }
        let m = (0..=d)
            .map(|k| {
                if k < extra_x {
                    Rational::zero()
                } else {
                    p.coeff(k - extra_x)
                }
            })
            .collect();
        Self::from_monomial_coeffs(m).expect("nonempty")
    }

    /// The form whose *normalized* coefficients are those of
    /// `s^extra_x · Π_k (s + roots_k)`, padded to degree
    /// `roots.len() + extra_x + extra_y`.
    ///
    /// With nonnegative roots, `Σ_k c_k t^(d-k)` then has only real
    /// non-positive roots, i.e. the form is normally stable.
    pub fn from_normal_factors(roots: &[Rational], extra_x: usize, extra_y: usize) -> Self {
        let d = roots.len() + extra_x + extra_y;
        let mut p = UniPoly::constant(Rational::one());
        for r in roots {
            p = p.mul(&UniPoly::linear(r.clone()));
        }
        let coeffs = (0..=d)
            .map(|k| {
                if k < extra_x {
                    Rational::zero()
                } else {
                    p.coeff(k - extra_x)
                }
            })
            .collect();
        Self::new(coeffs).expect("nonempty")
    }

    /// `weight · X^a · Y^b`.
    pub fn monomial(weight: Rational, a: usize, b: usize) -> Self {
        let mut f = Self::zero(a + b);
        f.coeffs[a] = weight / Rational::binomial((a + b) as u32, a as u32);
        f
    }

    /// `weight · (X + rho·Y)^d`, whose normalized coefficients are
    /// `weight · rho^(d-k)`.
    pub fn linear_power(weight: &Rational, rho: &Rational, d: usize) -> Self {
        let coeffs = (0..=d).map(|k| weight * rho.pow((d - k) as u32)).collect();
        Self::new(coeffs).expect("nonempty")
    }

    /// The form as a polynomial in the given two variables.
    pub fn to_polynomial(&self, x: Var, y: Var) -> SparsePolynomial {
        let d = self.degree as u32;
        SparsePolynomial::from_terms(self.monomial_coeffs().into_iter().enumerate().map(
            |(k, m)| {
                let k = k as u32;
                (Monomial::from_exponents([(x, k), (y, d - k)]), m)
            },
        ))
    }
}

#[derive(Deserialize)]
struct FormRepr {
    degree: usize,
    coeffs: Vec<Rational>,
}

/// Normalized coefficients, e.g. `(1, 0, 1)`.
impl std::fmt::Display for BivariateForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<'de> Deserialize<'de> for BivariateForm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FormRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.degree + 1 {
            return Err(serde::de::Error::custom(format!(
                "degree {} needs {} coefficients, got {}",
                repr.degree,
                repr.degree + 1,
                repr.coeffs.len()
            )));
        }
        BivariateForm::new(repr.coeffs).map_err(serde::de::Error::custom)
    }
}

/// Input accepted wherever a form is read: explicit coefficients or a
/// factored description.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum FormSpec {
    Coefficients {
        degree: usize,
        coeffs: Vec<Rational>,
    },
    Factored {
        roots: Vec<Rational>,
        #[serde(default)]
        extra_x: usize,
        #[serde(default)]
        extra_y: usize,
    },
}

impl FormSpec {
    pub fn into_form(self) -> Result<BivariateForm> {
        match self {
            FormSpec::Coefficients { degree, coeffs } => {
                contract!(
                    coeffs.len() == degree + 1,
                    "degree {degree} needs {} coefficients, got {}",
                    degree + 1,
                    coeffs.len()
                );
                BivariateForm::new(coeffs)
            }
            FormSpec::Factored {
                roots,
                extra_x,
                extra_y,
            } => Ok(BivariateForm::from_factors(&roots, extra_x, extra_y)),
        }
    }
}
