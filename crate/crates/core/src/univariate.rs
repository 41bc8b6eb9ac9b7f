//! Dense univariate polynomials over [`Rational`], with exact Sturm root counting.

use crate::rational::Rational;

/// Coefficients stored lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x + a`
    pub fn linear(a: Rational) -> Self {
        UniPoly::new(vec![a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.0.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if nd < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.0.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sign of the polynomial as `x → +∞` (or `-∞` when `at_neg_infinity`).
    fn sign_at_infinity(&self, at_neg_infinity: bool) -> i32 {
        match (self.degree(), self.leading()) {
            (Some(d), Some(l)) => {
                let s = l.signum();
                if at_neg_infinity && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => 0,
        }
    }

    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            seq.push(r.scale(&-Rational::one()));
        }
        seq.pop();
        seq
    }

    /// Number of distinct real roots in `(lo, hi]`, with `None` meaning an
    /// infinite endpoint.
    pub fn count_real_roots(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let variations = |signs: Vec<i32>| {
            let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at = |x: Option<&Rational>, neg: bool| -> Vec<i32> {
            seq.iter()
                .map(|p| match x {
                    Some(x) => p.eval(x).signum(),
                    None => p.sign_at_infinity(neg),
                })
                .collect()
        };
        let v_lo = variations(at(lo, true));
        let v_hi = variations(at(hi, false));
        v_lo.saturating_sub(v_hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn from_roots(roots: &[Rational]) -> UniPoly {
        roots.iter().fold(UniPoly::constant(Rational::one()), |acc, r| {
            acc.mul(&UniPoly::linear(-r))
        })
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::new(vec![q(1, 1), q(-3, 2), q(0, 1), q(2, 1), q(5, 7)]);
        let b = UniPoly::new(vec![q(1, 3), q(1, 1), q(-1, 1)]);
        let (quo, rem) = a.div_rem(&b);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(quo.mul(&b).add(&rem), a);
    }

    #[test]
    fn square_free_part_drops_multiplicity() {
        let p = from_roots(&[q(1, 1), q(1, 1), q(-2, 1), q(-2, 1), q(-2, 1)]);
        assert_eq!(p.square_free().monic(), from_roots(&[q(1, 1), q(-2, 1)]));
    }

    #[test]
    fn sturm_counts_match_known_roots() {
        let p = from_roots(&[q(-3, 1), q(-1, 2), q(0, 1), q(2, 1), q(5, 3)]);
        assert_eq!(p.count_real_roots(None, None), 5);
        assert_eq!(p.count_real_roots(None, Some(&q(0, 1))), 3);
        assert_eq!(p.count_real_roots(None, Some(&q(-1, 1))), 1);
        assert_eq!(p.count_real_roots(Some(&q(0, 1)), None), 2);
        // t^2 + 1 has no real roots.
        let p = UniPoly::new(vec![q(1, 1), q(0, 1), q(1, 1)]);
        assert_eq!(p.count_real_roots(None, None), 0);
    }
}
