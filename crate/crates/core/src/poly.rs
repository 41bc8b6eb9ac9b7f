//! Sparse multivariate polynomials over [`Rational`].
//!
//! Variables come from the fixed universe `X_1 < … < X_N < Y_1 < … < Y_N < t`.
//! A polynomial is a map from monomials to nonzero coefficients, so two
//! polynomials are equal exactly when their term maps are equal. Terms are
//! ordered graded-lexicographically for serialization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An indeterminate. `X(z)` and `Y(z)` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    Y(u32),
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(z) => write!(f, "X{z}"),
            Var::Y(z) => write!(f, "Y{z}"),
            Var::T => f.write_str("t"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown variable {s:?}"));
        if s == "t" {
            return Ok(Var::T);
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let z: u32 = tail.parse().map_err(|_| bad())?;
        if z == 0 {
            return Err(bad());
        }
        match head {
            "X" => Ok(Var::X(z)),
            "Y" => Ok(Var::Y(z)),
            _ => Err(bad()),
        }
    }
}

/// A monomial with only nonzero exponents stored, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in exps {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    out.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// Lexicographic comparison with `X_1` most significant: the monomial
    /// with the larger exponent at the first differing variable is greater.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut a, mut b) = (self.0.iter(), other.0.iter());
        let (mut x, mut y) = (a.next(), b.next());
        loop {
            match (x, y) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // The earlier variable is present only on one side.
                        return if va < vb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    x = a.next();
                    y = b.next();
                }
            }
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, &(v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePolynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = SparsePolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Degree of the highest-degree term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of_degree(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Replaces each variable in `assignment` by the given polynomial.
    /// Variables not mentioned are left alone.
    pub fn substitute(&self, assignment: &BTreeMap<Var, SparsePolynomial>) -> Self {
        let mut out = SparsePolynomial::zero();
        let mut power_cache: BTreeMap<(Var, u32), SparsePolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = SparsePolynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                match assignment.get(&v) {
                    Some(p) => {
                        let pw = power_cache
                            .entry((v, e))
                            .or_insert_with(|| p.pow(e))
                            .clone();
                        factor = &factor * &pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let kept = SparsePolynomial::term(Rational::one(), Monomial(kept));
            out = &out + &(&factor * &kept);
        }
        out
    }

    /// Evaluates with every variable present assigned a value.
    pub fn evaluate(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.exponents() {
                let x = point
                    .get(&var)
                    .ok_or_else(|| Error::Contract(format!("no value for variable {var}")))?;
                v *= &x.pow(e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Coefficients of a polynomial in `t` alone, lowest degree first.
    pub fn univariate_coeffs(&self) -> Result<Vec<Rational>> {
        let mut out: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let e = match m.exponents() {
                [] => 0,
                [(Var::T, e)] => *e as usize,
                _ => {
                    return Err(Error::Contract(format!(
                        "expected a polynomial in t only, found monomial {m}"
                    )))
                }
            };
            if out.len() <= e {
                out.resize(e + 1, Rational::zero());
            }
            out[e] = c.clone();
        }
        Ok(out)
    }
}

/// Order of vanishing at `t = 0` of a polynomial in `t` alone.
///
/// `Ok(None)` stands for infinity (the zero polynomial).
pub fn order_at_zero(p: &SparsePolynomial) -> Result<Option<u32>> {
    let coeffs = p.univariate_coeffs()?;
    Ok(coeffs.iter().position(|c| !c.is_zero()).map(|k| k as u32))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self * &rhs
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl From<Rational> for SparsePolynomial {
    fn from(c: Rational) -> Self {
        SparsePolynomial::constant(c)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: Rational,
    exps: BTreeMap<String, u32>,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Variable keys are emitted in the fixed variable order, not string order.
        use serde::ser::{SerializeMap, SerializeSeq};
        struct Exps<'a>(&'a Monomial);
        impl Serialize for Exps<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.exponents().len()))?;
                for (v, e) in self.0.exponents() {
                    map.serialize_entry(&v.to_string(), e)?;
                }
                map.end()
            }
        }
        struct Term<'a>(&'a Monomial, &'a Rational);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("coeff", self.1)?;
                map.serialize_entry("exps", &Exps(self.0))?;
                map.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&Term(m, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut p = SparsePolynomial::zero();
        for t in reprs {
            let exps = t
                .exps
                .iter()
                .map(|(k, &e)| k.parse::<Var>().map(|v| (v, e)))
                .collect::<Result<Vec<_>>>()
                .map_err(D::Error::custom)?;
            p.add_term(Monomial::from_exponents(exps), &t.coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn x(z: u32) -> SparsePolynomial {
        SparsePolynomial::var(Var::X(z))
    }

    fn y(z: u32) -> SparsePolynomial {
        SparsePolynomial::var(Var::Y(z))
    }

    fn t() -> SparsePolynomial {
        SparsePolynomial::var(Var::T)
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &(&x(1) + &y(1)) - &x(1);
        assert_eq!(p, y(1));
        assert_eq!(p.len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x(1) + &y(1)) * &(&x(1) - &y(1));
        let rhs = &(&x(1) * &x(1)) - &(&y(1) * &y(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::var(Var::X(1));
        let x2 = Monomial::var(Var::X(2));
        let y1 = Monomial::var(Var::Y(1));
        let t = Monomial::var(Var::T);
        assert!(x1 > x2);
        assert!(x2 > y1);
        assert!(y1 > t);
        assert!(x1.mul(&x1) > x1);
        assert!(t.mul(&t) > x1);
        assert!(x1.mul(&y1) > x2.mul(&x2));
    }

    #[test]
    fn order_at_zero_cases() {
        let p = &t().pow(3) + &t().pow(5).scale(&q(2, 1));
        assert_eq!(order_at_zero(&p).unwrap(), Some(3));
        assert_eq!(
            order_at_zero(&SparsePolynomial::constant(q(7, 1))).unwrap(),
            Some(0)
        );
        assert_eq!(order_at_zero(&SparsePolynomial::zero()).unwrap(), None);
        assert!(order_at_zero(&(&t() + &x(1))).is_err());
    }

    #[test]
    fn substitute_and_evaluate() {
        let p = &(&x(1) * &y(1)) + &y(2).pow(2);
        let mut a = BTreeMap::new();
        a.insert(Var::Y(1), t());
        a.insert(Var::X(1), SparsePolynomial::one());
        a.insert(Var::Y(2), SparsePolynomial::one());
        assert_eq!(p.substitute(&a), &t() + &SparsePolynomial::one());

        let mut pt = BTreeMap::new();
        pt.insert(Var::X(1), q(2, 1));
        pt.insert(Var::Y(1), q(1, 3));
        pt.insert(Var::Y(2), q(-1, 1));
        assert_eq!(p.evaluate(&pt).unwrap(), q(5, 3));
    }

    #[test]
    fn json_schema_round_trip() {
        let p = &(&x(1).pow(2) * &y(1)).scale(&q(1, 2)) - &t();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":"1/2","exps":{"X1":2,"Y1":1}},{"coeff":"-1","exps":{"t":1}}]"#
        );
        let back: SparsePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_is_readable() {
        let p = &(&x(1).pow(2) * &y(2)) - &SparsePolynomial::constant(q(3, 2));
        assert_eq!(p.to_string(), "X1^2*Y2 - 3/2");
    }
}
