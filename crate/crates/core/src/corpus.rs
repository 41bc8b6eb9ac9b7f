//! Seeded fixture generation for the property suites.
//!
//! Every fixture carries its family and a set of expected properties. The
//! expectations are claims about the construction, not facts: tests run
//! [`verify_hints`] on every fixture.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::form::BivariateForm;
use crate::rational::Rational;
use crate::toeplitz::{sperner_number, ToeplitzMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    FactoredPositiveDistinct,
    FactoredNonnegativeRepeated,
    MonomialMultiples,
    PerturbedH,
    RandomDense,
    AdversarialSigned,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::FactoredPositiveDistinct,
        Family::FactoredNonnegativeRepeated,
        Family::MonomialMultiples,
        Family::PerturbedH,
        Family::RandomDense,
        Family::AdversarialSigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FactoredPositiveDistinct => "factored-positive-distinct",
            Family::FactoredNonnegativeRepeated => "factored-nonnegative-repeated",
            Family::MonomialMultiples => "monomial-multiples",
            Family::PerturbedH => "perturbed-H",
            Family::RandomDense => "random-dense",
            Family::AdversarialSigned => "adversarial-signed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// What to generate. Identical specs give identical corpora.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub families: Vec<Family>,
    pub per_family: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 20_240_601,
            min_degree: 1,
            max_degree: 8,
            families: Family::ALL.to_vec(),
            per_family: 20,
        }
    }
}

/// Expected properties of a fixture.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hints {
    /// Indices `i` with `φ^i` totally positive.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tp: Vec<usize>,
    /// Indices `i` with `φ^i` totally nonnegative.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tn: Vec<usize>,
    /// Indices `i` with `φ^i` not totally nonnegative.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub not_tn: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sperner: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub family: Family,
    pub form: BivariateForm,
    pub hints: Hints,
}

fn all_indices(d: usize) -> Vec<usize> {
    (0..=d / 2).collect()
}

/// A positive rational with numerator and denominator of at most 12 bits,
/// kept small so exact determinants stay cheap.
fn positive_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

fn signed_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

fn distinct_positive_roots(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::with_capacity(n);
    while roots.len() < n {
        let r = positive_rational(rng, 24, 6);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
}

fn factored_positive_distinct(rng: &mut ChaCha8Rng, d: usize) -> (BivariateForm, Hints) {
    let roots = distinct_positive_roots(rng, d);
    let form = BivariateForm::from_normal_factors(&roots, 0, 0);
    let all = all_indices(d);
    let hints = Hints {
        tp: all.clone(),
        tn: all,
        sperner: Some(d / 2 + 1),
        ..Hints::default()
    };
    (form, hints)
}

fn factored_nonnegative_repeated(rng: &mut ChaCha8Rng, d: usize) -> (BivariateForm, Hints) {
    let extra_x = rng.gen_range(0..=d / 3);
    let extra_y = rng.gen_range(0..=(d - extra_x) / 3);
    let n = d - extra_x - extra_y;
    let pool: Vec<Rational> = (0..(n / 2).max(1))
        .map(|k| {
            if k == 0 && rng.gen_bool(0.5) {
                Rational::zero()
            } else {
                positive_rational(rng, 12, 4)
            }
        })
        .collect();
    let roots: Vec<Rational> = (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect();
    let form = BivariateForm::from_normal_factors(&roots, extra_x, extra_y);
    let hints = Hints {
        tn: all_indices(d),
        ..Hints::default()
    };
    (form, hints)
}

fn monomial_multiple(rng: &mut ChaCha8Rng, d: usize) -> (BivariateForm, Hints) {
    let a = rng.gen_range(0..=d);
    let form = BivariateForm::monomial(positive_rational(rng, 64, 16), a, d - a);
    let hints = Hints {
        tn: all_indices(d),
        sperner: Some(a.min(d - a) + 1),
        ..Hints::default()
    };
    (form, hints)
}

/// `w · (X + ρY)^d` has Sperner number 1; deforming it with `G_t` and
/// lowering `c_0` by a small `u` raises the Sperner number to 2 while
/// keeping every `φ^i` totally nonnegative.
fn perturbed_h(rng: &mut ChaCha8Rng, d: usize) -> (BivariateForm, Hints) {
    let d = d.max(2);
    let rho = if rng.gen_bool(0.25) {
        Rational::zero()
    } else {
        positive_rational(rng, 8, 4)
    };
    let base = BivariateForm::linear_power(&positive_rational(rng, 8, 4), &rho, d);
    let t = [Rational::new(1, 2), Rational::new(1, 3)].choose(rng).unwrap().clone();
    // The base has rank one, so `H` stays totally nonnegative exactly when
    // `u` does not exceed the corner coefficient of `G_t`.
    let u = &base.substitute_linear(&t).coeffs()[0] / &Rational::from(1000);
    let form = base.perturb(&t, &u, 1);
    let hints = Hints {
        tn: all_indices(d),
        sperner: Some(2),
        ..Hints::default()
    };
    (form, hints)
}

fn random_dense(rng: &mut ChaCha8Rng, d: usize) -> (BivariateForm, Hints) {
    loop {
        let coeffs = (0..=d).map(|_| signed_rational(rng, 40, 8)).collect();
        let form = BivariateForm::new(coeffs).expect("nonempty");
        if !form.is_zero() {
            return (form, Hints::default());
        }
    }
}

/// Alternates between small signed coefficient vectors and real-rooted
/// products with plain (non-normalized) factors, which are totally
/// nonnegative at `i ≤ 1` but often fail at `i = 2`.
fn adversarial(rng: &mut ChaCha8Rng, d: usize, n: usize) -> (BivariateForm, Hints) {
    if n % 2 == 1 {
        let roots = distinct_positive_roots(rng, d);
        let form = BivariateForm::from_factors(&roots, 0, 0);
        let hints = Hints {
            tn: (0..=1.min(d / 2)).collect(),
            ..Hints::default()
        };
        return (form, hints);
    }
    loop {
        let coeffs = (0..=d).map(|_| Rational::from_integer(rng.gen_range(-2..=2))).collect();
        let form = BivariateForm::new(coeffs).expect("nonempty");
        if !form.is_zero() {
            return (form, Hints::default());
        }
    }
}

/// Generates `per_family` fixtures for each listed family, in the order the
/// families are listed. Degrees are drawn from the spec's range, clamped to
/// what each construction needs.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<Fixture>> {
    contract!(
        spec.min_degree <= spec.max_degree,
        "empty degree range {}..={}",
        spec.min_degree,
        spec.max_degree
    );
    let mut out = Vec::new();
    for (fi, &family) in spec.families.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ ((fi as u64 + 1) << 32) ^ family as u64);
        let lo = spec.min_degree.max(1);
        let hi = spec.max_degree.max(lo);
        for n in 0..spec.per_family {
            let d = rng.gen_range(lo..=hi);
            let (form, hints) = match (family, n) {
                (Family::FactoredPositiveDistinct, 0) if (lo..=hi).contains(&6) => {
                    let roots: Vec<Rational> = (1..=6).map(Rational::from_integer).collect();
                    let all = all_indices(6);
                    let hints = Hints {
                        tp: all.clone(),
                        tn: all,
                        sperner: Some(4),
                        ..Hints::default()
                    };
                    (BivariateForm::from_normal_factors(&roots, 0, 0), hints)
                }
                (Family::AdversarialSigned, 0) if (lo..=hi).contains(&2) => {
                    let hints = Hints {
                        tn: vec![0],
                        not_tn: vec![1],
                        sperner: Some(2),
                        ..Hints::default()
                    };
                    (BivariateForm::from_ints(&[1, 0, 1]), hints)
                }
                (Family::AdversarialSigned, 1) if (lo..=hi).contains(&4) => {
                    let hints = Hints {
                        tn: vec![0, 1],
                        not_tn: vec![2],
                        ..Hints::default()
                    };
                    (BivariateForm::from_ints(&[1, 2, 2, 2, 1]), hints)
                }
                (Family::FactoredPositiveDistinct, _) => factored_positive_distinct(&mut rng, d),
                (Family::FactoredNonnegativeRepeated, _) => factored_nonnegative_repeated(&mut rng, d),
                (Family::MonomialMultiples, _) => monomial_multiple(&mut rng, d),
                (Family::PerturbedH, _) => perturbed_h(&mut rng, d),
                (Family::RandomDense, _) => random_dense(&mut rng, d),
                (Family::AdversarialSigned, _) => adversarial(&mut rng, d, n),
            };
            out.push(Fixture {
                id: format!("{}-{n:03}", family.name()),
                family,
                form,
                hints,
            });
        }
    }
    Ok(out)
}

/// Checks every expectation attached to a fixture.
pub fn verify_hints(fixture: &Fixture) -> Result<()> {
    let fail = |what: String| Err(Error::PropertyViolation(format!("{}: {what}", fixture.id)));
    let f = &fixture.form;
    for &i in &fixture.hints.tp {
        if !ToeplitzMatrix::build(f, i)?.is_totally_positive() {
            return fail(format!("expected φ^{i} totally positive"));
        }
    }
    for &i in &fixture.hints.tn {
        if let Some(w) = ToeplitzMatrix::build(f, i)?.negative_minor() {
            return fail(format!(
                "expected φ^{i} totally nonnegative, minor {} x {} is {}",
                w.rows, w.cols, w.value
            ));
        }
    }
    for &i in &fixture.hints.not_tn {
        if ToeplitzMatrix::build(f, i)?.is_totally_nonnegative() {
            return fail(format!("expected φ^{i} not totally nonnegative"));
        }
    }
    if let Some(s) = fixture.hints.sperner {
        let actual = sperner_number(f)?;
        if actual != s {
            return fail(format!("expected Sperner number {s}, found {actual}"));
        }
    }
    Ok(())
}

/// The corpus as pretty-printed JSON; equal corpora give equal bytes.
pub fn to_json(fixtures: &[Fixture]) -> String {
    serde_json::to_string_pretty(fixtures).expect("fixtures serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_shape() {
        let corpus = generate(&CorpusSpec::default()).unwrap();
        assert!(corpus.len() >= 100);
        assert!(corpus.iter().all(|f| f.form.degree() <= 8 && !f.form.is_zero()));
        let circle = corpus.iter().find(|f| f.id == "adversarial-signed-000").unwrap();
        assert_eq!(circle.form, BivariateForm::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn regeneration_is_byte_identical() {
        let spec = CorpusSpec {
            seed: 7,
            ..CorpusSpec::default()
        };
        assert_eq!(to_json(&generate(&spec).unwrap()), to_json(&generate(&spec).unwrap()));
        let other = CorpusSpec {
            seed: 8,
            ..CorpusSpec::default()
        };
        assert_ne!(to_json(&generate(&spec).unwrap()), to_json(&generate(&other).unwrap()));
    }

    #[test]
    fn json_round_trip() {
        let corpus = generate(&CorpusSpec {
            per_family: 3,
            ..CorpusSpec::default()
        })
        .unwrap();
        let back: Vec<Fixture> = serde_json::from_str(&to_json(&corpus)).unwrap();
        assert_eq!(back, corpus);
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.name().to_lowercase()));
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn hints_hold_on_the_default_corpus() {
        for fixture in generate(&CorpusSpec::default()).unwrap() {
            verify_hints(&fixture).unwrap();
        }
    }

    #[test]
    fn empty_degree_range_is_rejected() {
        let spec = CorpusSpec {
            min_degree: 5,
            max_degree: 4,
            ..CorpusSpec::default()
        };
        assert!(generate(&spec).is_err());
    }
}
