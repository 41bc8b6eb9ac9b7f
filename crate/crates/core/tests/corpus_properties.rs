//! Properties checked over the seeded fixture corpus: the equivalences
//! between total nonnegativity, strong total nonnegativity and Hessian
//! positivity, and the behaviour of mixed Hessians on totally nonnegative
//! forms.

use itertools::Itertools;
use rayon::prelude::*;
use tnn_core::corpus::{generate, CorpusSpec, Family, Fixture};
use tnn_core::hessian::{m_polynomial, plucker_determinant, plucker_terms, specialize_path_minor};
use tnn_core::lorentzian::{is_normally_stable, lorentzian_chain, satisfies_mixed_hrr};
use tnn_core::poly::order_at_zero;
use tnn_core::toeplitz::{is_strongly_totally_nonnegative, sperner_number};
use tnn_core::{BivariateForm, IndexSet, Rational, ToeplitzMatrix};

fn corpus() -> Vec<Fixture> {
    generate(&CorpusSpec::default()).unwrap()
}

fn tn_bands(f: &BivariateForm) -> Vec<bool> {
    (0..=f.degree() / 2)
        .map(|i| ToeplitzMatrix::build(f, i).unwrap().is_totally_nonnegative())
        .collect()
}

#[test]
fn tn_equals_strongly_tn() {
    corpus().par_iter().for_each(|fx| {
        let tn = tn_bands(&fx.form);
        for (i, &t) in tn.iter().enumerate() {
            assert_eq!(is_strongly_totally_nonnegative(&fx.form, i).unwrap(), t, "{} at {i}", fx.id);
            // Strong total nonnegativity is the prefix conjunction.
            assert_eq!(tn[..=i].iter().all(|&x| x), t, "{} at {i}", fx.id);
        }
    });
}

#[test]
fn hrr_matches_tn() {
    corpus().par_iter().for_each(|fx| {
        for (i, t) in tn_bands(&fx.form).into_iter().enumerate() {
            assert_eq!(satisfies_mixed_hrr(&fx.form, i).unwrap().holds, t, "{} at {i}", fx.id);
        }
    });
}

#[test]
fn circle_form_is_refuted_by_a_negative_value() {
    let fx = corpus().into_iter().find(|f| f.id == "adversarial-signed-000").unwrap();
    let report = lorentzian_chain(&fx.form).unwrap();
    assert_eq!(report.max_lorentzian_index, Some(0));
    // Direct evaluation: with d = 2 and r = 1 no variables remain and the
    // determinant is (2!)^2 · det [[0, 1], [1, 0]] = -4.
    assert_eq!(plucker_determinant(&fx.form, 1).unwrap().to_string(), "-4");
}

#[test]
fn normally_stable_forms_reach_the_top() {
    let mut seen = 0;
    for fx in corpus() {
        if is_normally_stable(&fx.form).unwrap() {
            seen += 1;
            let d = fx.form.degree();
            assert!(tn_bands(&fx.form).into_iter().all(|t| t), "{}", fx.id);
            assert_eq!(lorentzian_chain(&fx.form).unwrap().max_lorentzian_index, Some(d / 2));
        }
    }
    assert!(seen >= 40, "only {seen} normally stable fixtures");
}

#[test]
fn factored_positive_distinct_forms_are_normally_stable() {
    for fx in corpus().iter().filter(|f| f.family == Family::FactoredPositiveDistinct) {
        assert!(is_normally_stable(&fx.form).unwrap(), "{}", fx.id);
    }
}

#[test]
fn chain_reaches_index_one_only() {
    let stops: Vec<String> = corpus()
        .into_iter()
        .filter(|fx| lorentzian_chain(&fx.form).unwrap().max_lorentzian_index == Some(1) && fx.form.degree() >= 4)
        .map(|fx| fx.id)
        .collect();
    assert!(!stops.is_empty());
}

/// Every maximal minor of `φ^r` nonnegative forces every `(r+1)`-minor of
/// every `φ^i`, `i ≥ r`, to be nonnegative.
#[test]
fn nonnegativity_transfers_upward() {
    corpus().par_iter().filter(|fx| fx.form.first_nonzero_index().is_ok()).for_each(|fx| {
        let f = &fx.form;
        let d = f.degree();
        let a = f.first_nonzero_index().unwrap();
        for r in a..=d / 2 {
            let band = ToeplitzMatrix::build(f, r).unwrap();
            let nonneg = band
                .maximal_column_sets()
                .iter()
                .all(|k| !band.maximal_minor(k).unwrap().is_negative());
            if !nonneg {
                continue;
            }
            for i in r..=d / 2 {
                let upper = ToeplitzMatrix::build(f, i).unwrap();
                for rows in (0..=i).combinations(r + 1) {
                    for cols in (0..=d - i).combinations(r + 1) {
                        let m = upper
                            .minor(&IndexSet::new(rows.clone()).unwrap(), &IndexSet::new(cols).unwrap())
                            .unwrap();
                        assert!(!m.is_negative(), "{} r = {r} i = {i}", fx.id);
                    }
                }
            }
        }
    });
}

#[test]
fn plucker_coefficients_are_nonnegative_for_tn_bands() {
    corpus()
        .par_iter()
        .filter(|fx| fx.form.degree() <= 8)
        .for_each(|fx| {
            let f = &fx.form;
            for (r, tn) in tn_bands(f).into_iter().enumerate() {
                if !tn {
                    continue;
                }
                let p = plucker_determinant(f, r).unwrap();
                assert!(p.terms().all(|(_, c)| !c.is_negative()), "{} r = {r}", fx.id);
            }
        });
}

/// For totally nonnegative forms the specialized Hessian determinant has a
/// positive lowest coefficient: the sum over the nonzero minors of minimal
/// α of the minor times the number of path systems with that many
/// `t`-steps.
#[test]
fn m_polynomial_lowest_coefficient() {
    corpus()
        .par_iter()
        .filter(|fx| fx.form.degree() <= 8)
        .for_each(|fx| {
            let f = &fx.form;
            let d = f.degree();
            let s = sperner_number(f).unwrap();
            let tn = tn_bands(f);
            for (i, _) in tn.iter().enumerate().skip(1).filter(|(_, &t)| t) {
                for j in 0..i.min(s) {
                    let m = m_polynomial(f, j, i).unwrap();
                    let coeffs = m.univariate_coeffs().unwrap();
                    let low = order_at_zero(&m).unwrap().expect("nonzero") as usize;
                    assert!(coeffs[low].is_positive(), "{} j = {j} i = {i}", fx.id);

                    // Oracle for the lowest coefficient.
                    let terms = plucker_terms(f, j).unwrap();
                    let nonzero: Vec<_> = terms.iter().filter(|t| !t.minor.is_zero()).collect();
                    let alphas: Vec<usize> = nonzero
                        .iter()
                        .map(|t| {
                            order_at_zero(&specialize_path_minor(&t.k, j, i, d).unwrap())
                                .unwrap()
                                .unwrap() as usize
                        })
                        .collect();
                    let min_alpha = *alphas.iter().min().unwrap();
                    assert_eq!(min_alpha, low);
                    let expected: Rational = nonzero
                        .iter()
                        .zip(&alphas)
                        .filter(|(_, &a)| a == min_alpha)
                        .map(|(t, _)| {
                            let spec = specialize_path_minor(&t.k, j, i, d).unwrap();
                            &t.minor * &spec.univariate_coeffs().unwrap()[min_alpha]
                        })
                        .sum();
                    let scale = Rational::factorial(d as u32).pow(j as u32 + 1);
                    assert_eq!(coeffs[low], expected * scale, "{} j = {j} i = {i}", fx.id);

                    let t = Rational::new(1, 10);
                    let at_t: Rational = coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, c)| c * &t.pow(k as u32))
                        .sum();
                    assert!(at_t.is_positive());
                }
            }
        });
}

#[test]
fn deformation_g_preserves_membership() {
    for fx in corpus().iter().filter(|f| f.form.degree() <= 7) {
        let before = tn_bands(&fx.form);
        for t in [Rational::new(1, 2), Rational::new(1, 5)] {
            let g = fx.form.substitute_linear(&t);
            let after = tn_bands(&g);
            for (i, (&b, &a)) in before.iter().zip(&after).enumerate() {
                assert!(!b || a, "{} loses membership at {i} under t = {t}", fx.id);
            }
        }
    }
}

/// Lowering or raising `c_0` by a small `u` with the sign `(-1)^s` keeps
/// every band totally nonnegative and raises the Sperner number by one.
#[test]
fn deformation_h_preserves_tn_and_bumps_sperner() {
    let mut bumped = 0;
    for fx in corpus().iter().filter(|f| f.form.degree() <= 7) {
        let f = &fx.form;
        let d = f.degree();
        let s = sperner_number(f).unwrap();
        if !tn_bands(f).into_iter().all(|t| t) || s > d / 2 {
            continue;
        }
        let t = Rational::new(1, 3);
        let h = f.perturb(&t, &Rational::new(1, 1_000_000_000), s as u32);
        assert!(tn_bands(&h).into_iter().all(|x| x), "{}", fx.id);
        assert_eq!(sperner_number(&h).unwrap(), s + 1, "{}", fx.id);
        bumped += 1;
    }
    assert!(bumped > 10);
}
