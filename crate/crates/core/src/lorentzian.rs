//! Classification of binary forms as `i`-Lorentzian.
//!
//! Membership is decided by total nonnegativity of `φ^i_d(F)`. Two further
//! criteria are computed independently and compared with it: strong total
//! nonnegativity (every `φ^j_d(F)`, `j ≤ i`, is TN) and the mixed
//! Hodge–Riemann relations on the open cone `U = {ax + by : a, b > 0}`,
//! decided through positivity of the mixed Hessian determinants on the open
//! positive orthant.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::form::BivariateForm;
use crate::hessian::{plucker_determinant, specialize};
use crate::poly::{SparsePolynomial, Var};
use crate::rational::Rational;
use crate::toeplitz::{is_strongly_totally_nonnegative, sperner_number, MinorWitness, ToeplitzMatrix};
use crate::univariate::UniPoly;

/// Why the mixed Hessian determinant of index `j` is, or is not, positive on
/// the open positive orthant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HrrEvidence {
    /// Every maximal minor of `φ^j` is nonnegative and some are positive;
    /// each path monomial is positive on the orthant, so the determinant is.
    MinorCertificate { j: usize, positive_minors: usize },
    /// The expanded determinant has nonnegative coefficients and is nonzero.
    CoefficientCertificate { j: usize, terms: usize },
    /// The determinant vanishes identically.
    Vanishes { j: usize },
    /// A positive rational point where the determinant is not positive.
    NonPositivePoint {
        j: usize,
        point: BTreeMap<String, Rational>,
        value: Rational,
    },
}

impl HrrEvidence {
    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            HrrEvidence::MinorCertificate { .. } | HrrEvidence::CoefficientCertificate { .. }
        )
    }
}

/// Outcome of the mixed HRR_i decision. `evidence` holds one entry per
/// checked `j` while positivity holds, ending with the refutation if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HrrVerdict {
    pub i: usize,
    pub holds: bool,
    pub evidence: Vec<HrrEvidence>,
}

/// Decides strict positivity of the `j`-th mixed Hessian determinant on the
/// open positive orthant.
pub fn hessian_positivity(form: &BivariateForm, j: usize, i: usize) -> Result<HrrEvidence> {
    let band = ToeplitzMatrix::build(form, j)?;
    let minors: Vec<Rational> = band
        .maximal_column_sets()
        .iter()
        .map(|k| band.maximal_minor(k))
        .collect::<Result<_>>()?;
    let positive = minors.iter().filter(|m| m.is_positive()).count();
    if positive > 0 && minors.iter().all(|m| !m.is_negative()) {
        return Ok(HrrEvidence::MinorCertificate {
            j,
            positive_minors: positive,
        });
    }
    let det = plucker_determinant(form, j)?;
    if det.is_zero() {
        return Ok(HrrEvidence::Vanishes { j });
    }
    if det.terms().all(|(_, c)| c.is_positive()) {
        return Ok(HrrEvidence::CoefficientCertificate { j, terms: det.len() });
    }
    refute(&det, j, i).ok_or_else(|| {
        Error::PropertyViolation(format!(
            "inconclusive: no positivity certificate and no refuting point for the \
             index-{j} mixed Hessian determinant of {form}"
        ))
    })
}

fn non_positive_at(det: &SparsePolynomial, j: usize, point: BTreeMap<Var, Rational>) -> Option<HrrEvidence> {
    let value = det.evaluate(&point).ok()?;
    (!value.is_positive()).then(|| HrrEvidence::NonPositivePoint {
        j,
        point: point.into_iter().map(|(v, x)| (v.to_string(), x)).collect(),
        value,
    })
}

/// A rational `y > 0` with `p(y) ≤ 0`, if one exists between or around
/// the positive real roots of `p`.
fn non_positive_on_positive_axis(p: &UniPoly) -> Option<Rational> {
    let zero = Rational::zero();
    let samples = |lo: &Rational, hi: &Rational| (lo + hi) * Rational::new(1, 2);
    if p.degree().unwrap_or(0) == 0 {
        return (!p.eval(&Rational::one()).is_positive()).then(Rational::one);
    }
    // Every positive root lies below the Cauchy bound.
    let lead = p.leading()?.abs();
    let bound = Rational::one()
        + p.coeffs()
            .iter()
            .map(|c| c.abs() / lead.clone())
            .max()
            .unwrap_or_else(Rational::zero);
    // Isolate the distinct positive roots in disjoint intervals (lo, hi].
    let mut pending = vec![(zero.clone(), bound.clone())];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match p.count_real_roots(Some(&lo), Some(&hi)) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = samples(&lo, &hi);
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
        if isolated.len() + pending.len() > 512 {
            break;
        }
    }
    isolated.sort_by(|a, b| a.0.cmp(&b.0));
    let mut candidates = Vec::new();
    let mut left = zero;
    for (lo, hi) in &isolated {
        candidates.push(samples(&left, lo));
        candidates.push(hi.clone());
        left = hi.clone();
    }
    candidates.push(&bound + &Rational::one());
    candidates
        .into_iter()
        .filter(Rational::is_positive)
        .find(|y| !p.eval(y).is_positive())
}

/// Integer weights making `target` the unique heaviest monomial of `det`,
/// found by the perceptron rule on the differences `target − m`; `None`
/// when the search budget runs out (for instance when `target` is not a
/// vertex of the Newton polytope).
fn separating_weights(det: &SparsePolynomial, vars: &[Var], target: &crate::poly::Monomial) -> Option<Vec<i64>> {
    let exps = |m: &crate::poly::Monomial| -> Vec<i64> { vars.iter().map(|v| m.exponent(*v) as i64).collect() };
    let t = exps(target);
    let diffs: Vec<Vec<i64>> = det
        .terms()
        .filter(|(m, _)| *m != target)
        .map(|(m, _)| t.iter().zip(exps(m)).map(|(a, b)| a - b).collect())
        .collect();
    let mut w = vec![0i64; vars.len()];
    for _ in 0..4096 {
        let violated = diffs
            .iter()
            .find(|v| v.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() <= 0);
        match violated {
            None => return Some(w),
            Some(v) => w.iter_mut().zip(v).for_each(|(a, b)| *a += b),
        }
    }
    None
}

/// Searches for a positive rational point where `det ≤ 0`.
///
/// Strategies, in order: the diagonal slice `X_z = 1`, `Y_z = y` decided
/// exactly through its positive real roots; each negative coefficient whose
/// monomial is a vertex of the Newton polytope, approached along
/// `v ↦ 2^(m·w_v)` for separating weights `w`; the one-parameter
/// specialization `Y_1 = … = Y_(i-j) = t` near `t = 0`; random points.
fn refute(det: &SparsePolynomial, j: usize, i: usize) -> Option<HrrEvidence> {
    let vars: Vec<Var> = det.variables().into_iter().collect();
    let two = Rational::from_integer(2);

    let y = SparsePolynomial::var(Var::T);
    let diagonal: BTreeMap<Var, SparsePolynomial> = vars
        .iter()
        .map(|&v| match v {
            Var::Y(_) => (v, y.clone()),
            _ => (v, SparsePolynomial::one()),
        })
        .collect();
    if let Ok(coeffs) = det.substitute(&diagonal).univariate_coeffs() {
        if let Some(y) = non_positive_on_positive_axis(&UniPoly::new(coeffs)) {
            let point = vars
                .iter()
                .map(|&v| match v {
                    Var::Y(_) => (v, y.clone()),
                    _ => (v, Rational::one()),
                })
                .collect();
            if let Some(found) = non_positive_at(det, j, point) {
                return Some(found);
            }
        }
    }

    let negative: Vec<&crate::poly::Monomial> = det
        .terms()
        .filter(|(_, c)| c.is_negative())
        .map(|(m, _)| m)
        .take(64)
        .collect();
    for target in negative {
        let Some(w) = separating_weights(det, &vars, target) else {
            continue;
        };
        for m in 1..=256 {
            let point = vars
                .iter()
                .zip(&w)
                .map(|(v, w)| {
                    let e = w * m;
                    let x = two.pow(e.unsigned_abs() as u32);
                    (*v, if e < 0 { x.recip() } else { x })
                })
                .collect();
            if let Some(found) = non_positive_at(det, j, point) {
                return Some(found);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x4852_5200 + j as u64);
    let special = specialize(det, i, j);
    for m in 1..=32 {
        let t = two.pow(m).recip();
        let at_t = special.evaluate(&BTreeMap::from([(Var::T, t.clone())]));
        if at_t.is_ok_and(|x| !x.is_positive()) {
            let point: BTreeMap<Var, Rational> = vars
                .iter()
                .map(|&v| match v {
                    Var::Y(z) if (z as usize) <= i.saturating_sub(j) => (v, t.clone()),
                    _ => (v, Rational::one()),
                })
                .collect();
            if let Some(found) = non_positive_at(det, j, point) {
                return Some(found);
            }
        }
    }

    for _ in 0..512 {
        let point = vars
            .iter()
            .map(|&v| (v, Rational::new(rng.gen_range(1..=64), rng.gen_range(1..=64))))
            .collect();
        if let Some(found) = non_positive_at(det, j, point) {
            return Some(found);
        }
    }
    None
}

/// Mixed HRR_i on the open cone: the index-`j` mixed Hessian determinant is
/// positive on the open orthant for every `j ≤ min(i, s(F) − 1)`.
pub fn satisfies_mixed_hrr(form: &BivariateForm, i: usize) -> Result<HrrVerdict> {
    let d = form.degree();
    contract!(i <= d / 2, "index {i} outside 0..={}", d / 2);
    let s = sperner_number(form)?;
    let mut evidence = Vec::new();
    for j in 0..=i.min(s - 1) {
        let e = hessian_positivity(form, j, i)?;
        let ok = e.is_positive();
        evidence.push(e);
        if !ok {
            return Ok(HrrVerdict {
                i,
                holds: false,
                evidence,
            });
        }
    }
    Ok(HrrVerdict {
        i,
        holds: true,
        evidence,
    })
}

/// The verdict at one index, with the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LorentzianVerdict {
    pub i: usize,
    pub lorentzian: bool,
    /// A negative minor of `φ^i` when it is not totally nonnegative.
    pub negative_minor: Option<MinorWitness>,
    /// Present only when the independent criteria were cross-checked.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strongly_totally_nonnegative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mixed_hrr: Option<HrrVerdict>,
}

/// Decides `i`-Lorentzian membership by total nonnegativity of `φ^i_d(F)`;
/// with `cross_check` also decides strong total nonnegativity and mixed
/// HRR_i and fails with a property violation unless all three agree.
pub fn classify_index(form: &BivariateForm, i: usize, cross_check: bool) -> Result<LorentzianVerdict> {
    contract!(!form.is_zero(), "cannot classify the zero form");
    let band = ToeplitzMatrix::build(form, i)?;
    let negative_minor = band.negative_minor();
    let lorentzian = negative_minor.is_none();
    let mut verdict = LorentzianVerdict {
        i,
        lorentzian,
        negative_minor,
        strongly_totally_nonnegative: None,
        mixed_hrr: None,
    };
    if cross_check {
        let stn = is_strongly_totally_nonnegative(form, i)?;
        let hrr = satisfies_mixed_hrr(form, i)?;
        if stn != lorentzian || hrr.holds != lorentzian {
            return Err(Error::PropertyViolation(format!(
                "criteria disagree for {form} at i = {i}: TN = {lorentzian}, \
                 strongly TN = {stn}, mixed HRR = {}",
                hrr.holds
            )));
        }
        verdict.strongly_totally_nonnegative = Some(stn);
        verdict.mixed_hrr = Some(hrr);
    }
    Ok(verdict)
}

/// [`classify_index`] with the cross-check enabled.
pub fn is_i_lorentzian(form: &BivariateForm, i: usize) -> Result<LorentzianVerdict> {
    classify_index(form, i, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub degree: usize,
    pub sperner: usize,
    pub verdicts: Vec<LorentzianVerdict>,
    pub max_lorentzian_index: Option<usize>,
    pub normally_stable: bool,
}

/// Verdicts at every `0 ≤ i ≤ ⌊d/2⌋`, checking that they descend, that
/// membership at `s − 1` forces membership at `⌊d/2⌋`, and that normally
/// stable forms are members at every index.
pub fn lorentzian_chain_with(form: &BivariateForm, cross_check: bool) -> Result<ClassificationReport> {
    contract!(!form.is_zero(), "cannot classify the zero form");
    let d = form.degree();
    let sperner = sperner_number(form)?;
    let verdicts: Vec<LorentzianVerdict> = (0..=d / 2)
        .map(|i| classify_index(form, i, cross_check))
        .collect::<Result<_>>()?;
    let member: Vec<bool> = verdicts.iter().map(|v| v.lorentzian).collect();
    if let Some(i) = member.windows(2).position(|w| w[1] && !w[0]) {
        return Err(Error::PropertyViolation(format!(
            "{form} is {}-Lorentzian but not {i}-Lorentzian",
            i + 1
        )));
    }
    if sperner > 0 && sperner - 1 <= d / 2 && member[sperner - 1] && !member[d / 2] {
        return Err(Error::PropertyViolation(format!(
            "{form} is {}-Lorentzian but not {}-Lorentzian",
            sperner - 1,
            d / 2
        )));
    }
    let normally_stable = is_normally_stable(form)?;
    if normally_stable && !member[d / 2] {
        return Err(Error::PropertyViolation(format!(
            "{form} is normally stable but not {}-Lorentzian",
            d / 2
        )));
    }
    Ok(ClassificationReport {
        degree: d,
        sperner,
        max_lorentzian_index: member.iter().rposition(|&m| m),
        verdicts,
        normally_stable,
    })
}

/// [`lorentzian_chain_with`] with the cross-check enabled.
pub fn lorentzian_chain(form: &BivariateForm) -> Result<ClassificationReport> {
    lorentzian_chain_with(form, true)
}

/// `Σ_k c_k t^(d-k)` has positive leading coefficient and only real
/// non-positive roots.
///
/// A real-rooted polynomial with non-positive roots has coefficients of one
/// sign; the sign requirement excludes `-F` for stable `F`, which is never
/// Lorentzian.
pub fn is_normally_stable(form: &BivariateForm) -> Result<bool> {
    contract!(!form.is_zero(), "the zero form has no roots to test");
    let coeffs: Vec<Rational> = form.coeffs().iter().rev().cloned().collect();
    let p = UniPoly::new(coeffs);
    let lowest = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let stripped = UniPoly::new(p.coeffs()[lowest..].to_vec());
    if !stripped.leading().is_some_and(Rational::is_positive) {
        return Ok(false);
    }
    let sqfree = stripped.square_free();
    let degree = sqfree.degree().unwrap_or(0);
    Ok(sqfree.count_real_roots(None, Some(&Rational::zero())) == degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn ints(c: &[i64]) -> BivariateForm {
        BivariateForm::from_ints(c)
    }

    #[test]
    fn circle_form_is_only_zero_lorentzian() {
        let f = ints(&[1, 0, 1]);
        let v1 = is_i_lorentzian(&f, 1).unwrap();
        assert!(!v1.lorentzian);
        let w = v1.negative_minor.unwrap();
        assert_eq!(w.value, q(-1, 1));
        assert_eq!(w.rows.as_slice(), &[0, 1]);
        assert_eq!(w.cols.as_slice(), &[0, 1]);
        let hrr = v1.mixed_hrr.unwrap();
        assert!(!hrr.holds);
        match hrr.evidence.last().unwrap() {
            HrrEvidence::NonPositivePoint { j, value, .. } => {
                assert_eq!(*j, 1);
                assert_eq!(*value, q(-4, 1));
            }
            other => panic!("unexpected evidence {other:?}"),
        }
        let report = lorentzian_chain(&f).unwrap();
        assert_eq!(report.max_lorentzian_index, Some(0));
        assert_eq!(report.sperner, 2);
        assert!(!report.normally_stable);
    }

    #[test]
    fn index_zero_is_coefficient_nonnegativity() {
        assert!(is_i_lorentzian(&ints(&[1, 0, 2, 3]), 0).unwrap().lorentzian);
        assert!(!is_i_lorentzian(&ints(&[1, -1, 2, 3]), 0).unwrap().lorentzian);
        let report = lorentzian_chain(&ints(&[1, -1, 2, 3])).unwrap();
        assert_eq!(report.max_lorentzian_index, None);
    }

    #[test]
    fn monomials_are_lorentzian_everywhere() {
        for d in 1..=7 {
            for a in 0..=d {
                let f = BivariateForm::monomial(q(3, 2), a, d - a);
                let report = lorentzian_chain(&f).unwrap();
                assert_eq!(report.max_lorentzian_index, Some(d / 2));
                assert_eq!(report.sperner, a.min(d - a) + 1);
            }
        }
    }

    #[test]
    fn factored_nonnegative_roots() {
        let f = BivariateForm::from_normal_factors(&[q(0, 1), q(0, 1), q(1, 1), q(2, 1)], 0, 0);
        assert!(is_normally_stable(&f).unwrap());
        let report = lorentzian_chain(&f).unwrap();
        assert_eq!(report.max_lorentzian_index, Some(2));
        let g = BivariateForm::from_normal_factors(&[q(1, 1), q(2, 1), q(3, 1), q(4, 1), q(5, 1), q(6, 1)], 0, 0);
        assert_eq!(lorentzian_chain(&g).unwrap().max_lorentzian_index, Some(3));
    }

    #[test]
    fn normal_stability_examples() {
        assert!(!is_normally_stable(&ints(&[1, 0, 1])).unwrap());
        assert!(is_normally_stable(&ints(&[0, 0, 1])).unwrap());
        assert!(is_normally_stable(&ints(&[1, 2, 1])).unwrap());
        assert!(!is_normally_stable(&ints(&[-1, -2, -1])).unwrap());
        // t^2 + 3t + 1 has two negative roots; t^2 - 3t + 1 two positive.
        assert!(is_normally_stable(&ints(&[1, 3, 1])).unwrap());
        assert!(!is_normally_stable(&ints(&[1, -3, 1])).unwrap());
        assert!(is_normally_stable(&BivariateForm::monomial(q(1, 1), 3, 2)).unwrap());
    }

    #[test]
    fn tn_at_one_but_not_two() {
        // (X+Y)^4 - perturbation near the boundary: search a small family
        // for a form whose chain stops at index 1.
        let mut found = false;
        for c2 in 1..=6 {
            let f = ints(&[1, 2, c2, 2, 1]);
            let report = lorentzian_chain(&f).unwrap();
            if report.max_lorentzian_index == Some(1) {
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn deformations_preserve_membership() {
        let f = BivariateForm::from_normal_factors(&[q(1, 1), q(0, 1), q(3, 1)], 1, 1);
        for t in [q(1, 2), q(1, 3), q(2, 3)] {
            let g = f.substitute_linear(&t);
            for i in 0..=g.degree() / 2 {
                assert!(is_i_lorentzian(&g, i).unwrap().lorentzian);
            }
        }
    }

    #[test]
    fn zero_form_is_rejected() {
        assert!(lorentzian_chain(&BivariateForm::zero(3)).is_err());
        assert!(is_normally_stable(&BivariateForm::zero(3)).is_err());
    }
}
