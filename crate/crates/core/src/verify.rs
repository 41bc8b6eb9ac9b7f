//! The verification suite: every acceptance check plus the worked examples,
//! replayed with exact arithmetic and reported one line per check.
//!
//! Reports are deterministic for a fixed seed; wall times are recorded only
//! when asked for, so that untimed reports are byte-for-byte reproducible.

use std::fmt;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::{generate, verify_hints, CorpusSpec, Fixture};
use crate::error::Result;
use crate::expansion::{
    alpha_statistic, column_set_from_partition, expand_minor, expand_minor_unchecked,
    leading_term_check,
};
use crate::form::BivariateForm;
use crate::hessian::{
    mixed_hessian_operator, mixed_hessian_permuted, path_minor, path_minor_lgv, plucker_determinant,
    specialize_path_minor,
};
use crate::linalg::determinant_polynomial;
use crate::lorentzian::lorentzian_chain;
use crate::poly::{order_at_zero, Monomial, SparsePolynomial, Var};
use crate::rational::Rational;
use crate::schur::{jacobi_trudi_eval, schur_eval, EvaluationPoint};
use crate::tableau::{enumerate_lr_tableaux, lr_expansion, partitions_of, Partition, SkewShape};
use crate::toeplitz::{sperner_number, translate_to_initial, IndexSet, ToeplitzMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    PassWithNote,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::PassWithNote)
    }

    fn and(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            (PassWithNote, _) | (_, PassWithNote) => PassWithNote,
            _ => Pass,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::PassWithNote => "pass-with-note",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_ms: Option<u128>,
}

impl CheckResult {
    fn new(name: impl Into<String>, status: Status, details: Value) -> Self {
        CheckResult {
            name: name.into(),
            status,
            details,
            wall_ms: None,
        }
    }

    fn from_failures(name: &str, checked: usize, failures: Vec<String>, extra: Value) -> Self {
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        let mut details = json!({ "checked": checked, "failures": failures.len() });
        if let Some(first) = failures.first() {
            details["first_failure"] = json!(first);
        }
        if let (Value::Object(d), Value::Object(e)) = (&mut details, extra) {
            d.extend(e);
        }
        CheckResult::new(name, status, details)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<14} {}", self.status.to_string(), self.name)?;
        if let Some(ms) = self.wall_ms {
            write!(f, " ({ms} ms)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok())
    }
}

/// Names of the acceptance checks, in order.
pub const CRITERIA: [&str; 10] = [
    "degree-9 minor identity",
    "degree-9 Littlewood-Richardson tableaux",
    "degree-6 path-minor table",
    "Jacobi-Trudi equals tableau sum",
    "Toeplitz minor Littlewood-Richardson expansion",
    "leading term of the expansion",
    "specialized path minors vanish to order alpha",
    "mixed Hessian Cauchy-Binet",
    "Toeplitz lemmas on the corpus",
    "Lorentzian criteria agree on the corpus",
];

/// Runs acceptance check `n` (1-based).
pub fn criterion(n: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
    let outcome = match n {
        1 => degree_nine_identity(&mut rng),
        2 => degree_nine_tableaux(),
        3 => path_table(),
        4 => jacobi_trudi_sweep(&mut rng),
        5 => expansion_sweep(&mut rng),
        6 => leading_term_sweep(&mut rng),
        7 => specialization_sweep(),
        8 => cauchy_binet_sweep(&mut rng),
        9 => toeplitz_lemmas(seed),
        10 => lorentzian_agreement(seed),
        _ => Ok(CheckResult::new(format!("criterion {n}"), Status::Fail, json!("no such criterion"))),
    };
    let name = CRITERIA.get(n.wrapping_sub(1)).copied().unwrap_or("unknown");
    let mut result = outcome.unwrap_or_else(|e| CheckResult::new(name, Status::Fail, json!(e.to_string())));
    result.name = format!("{n:>2}. {name}");
    result
}

/// Runs every acceptance check, optionally followed by the per-row replay
/// of the worked examples. Checks run in parallel; order is fixed.
pub fn run(seed: u64, paper_examples: bool, timings: bool) -> VerifyReport {
    let mut checks: Vec<CheckResult> = (1..=CRITERIA.len())
        .into_par_iter()
        .map(|n| {
            let start = Instant::now();
            let mut c = criterion(n, seed);
            if timings {
                c.wall_ms = Some(start.elapsed().as_millis());
            }
            c
        })
        .collect();
    if paper_examples {
        checks.extend(worked_examples());
    }
    VerifyReport { seed, checks }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    let sign = if rng.gen() { 1 } else { -1 };
    Rational::new(sign * rng.gen_range(1..=9), rng.gen_range(1..=4))
}

/// A random degree-`d` form whose first nonzero coefficient is `c_a`.
pub fn random_form_with_first_index(rng: &mut ChaCha8Rng, d: usize, a: usize) -> BivariateForm {
    let coeffs = (0..=d)
        .map(|k| match k.cmp(&a) {
            std::cmp::Ordering::Less => Rational::zero(),
            std::cmp::Ordering::Equal => nonzero_rational(rng),
            std::cmp::Ordering::Greater => random_rational(rng),
        })
        .collect();
    BivariateForm::new(coeffs).expect("nonempty")
}

fn set(v: &[usize]) -> IndexSet {
    IndexSet::new(v.to_vec()).expect("increasing")
}

const NINE_ROWS: [usize; 3] = [0, 1, 3];
const NINE_COLS: [usize; 3] = [0, 4, 6];
const NINE_KS: [[usize; 3]; 3] = [[0, 5, 7], [1, 4, 7], [1, 5, 6]];
const NINE_CONTENTS: [[usize; 3]; 3] = [[6, 5, 1], [6, 4, 2], [5, 5, 2]];

fn degree_nine_identity(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for _ in 0..25 {
        let f = random_form_with_first_index(rng, 9, 1);
        let lhs = ToeplitzMatrix::build(&f, 3)?.minor(&set(&NINE_ROWS), &set(&NINE_COLS))?;
        let band = ToeplitzMatrix::build(&f, 2)?;
        let rhs: Rational = NINE_KS
            .iter()
            .map(|k| band.maximal_minor(&set(k)))
            .sum::<Result<Rational>>()?;
        if lhs != rhs {
            failures.push(format!("{f}: {lhs} != {rhs}"));
        }
    }
    Ok(CheckResult::from_failures(CRITERIA[0], 25, failures, json!({})))
}

fn degree_nine_tableaux() -> Result<CheckResult> {
    let shape = SkewShape::new(Partition::new(vec![7, 7, 6])?, Partition::new(vec![5, 2, 1])?)?;
    let tableaux = enumerate_lr_tableaux(&shape);
    let mut contents: Vec<Vec<usize>> = tableaux.iter().map(|t| t.content()).collect();
    contents.sort_unstable_by(|x, y| y.cmp(x));
    let expansion = lr_expansion(&shape);
    let ks: Vec<IndexSet> = expansion
        .iter()
        .map(|(nu, _)| column_set_from_partition(nu, 2, 1, 9))
        .collect::<Result<_>>()?;
    let expected_contents: Vec<Vec<usize>> = NINE_CONTENTS.iter().map(|c| c.to_vec()).collect();
    let expected_ks: Vec<IndexSet> = NINE_KS.iter().map(|k| set(k)).collect();
    let ok = tableaux.len() == 3
        && contents == expected_contents
        && expansion.iter().all(|(_, c)| *c == 1)
        && ks == expected_ks;
    Ok(CheckResult::new(
        CRITERIA[1],
        if ok { Status::Pass } else { Status::Fail },
        json!({
            "tableaux": tableaux.iter().map(|t| &t.rows).collect::<Vec<_>>(),
            "contents": contents,
            "coefficients": expansion.iter().map(|(_, c)| c).collect::<Vec<_>>(),
            "k_sets": ks.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    ))
}

/// One row of the degree-6, `r = 2` path-minor table as printed: the set
/// `K`, the monomials as exponents of `(X1, X2, Y1, Y2)`, and `α³(K)`.
pub struct PathTableRow {
    pub k: [usize; 3],
    pub printed: &'static [[u32; 4]],
    pub alpha: usize,
}

pub const PATH_TABLE: [PathTableRow; 10] = [
    PathTableRow { k: [0, 1, 2], printed: &[[0, 0, 3, 3]], alpha: 3 },
    PathTableRow { k: [0, 1, 3], printed: &[[1, 0, 2, 3], [0, 1, 3, 2]], alpha: 2 },
    PathTableRow { k: [0, 1, 4], printed: &[[1, 1, 2, 2]], alpha: 2 },
    PathTableRow { k: [0, 2, 3], printed: &[[2, 0, 1, 3], [1, 1, 2, 2], [0, 2, 3, 1]], alpha: 1 },
    PathTableRow { k: [0, 2, 4], printed: &[[2, 1, 1, 2], [1, 2, 2, 1]], alpha: 1 },
    PathTableRow { k: [0, 3, 4], printed: &[[2, 2, 1, 1]], alpha: 1 },
    PathTableRow {
        k: [1, 2, 3],
        printed: &[[3, 0, 0, 3], [2, 1, 1, 2], [1, 2, 2, 1], [0, 3, 3, 0]],
        alpha: 0,
    },
    PathTableRow { k: [1, 2, 4], printed: &[[3, 1, 0, 2], [2, 2, 1, 1], [1, 3, 2, 0]], alpha: 0 },
    // Printed with second monomial X1^2 X2^2 Y1, of degree 5.
    PathTableRow { k: [1, 3, 4], printed: &[[3, 2, 0, 1], [2, 2, 1, 0]], alpha: 0 },
    PathTableRow { k: [2, 3, 4], printed: &[[3, 3, 0, 0]], alpha: 0 },
];

pub fn table_polynomial(monomials: &[[u32; 4]]) -> SparsePolynomial {
    SparsePolynomial::from_terms(monomials.iter().map(|e| {
        let m = Monomial::from_exponents([
            (Var::X(1), e[0]),
            (Var::X(2), e[1]),
            (Var::Y(1), e[2]),
            (Var::Y(2), e[3]),
        ]);
        (m, Rational::one())
    }))
}

fn path_table_row(row: &PathTableRow) -> Result<CheckResult> {
    let k = set(&row.k);
    let derived = path_minor(&k, 2, 6)?;
    let lgv = path_minor_lgv(&k, 2, 6)?;
    let printed = table_polynomial(row.printed);
    let alpha = alpha_statistic(&k, 3, 2);
    let order = order_at_zero(&specialize_path_minor(&k, 2, 3, 6)?)?;
    let consistent = derived == lgv
        && derived.is_homogeneous_of_degree(6)
        && alpha == row.alpha
        && order == Some(alpha as u32);
    let status = match (consistent, derived == printed) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        // The printed row is accepted only if it is not itself a valid
        // path minor, i.e. it breaks homogeneity.
        (true, false) if !printed.is_homogeneous_of_degree(6) => Status::PassWithNote,
        (true, false) => Status::Fail,
    };
    let mut details = json!({
        "k": k.to_string(),
        "path_minor": derived.to_string(),
        "alpha": alpha,
        "order_at_zero": order,
    });
    if status == Status::PassWithNote {
        details["printed"] = json!(printed.to_string());
        details["note"] = json!(
            "the printed polynomial is not homogeneous of degree 6; the derived value agrees with the determinant of single-path polynomials"
        );
    }
    Ok(CheckResult::new(format!("path table K = {k}"), status, details))
}

fn path_table() -> Result<CheckResult> {
    let rows: Vec<CheckResult> = PATH_TABLE.iter().map(path_table_row).collect::<Result<_>>()?;
    let status = rows.iter().fold(Status::Pass, |acc, r| acc.and(r.status));
    Ok(CheckResult::new(
        CRITERIA[2],
        status,
        Value::Array(rows.into_iter().map(|r| json!({"status": r.status, "row": r.details})).collect()),
    ))
}

fn jacobi_trudi_sweep(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut shapes = Vec::new();
    for n in 0..=8 {
        for outer in partitions_of(n) {
            for m in 0..=4.min(n) {
                for inner in partitions_of(m) {
                    if inner.is_contained_in(&outer) {
                        shapes.push(SkewShape::new(outer.clone(), inner)?);
                    }
                }
            }
        }
    }
    let cases: Vec<(SkewShape, EvaluationPoint)> = shapes
        .iter()
        .flat_map(|s| {
            (0..20)
                .map(|_| {
                    let n = rng.gen_range(1..=4);
                    let pt = EvaluationPoint::new((0..n).map(|_| random_rational(rng)).collect())
                        .expect("nonempty");
                    (s.clone(), pt)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter(|(s, p)| jacobi_trudi_eval(s, p) != schur_eval(s, p))
        .map(|(s, p)| format!("{s} at {:?}", p.values().iter().map(ToString::to_string).collect::<Vec<_>>()))
        .collect();
    Ok(CheckResult::from_failures(
        CRITERIA[3],
        cases.len(),
        failures,
        json!({ "shapes": shapes.len() }),
    ))
}

/// `(d, i, r, a)` with `d ≤ 10` and `a ≤ r ≤ i ≤ d/2`. Mostly `r < i`:
/// with `r = i` the rows form a run and the expansion has a single term.
fn random_shape_parameters(rng: &mut ChaCha8Rng) -> (usize, usize, usize, usize) {
    let d = rng.gen_range(4..=10);
    let i = rng.gen_range(2..=d / 2);
    let r = if rng.gen_bool(0.2) { i } else { rng.gen_range(1..i) };
    let a = rng.gen_range(0..=r);
    (d, i, r, a)
}

fn expansion_sweep(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut boundary = 0;
    let mut terms = 0;
    for _ in 0..200 {
        let (d, i, r, a) = random_shape_parameters(rng);
        let f = random_form_with_first_index(rng, d, a);
        let rows = IndexSet::random(rng, i + 1, r + 1);
        let cols = IndexSet::random(rng, d - i + 1, r + 1);
        let e = expand_minor_unchecked(&f, i, &rows, &cols)?;
        boundary += usize::from(e.boundary_case);
        terms += e.terms.len();
        if !e.identity_holds() || !e.bounds_hold {
            failures.push(format!(
                "{f}, i = {i}, I = {rows}, J = {cols}: {} vs {}, bounds {}",
                e.lhs, e.rhs, e.bounds_hold
            ));
        }
    }
    Ok(CheckResult::from_failures(
        CRITERIA[4],
        200,
        failures,
        json!({ "boundary_cases_a_equals_r": boundary, "expansion_terms": terms }),
    ))
}

fn leading_term_sweep(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut terms = 0;
    while checked < 100 {
        let (d, i, r, a) = random_shape_parameters(rng);
        if d - r - a < i - a {
            continue;
        }
        let mut parts: Vec<usize> = (0..=r).map(|_| rng.gen_range((r - a)..=(d - r - a))).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        parts[0] = parts[0].max(i - a);
        let nu = Partition::new(parts)?;
        let f = random_form_with_first_index(rng, d, a);
        checked += 1;
        match leading_term_check(&nu, &f, i, r) {
            Ok(report) => terms += report.expansion.terms.len(),
            Err(e) => failures.push(format!("ν = {nu}, d = {d}, i = {i}, r = {r}, a = {a}: {e}")),
        }
    }
    Ok(CheckResult::from_failures(CRITERIA[5], checked, failures, json!({ "expansion_terms": terms })))
}

fn specialization_sweep() -> Result<CheckResult> {
    let cases: Vec<(usize, usize, usize, IndexSet)> = (0..=8usize)
        .flat_map(|d| {
            (0..=d / 2).flat_map(move |r| {
                ((r + 1)..=d / 2).flat_map(move |i| {
                    (0..=d - r)
                        .combinations(r + 1)
                        .map(move |k| (d, r, i, IndexSet::new(k).expect("increasing")))
                })
            })
        })
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(d, r, i, k)| {
            let order = specialize_path_minor(k, *r, *i, *d)
                .and_then(|p| order_at_zero(&p))
                .ok()
                .flatten();
            let alpha = alpha_statistic(k, *i, *r);
            (order != Some(alpha as u32))
                .then(|| format!("d = {d}, r = {r}, i = {i}, K = {k}: order {order:?}, α = {alpha}"))
        })
        .collect();
    Ok(CheckResult::from_failures(CRITERIA[6], cases.len(), failures, json!({})))
}

fn cauchy_binet_sweep(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut cases = Vec::new();
    while cases.len() < 20 {
        let d = rng.gen_range(2..=6);
        let f = BivariateForm::new((0..=d).map(|_| random_rational(rng)).collect())?;
        if f.is_zero() {
            continue;
        }
        let s = sperner_number(&f)?;
        let r = rng.gen_range(0..=2.min(d / 2).min(s - 1));
        cases.push((f, r));
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(f, r)| {
            let check = || -> Result<bool> {
                let m = mixed_hessian_permuted(f, *r)?;
                let op = mixed_hessian_operator(f, *r)?;
                let rows_match = (0..=*r).all(|p| m[p] == op[r - p]);
                Ok(rows_match && determinant_polynomial(&m)? == plucker_determinant(f, *r)?)
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(format!("{f}, r = {r}")),
                Err(e) => Some(format!("{f}, r = {r}: {e}")),
            }
        })
        .collect();
    Ok(CheckResult::from_failures(CRITERIA[7], cases.len(), failures, json!({})))
}

fn corpus_for(seed: u64) -> Result<Vec<Fixture>> {
    generate(&CorpusSpec {
        seed,
        ..CorpusSpec::default()
    })
}

/// All Toeplitz-level lemmas for one form; returns the first failure.
fn toeplitz_lemmas_for(f: &BivariateForm) -> Result<Option<String>> {
    let d = f.degree();
    let s = sperner_number(f)?;
    let bands: Vec<ToeplitzMatrix> = (0..=d / 2).map(|i| ToeplitzMatrix::build(f, i)).collect::<Result<_>>()?;
    let tp: Vec<bool> = bands.iter().map(ToeplitzMatrix::is_totally_positive).collect();
    for (i, band) in bands.iter().enumerate() {
        for w in band.consecutive_minors(band.min_dim()) {
            let (r0, c0) = translate_to_initial(&w.rows, &w.cols)?;
            if band.minor(&r0, &c0)? != w.value {
                return Ok(Some(format!("i = {i}: consecutive minor {} x {} differs from its translate", w.rows, w.cols)));
            }
        }
        if tp[i] != tp[..=i].iter().all(|&x| x) {
            return Ok(Some(format!("i = {i}: TP of φ^i without TP of every smaller band")));
        }
        if tp[i] != band.is_totally_positive_exhaustive() {
            return Ok(Some(format!("i = {i}: consecutive-minor TP test disagrees with all minors")));
        }
        if band.rank() != (i + 1).min(s) {
            return Ok(Some(format!("i = {i}: rank {} but s = {s}", band.rank())));
        }
    }
    if s >= 1 && s - 1 <= d / 2 {
        let lhs = tp[s - 1];
        let rhs = ((s - 1)..=d / 2).all(|j| {
            bands[j].is_tp_k(s).unwrap_or(false) && bands[j].is_totally_nonnegative()
        });
        if lhs != rhs {
            return Ok(Some(format!("TP of φ^(s-1) is {lhs} but TP_s and TN from s - 1 on is {rhs}")));
        }
    }
    Ok(None)
}

fn toeplitz_lemmas(seed: u64) -> Result<CheckResult> {
    let corpus = corpus_for(seed)?;
    let failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|fx| {
            let hint = verify_hints(fx).err().map(|e| e.to_string());
            let lemma = match toeplitz_lemmas_for(&fx.form) {
                Ok(x) => x,
                Err(e) => Some(e.to_string()),
            };
            hint.or(lemma.map(|m| format!("{}: {m}", fx.id)))
        })
        .collect();
    Ok(CheckResult::from_failures(CRITERIA[8], corpus.len(), failures, json!({})))
}

/// Maximal Lorentzian index, degree and normal stability of a fixture.
type ChainSummary = (Option<usize>, usize, bool);

fn lorentzian_agreement(seed: u64) -> Result<CheckResult> {
    let corpus = corpus_for(seed)?;
    let results: Vec<(String, Result<ChainSummary>)> = corpus
        .par_iter()
        .map(|fx| {
            let r = lorentzian_chain(&fx.form).map(|rep| (rep.max_lorentzian_index, rep.degree, rep.normally_stable));
            (fx.id.clone(), r)
        })
        .collect();
    let mut failures = Vec::new();
    let mut stops_at_one = 0;
    let mut normally_stable = 0;
    let mut non_members = 0;
    for (id, r) in results {
        match r {
            Ok((max, d, ns)) => {
                stops_at_one += usize::from(max == Some(1) && d >= 4);
                normally_stable += usize::from(ns);
                non_members += usize::from(max != Some(d / 2));
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    if stops_at_one == 0 {
        failures.push("no corpus form is 1-Lorentzian without being 2-Lorentzian".into());
    }
    Ok(CheckResult::from_failures(
        CRITERIA[9],
        corpus.len(),
        failures,
        json!({
            "max_index_one": stops_at_one,
            "normally_stable": normally_stable,
            "not_fully_lorentzian": non_members,
        }),
    ))
}

/// The worked examples replayed one row at a time: the degree-9 identity
/// term by term, and each row of the degree-6 path-minor table.
pub fn worked_examples() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = random_form_with_first_index(&mut rng, 9, 1);
    let nine = expand_minor(&f, 3, &set(&NINE_ROWS), &set(&NINE_COLS));
    match nine {
        Ok(e) => {
            for (content, k) in NINE_CONTENTS.iter().zip(NINE_KS.iter()) {
                let nu = Partition::new(content.to_vec()).expect("decreasing");
                let term = e.terms.iter().find(|t| t.nu == nu);
                let ok = term.is_some_and(|t| t.coefficient == 1 && t.k == set(k));
                out.push(CheckResult::new(
                    format!("degree-9 term ν = {nu}"),
                    if ok { Status::Pass } else { Status::Fail },
                    json!({ "k": set(k).to_string(), "alpha": term.map(|t| t.alpha) }),
                ));
            }
            out.push(CheckResult::new(
                "degree-9 identity",
                if e.identity_holds() && e.terms.len() == 3 { Status::Pass } else { Status::Fail },
                json!({ "form": f.to_string(), "lhs": e.lhs, "rhs": e.rhs }),
            ));
        }
        Err(e) => out.push(CheckResult::new("degree-9 identity", Status::Fail, json!(e.to_string()))),
    }
    for row in &PATH_TABLE {
        out.push(
            path_table_row(row)
                .unwrap_or_else(|e| CheckResult::new(format!("path table K = {:?}", row.k), Status::Fail, json!(e.to_string()))),
        );
    }
    out
}
