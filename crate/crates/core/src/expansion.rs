//! Littlewood–Richardson expansion of Toeplitz minors.
//!
//! Let `a` be the index of the first nonzero coefficient of `F`. An
//! `(r+1)×(r+1)` minor `Δ_IJ(φ^i_d(F))` equals `c_a^(r+1) · s_(λ/(μ+a))`,
//! and each maximal minor `Δ_K(φ^r_d(F))` equals `c_a^(r+1) · s_ν`. The
//! LR rule therefore writes every such minor of `φ^i` as a nonnegative
//! integer combination of maximal minors of `φ^r`.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::form::BivariateForm;
use crate::rational::Rational;
use crate::tableau::{lr_expansion, Partition, SkewShape};
use crate::toeplitz::{IndexSet, ToeplitzMatrix};

/// The partitions attached to a pair of index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorShapeData {
    pub i: usize,
    pub d: usize,
    pub r: usize,
    pub a: usize,
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub lambda: Partition,
    pub mu: Partition,
}

impl MinorShapeData {
    /// The skew shape `λ/(μ+a)`.
    pub fn skew_shape(&self) -> SkewShape {
        SkewShape::new(self.lambda.clone(), self.mu.add_constant(self.a))
            .expect("containment checked at construction")
    }
}

/// `λ_p = (j_r - r) + i - (i_p - p)` and `μ_q = (j_r - r) - (j_q - q)`.
pub fn shape_from_indices(
    i: usize,
    d: usize,
    a: usize,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<MinorShapeData> {
    contract!(
        !rows.is_empty() && rows.len() == cols.len(),
        "row set {rows} and column set {cols} must be nonempty and equally large"
    );
    let r = rows.len() - 1;
    contract!(
        a <= r && r <= i && i <= d / 2,
        "need a <= r <= i <= d/2, got a = {a}, r = {r}, i = {i}, d = {d}"
    );
    contract!(rows.last().unwrap() <= i, "row set {rows} exceeds {i}");
    contract!(cols.last().unwrap() <= d - i, "column set {cols} exceeds {}", d - i);
    let (ii, jj) = (rows.as_slice(), cols.as_slice());
    let jr = jj[r] - r;
    let lambda = Partition::new((0..=r).map(|p| jr + i - (ii[p] - p)).collect())?;
    let mu = Partition::new((0..=r).map(|q| jr - (jj[q] - q)).collect())?;
    contract!(
        mu.add_constant(a).is_contained_in(&lambda),
        "μ + a = {} does not fit inside λ = {lambda}",
        mu.add_constant(a)
    );
    Ok(MinorShapeData {
        i,
        d,
        r,
        a,
        rows: rows.clone(),
        cols: cols.clone(),
        lambda,
        mu,
    })
}

/// `K(ν)`: `k_q = ν_(r-q) - (r-a) + q`, checked to lie in `0..=d-r`.
pub fn column_set_from_partition(nu: &Partition, r: usize, a: usize, d: usize) -> Result<IndexSet> {
    contract!(a <= r && r <= d, "need a <= r <= d");
    contract!(
        nu.length() <= r + 1,
        "{nu} has more than {} nonzero parts",
        r + 1
    );
    let ks = (0..=r)
        .map(|q| nu.part(r - q) as i64 - (r - a) as i64 + q as i64)
        .collect::<Vec<_>>();
    contract!(
        ks.iter().all(|&k| k >= 0 && k <= (d - r) as i64),
        "{nu} gives column indices {ks:?} outside 0..={}",
        d - r
    );
    IndexSet::new(ks.into_iter().map(|k| k as usize).collect())
}

/// Inverse of [`column_set_from_partition`]: `ν_(r-q) = (k_q - q) + (r - a)`.
pub fn partition_from_column_set(k: &IndexSet, a: usize) -> Result<Partition> {
    contract!(!k.is_empty(), "empty column set");
    let r = k.len() - 1;
    contract!(a <= r, "need a <= r");
    let ks = k.as_slice();
    Partition::new((0..=r).map(|p| ks[r - p] - (r - p) + (r - a)).collect())
}

/// `α^i(K) = Σ_q max{(i - r) - (k_q - q), 0}`.
pub fn alpha_statistic(k: &IndexSet, i: usize, r: usize) -> usize {
    k.as_slice()
        .iter()
        .enumerate()
        .map(|(q, &kq)| (i as i64 - r as i64 - (kq as i64 - q as i64)).max(0) as usize)
        .sum()
}

/// `α^i(ν) = Σ_q max{(i - a) - ν_q, 0}` over the `r + 1` parts of `ν`.
pub fn alpha_of_partition(nu: &Partition, i: usize, a: usize, r: usize) -> usize {
    (0..=r)
        .map(|q| (i as i64 - a as i64 - nu.part(q) as i64).max(0) as usize)
        .sum()
}

/// The tail form of `α^i(ν)`, defined when `ν_0 ≥ i - a`: with `t` the
/// largest index such that `ν_t ≥ i - a`, `α = Σ_(q > t) ((i - a) - ν_q)`.
pub fn alpha_tail_form(nu: &Partition, i: usize, a: usize, r: usize) -> Option<usize> {
    let bound = i.checked_sub(a)?;
    if nu.part(0) < bound {
        return None;
    }
    let t = (0..=r).rev().find(|&q| nu.part(q) >= bound)?;
    Some(((t + 1)..=r).map(|q| bound - nu.part(q)).sum())
}

/// One term `c · Δ_K(φ^r_d(F))` of an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub coefficient: usize,
    pub nu: Partition,
    pub k: IndexSet,
    pub alpha: usize,
    pub minor: Rational,
}

/// Both sides of the expansion of `Δ_IJ(φ^i_d(F))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorExpansion {
    pub shape: MinorShapeData,
    pub shifted_inner: Partition,
    /// Terms sorted by `α` descending, then by `K`.
    pub terms: Vec<ExpansionTerm>,
    pub lhs: Rational,
    pub rhs: Rational,
    /// The first nonzero index equals `r`, outside the strict hypothesis
    /// `a < r` under which the expansion is usually stated.
    pub boundary_case: bool,
    /// Every `ν` has at most `r + 1` parts, `ν_0 ≤ d - r - a` and
    /// `ν_r ≥ r - a`.
    pub bounds_hold: bool,
}

impl MinorExpansion {
    pub fn identity_holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Turns a failed identity or bound into a property violation.
    pub fn check(&self) -> Result<()> {
        if !self.bounds_hold {
            return Err(Error::PropertyViolation(format!(
                "an LR partition of {} breaks the bounds for r = {}, a = {}",
                self.shape.skew_shape(),
                self.shape.r,
                self.shape.a
            )));
        }
        if !self.identity_holds() {
            return Err(Error::PropertyViolation(format!(
                "minor {} x {} of band {} is {} but the expansion sums to {}",
                self.shape.rows, self.shape.cols, self.shape.i, self.lhs, self.rhs
            )));
        }
        Ok(())
    }
}

/// Computes both sides of the expansion without judging them.
pub fn expand_minor_unchecked(
    form: &BivariateForm,
    i: usize,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<MinorExpansion> {
    let a = form.first_nonzero_index()?;
    let d = form.degree();
    let shape = shape_from_indices(i, d, a, rows, cols)?;
    let r = shape.r;
    let lhs = ToeplitzMatrix::build(form, i)?.minor(rows, cols)?;
    let band_r = ToeplitzMatrix::build(form, r)?;
    let mut bounds_hold = true;
    let mut terms = Vec::new();
    for (nu, coefficient) in lr_expansion(&shape.skew_shape()) {
        let in_bounds = nu.length() <= r + 1
            && nu.part(0) + r + a <= d
            && nu.part(r) + a >= r;
        if !in_bounds {
            bounds_hold = false;
            continue;
        }
        let k = column_set_from_partition(&nu, r, a, d)?;
        let minor = band_r.maximal_minor(&k)?;
        terms.push(ExpansionTerm {
            coefficient,
            alpha: alpha_statistic(&k, i, r),
            nu: nu.padded(r + 1)?,
            k,
            minor,
        });
    }
    terms.sort_by(|x, y| y.alpha.cmp(&x.alpha).then_with(|| x.k.cmp(&y.k)));
    let rhs = terms
        .iter()
        .map(|t| Rational::from(t.coefficient as i64) * &t.minor)
        .sum();
    Ok(MinorExpansion {
        shifted_inner: shape.mu.add_constant(a),
        boundary_case: a == r,
        shape,
        terms,
        lhs,
        rhs,
        bounds_hold,
    })
}

/// `Δ_IJ(φ^i_d(F)) = Σ_ν c^λ_((μ+a),ν) · Δ_(K(ν))(φ^r_d(F))`, with `r + 1 = |I|`.
/// Fails with a property violation if the two sides differ.
pub fn expand_minor(
    form: &BivariateForm,
    i: usize,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<MinorExpansion> {
    let e = expand_minor_unchecked(form, i, rows, cols)?;
    e.check()?;
    Ok(e)
}

/// Index sets recovered from a partition `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionIndices {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub k: IndexSet,
    pub lambda: Partition,
    pub mu: Partition,
}

/// Builds `I`, `J`, `K`, `λ`, `μ` from `ν` with
/// `i - a ≤ ν_0 ≤ d - r - a` and `ν_r ≥ r - a`, and checks that `(I, J)`
/// reproduces `λ` and `μ`.
pub fn indices_from_partition(
    nu: &Partition,
    i: usize,
    r: usize,
    a: usize,
    d: usize,
) -> Result<PartitionIndices> {
    contract!(
        a <= r && r <= i && i <= d / 2,
        "need a <= r <= i <= d/2, got a = {a}, r = {r}, i = {i}, d = {d}"
    );
    contract!(nu.length() <= r + 1, "{nu} has more than {} parts", r + 1);
    let n0 = nu.part(0);
    contract!(
        n0 + a >= i && n0 + r + a <= d && nu.part(r) + a >= r,
        "{nu} violates i - a <= ν_0 <= d - r - a or ν_r >= r - a"
    );
    let ia = (i - a) as i64;
    let part = |p: usize| nu.part(p) as i64;
    let rows = IndexSet::new((0..=r).map(|p| (ia - part(p)).max(0) as usize + p).collect())?;
    let cols = IndexSet::new((0..=r).map(|q| (part(r - q) - ia).max(0) as usize + q).collect())?;
    let k = column_set_from_partition(nu, r, a, d)?;
    let lambda = Partition::new(
        (0..=r)
            .map(|p| (n0 as i64 + a as i64 - (ia - part(p)).max(0)) as usize)
            .collect(),
    )?;
    let mu = Partition::new(
        (0..=r)
            .map(|q| (n0 as i64 + a as i64 - i as i64 - (part(r - q) - ia).max(0)) as usize)
            .collect(),
    )?;
    let check = shape_from_indices(i, d, a, &rows, &cols)?;
    if check.lambda != lambda || check.mu != mu {
        return Err(Error::PropertyViolation(format!(
            "{nu}: index sets {rows} x {cols} give λ = {}, μ = {} instead of {lambda}, {mu}",
            check.lambda, check.mu
        )));
    }
    Ok(PartitionIndices {
        rows,
        cols,
        k,
        lambda,
        mu,
    })
}

/// Outcome of checking that `K(ν)` leads the expansion of `Δ_IJ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingTermReport {
    pub nu: Partition,
    pub target: IndexSet,
    pub target_alpha: usize,
    pub expansion: MinorExpansion,
}

impl LeadingTermReport {
    /// `K(ν)` appears with coefficient 1 and every other term has smaller α.
    pub fn passed(&self) -> bool {
        let mut found = false;
        for t in &self.expansion.terms {
            if t.k == self.target {
                found = t.coefficient == 1;
            } else if t.alpha >= self.target_alpha {
                return false;
            }
        }
        found
    }
}

/// Expands `Δ_IJ(φ^i_d(F))` for the index sets built from `ν` and checks
/// that `Δ_(K(ν))` is the unique term of maximal α, with coefficient 1.
pub fn leading_term_check(
    nu: &Partition,
    form: &BivariateForm,
    i: usize,
    r: usize,
) -> Result<LeadingTermReport> {
    let a = form.first_nonzero_index()?;
    let idx = indices_from_partition(nu, i, r, a, form.degree())?;
    let expansion = expand_minor(form, i, &idx.rows, &idx.cols)?;
    let report = LeadingTermReport {
        nu: nu.padded(r + 1)?,
        target_alpha: alpha_statistic(&idx.k, i, r),
        target: idx.k,
        expansion,
    };
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::PropertyViolation(format!(
            "K = {} does not lead the expansion for ν = {nu}: {:?}",
            report.target, report.expansion.terms
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::schur::{jacobi_trudi_eval, schur_eval, EvaluationPoint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn form_with_first_index(rng: &mut ChaCha8Rng, d: usize, a: usize) -> BivariateForm {
        let coeffs = (0..=d)
            .map(|k| match k.cmp(&a) {
                std::cmp::Ordering::Less => Rational::zero(),
                std::cmp::Ordering::Equal => q(rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=4)),
                std::cmp::Ordering::Greater => q(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
            })
            .collect();
        BivariateForm::new(coeffs).unwrap()
    }

    #[test]
    fn nine_degree_shapes() {
        let data = shape_from_indices(3, 9, 1, &set(&[0, 1, 3]), &set(&[0, 4, 6])).unwrap();
        assert_eq!(data.lambda, part(&[7, 7, 6]));
        assert_eq!(data.mu.parts(), &[4, 1, 0]);
        assert_eq!(data.mu.add_constant(1).parts(), &[5, 2, 1]);
        assert_eq!(column_set_from_partition(&part(&[6, 5, 1]), 2, 1, 9).unwrap(), set(&[0, 5, 7]));
        assert_eq!(column_set_from_partition(&part(&[6, 4, 2]), 2, 1, 9).unwrap(), set(&[1, 4, 7]));
        assert_eq!(column_set_from_partition(&part(&[5, 5, 2]), 2, 1, 9).unwrap(), set(&[1, 5, 6]));
        assert_eq!(column_set_from_partition(&part(&[1, 1, 1]), 2, 1, 9).unwrap(), set(&[0, 1, 2]));
        assert!(column_set_from_partition(&part(&[9, 5, 1]), 2, 1, 9).is_err());
    }

    #[test]
    fn initial_runs_give_rectangles() {
        let data = shape_from_indices(3, 8, 0, &set(&[0, 1, 2]), &set(&[0, 1, 2])).unwrap();
        assert_eq!(data.lambda, part(&[3, 3, 3]));
        assert_eq!(data.mu, part(&[]));
    }

    #[test]
    fn nine_degree_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let f = form_with_first_index(&mut rng, 9, 1);
            let e = expand_minor(&f, 3, &set(&[0, 1, 3]), &set(&[0, 4, 6])).unwrap();
            let ks: Vec<IndexSet> = e.terms.iter().map(|t| t.k.clone()).collect();
            assert_eq!(ks.len(), 3);
            for k in [set(&[0, 5, 7]), set(&[1, 4, 7]), set(&[1, 5, 6])] {
                assert!(ks.contains(&k));
            }
            assert!(e.terms.iter().all(|t| t.coefficient == 1));
            assert!(!e.boundary_case);
        }
    }

    #[test]
    fn maximal_minor_expands_to_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let f = form_with_first_index(&mut rng, 8, 1);
        let e = expand_minor(&f, 2, &set(&[0, 1, 2]), &set(&[1, 3, 6])).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coefficient, 1);
        assert_eq!(e.terms[0].k, set(&[1, 3, 6]));
        assert_eq!(e.terms[0].alpha, 0);
    }

    #[test]
    fn random_expansions_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..60 {
            let d = rng.gen_range(2..=10);
            let i = rng.gen_range(0..=d / 2);
            let r = rng.gen_range(0..=i);
            let a = rng.gen_range(0..=r);
            let f = form_with_first_index(&mut rng, d, a);
            let rows = IndexSet::random(&mut rng, i + 1, r + 1);
            let cols = IndexSet::random(&mut rng, d - i + 1, r + 1);
            let e = expand_minor(&f, i, &rows, &cols).unwrap();
            assert!(e.bounds_hold);
            assert_eq!(e.boundary_case, a == r);
        }
    }

    #[test]
    fn rejects_bad_hypotheses() {
        let f = BivariateForm::from_ints(&[0, 0, 1, 2, 3, 4, 5]);
        // a = 2 exceeds r = 1.
        assert!(expand_minor(&f, 2, &set(&[0, 1]), &set(&[0, 1])).is_err());
        assert!(expand_minor(&BivariateForm::zero(4), 1, &set(&[0]), &set(&[0])).is_err());
    }

    /// With c_(a+j) = c_a · h_j(t) for a finite point t, each maximal minor
    /// is c_a^(r+1) times the tableau sum s_ν(t).
    #[test]
    fn maximal_minors_are_schur_values_for_h_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..10 {
            let d = rng.gen_range(3..=8);
            let a = rng.gen_range(0..=1);
            let n = rng.gen_range(1..=3);
            let t: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
            let point = EvaluationPoint::new(t).unwrap();
            let ca = q(rng.gen_range(1..=5), 1);
            let h = crate::schur::complete_homogeneous_all(d, &point);
            let coeffs = (0..=d)
                .map(|k| if k < a { Rational::zero() } else { &ca * &h[k - a] })
                .collect();
            let f = BivariateForm::new(coeffs).unwrap();
            for r in a..=d / 2 {
                let band = ToeplitzMatrix::build(&f, r).unwrap();
                for k in band.maximal_column_sets() {
                    let nu = partition_from_column_set(&k, a).unwrap();
                    let s = schur_eval(&SkewShape::straight(nu.clone()), &point);
                    assert_eq!(band.maximal_minor(&k).unwrap(), ca.pow(r as u32 + 1) * s);
                }
            }
        }
    }

    #[test]
    fn maximal_minors_of_normal_factors_are_dual_schur_values() {
        // With c_(a+j) = c_a · e_j(w) the Toeplitz minors give s_(ν') at w.
        let w = EvaluationPoint::new(vec![q(1, 2), q(1, 3), q(2, 1), q(1, 1)]).unwrap();
        let roots: Vec<Rational> = w.values().iter().map(Rational::recip).collect();
        let f = BivariateForm::from_normal_factors(&roots, 1, 1);
        let a = f.first_nonzero_index().unwrap();
        let ca = f.coeffs()[a].clone();
        for r in a..=f.degree() / 2 {
            let band = ToeplitzMatrix::build(&f, r).unwrap();
            for k in band.maximal_column_sets() {
                let nu = partition_from_column_set(&k, a).unwrap();
                let s = jacobi_trudi_eval(&SkewShape::straight(nu.conjugate()), &w);
                assert_eq!(band.maximal_minor(&k).unwrap(), ca.pow(r as u32 + 1) * s, "K = {k}");
            }
        }
    }

    #[test]
    fn alpha_values() {
        let cases = [([0, 1, 2], 3), ([0, 1, 3], 2), ([0, 2, 3], 1), ([1, 2, 3], 0)];
        for (k, alpha) in cases {
            assert_eq!(alpha_statistic(&set(&k), 3, 2), alpha);
        }
        for k in [[0, 1, 2], [1, 3, 4], [2, 3, 4]] {
            assert_eq!(alpha_statistic(&set(&k), 2, 2), 0);
        }
    }

    #[test]
    fn alpha_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..200 {
            let d = rng.gen_range(2..=12);
            let i = rng.gen_range(0..=d / 2);
            let r = rng.gen_range(0..=i);
            let a = rng.gen_range(0..=r);
            let mut parts: Vec<usize> = (0..=r).map(|_| rng.gen_range((r - a)..=(d - r - a))).collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let nu = part(&parts);
            let k = column_set_from_partition(&nu, r, a, d).unwrap();
            let by_k = alpha_statistic(&k, i, r);
            assert_eq!(by_k, alpha_of_partition(&nu, i, a, r));
            if let Some(tail) = alpha_tail_form(&nu, i, a, r) {
                assert_eq!(tail, by_k);
            }
            assert_eq!(partition_from_column_set(&k, a).unwrap(), nu);
        }
    }

    #[test]
    fn partition_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for _ in 0..100 {
            let d = rng.gen_range(2..=12);
            let i = rng.gen_range(0..=d / 2);
            let r = rng.gen_range(0..=i);
            let a = rng.gen_range(0..=r);
            let mut parts: Vec<usize> = (0..=r).map(|_| rng.gen_range((r - a)..=(d - r - a))).collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            parts[0] = parts[0].max(i - a);
            let nu = part(&parts);
            let idx = indices_from_partition(&nu, i, r, a, d).unwrap();
            let kr = idx.k.last().unwrap();
            assert!(i <= kr && kr <= d - r);
            if nu.part(r) >= i - a {
                assert_eq!(idx.rows, IndexSet::run(0, r + 1));
            }
        }
    }

    #[test]
    fn leading_terms_for_nine_degree_partitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let f = form_with_first_index(&mut rng, 9, 1);
        for nu in [part(&[6, 5, 1]), part(&[6, 4, 2]), part(&[5, 5, 2])] {
            let report = leading_term_check(&nu, &f, 3, 2).unwrap();
            assert!(report.passed());
        }
        // r = i: a single term.
        let report = leading_term_check(&part(&[4, 3, 1]), &f, 2, 2).unwrap();
        assert_eq!(report.expansion.terms.len(), 1);
    }
}
