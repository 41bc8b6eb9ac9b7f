//! Randomized invariants, each checked against an independent computation.

use itertools::Itertools;
use proptest::prelude::*;
use tnn_core::expansion::{alpha_of_partition, alpha_statistic, alpha_tail_form, expand_minor, partition_from_column_set};
use tnn_core::hessian::{path_minor, path_minor_lgv};
use tnn_core::schur::{jacobi_trudi_eval, schur_eval, EvaluationPoint};
use tnn_core::toeplitz::{consecutive_down, consecutive_up, is_consecutive, translate_to_initial};
use tnn_core::{BivariateForm, IndexSet, Partition, Rational, SkewShape, SparsePolynomial, ToeplitzMatrix};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d))
}

fn form(max_degree: usize) -> impl Strategy<Value = BivariateForm> {
    (1..=max_degree)
        .prop_flat_map(|d| prop::collection::vec(rational(), d + 1))
        .prop_map(|c| BivariateForm::new(c).unwrap())
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][c] * &cofactor_det(&minor);
            if c % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn toeplitz_entries_follow_the_diagonal_rule(f in form(9), seed in 0usize..100) {
        let d = f.degree();
        let i = seed % (d / 2 + 1);
        let t = ToeplitzMatrix::build(&f, i).unwrap();
        prop_assert_eq!(t.nrows(), i + 1);
        prop_assert_eq!(t.ncols(), d - i + 1);
        for p in 0..=i {
            for q in 0..=d - i {
                prop_assert_eq!(t.entry(p, q), &f.coeffs()[i + q - p]);
            }
        }
    }

    #[test]
    fn minors_match_cofactor_expansion(f in form(8), k in 1usize..4, seed in any::<u64>()) {
        let d = f.degree();
        let i = (seed as usize) % (d / 2 + 1);
        let t = ToeplitzMatrix::build(&f, i).unwrap();
        prop_assume!(k <= t.min_dim());
        let rows = (0..t.nrows()).combinations(k).nth((seed as usize) % 7).unwrap_or_else(|| (0..k).collect());
        let cols = (0..t.ncols()).combinations(k).nth((seed as usize) % 11).unwrap_or_else(|| (0..k).collect());
        let sub: Vec<Vec<Rational>> = rows.iter().map(|&p| cols.iter().map(|&q| t.entry(p, q).clone()).collect()).collect();
        let value = t.minor(&IndexSet::new(rows).unwrap(), &IndexSet::new(cols).unwrap()).unwrap();
        prop_assert_eq!(value, cofactor_det(&sub));
    }

    #[test]
    fn consecutive_minors_translate_to_initial(f in form(10), start in (0usize..4, 0usize..6), k in 1usize..4) {
        let d = f.degree();
        let i = d / 2;
        let t = ToeplitzMatrix::build(&f, i).unwrap();
        prop_assume!(start.0 + k <= t.nrows() && start.1 + k <= t.ncols());
        let rows = IndexSet::run(start.0, k);
        let cols = IndexSet::run(start.1, k);
        let (r0, c0) = translate_to_initial(&rows, &cols).unwrap();
        prop_assert!(r0.first() == Some(0) || c0.first() == Some(0));
        prop_assert_eq!(t.minor(&rows, &cols).unwrap(), t.minor(&r0, &c0).unwrap());
    }

    #[test]
    fn consecutive_minors_move_between_bands(f in form(10), start in (0usize..5, 0usize..8), k in 1usize..4) {
        let d = f.degree();
        prop_assume!(d >= 2);
        let i = d / 2;
        let lower = ToeplitzMatrix::build(&f, i - 1).unwrap();
        let upper = ToeplitzMatrix::build(&f, i).unwrap();
        if start.0 + k <= lower.nrows() && start.1 + k <= lower.ncols() {
            let rows = IndexSet::run(start.0, k);
            let cols = IndexSet::run(start.1, k);
            let (ru, cu) = consecutive_up(&f, i, &rows, &cols).unwrap();
            prop_assert!(is_consecutive(&ru, &cu));
            prop_assert_eq!(lower.minor(&rows, &cols).unwrap(), upper.minor(&ru, &cu).unwrap());
        }
        if k <= i && start.0 + k <= upper.nrows() && start.1 + k <= upper.ncols() {
            let rows = IndexSet::run(start.0, k);
            let cols = IndexSet::run(start.1, k);
            let (rd, cd) = consecutive_down(&f, i, &rows, &cols).unwrap();
            prop_assert_eq!(upper.minor(&rows, &cols).unwrap(), lower.minor(&rd, &cd).unwrap());
        }
    }

    #[test]
    fn jacobi_trudi_equals_tableau_sum(outer in partition(4, 4), inner in partition(3, 3), pt in prop::collection::vec(rational(), 1..=3)) {
        prop_assume!(inner.is_contained_in(&outer));
        let shape = SkewShape::new(outer, inner).unwrap();
        let pt = EvaluationPoint::new(pt).unwrap();
        prop_assert_eq!(jacobi_trudi_eval(&shape, &pt), schur_eval(&shape, &pt));
    }

    #[test]
    fn schur_values_are_positive_at_positive_points(outer in partition(3, 4), inner in partition(2, 2), n in 1usize..4) {
        prop_assume!(inner.is_contained_in(&outer));
        let shape = SkewShape::new(outer, inner).unwrap();
        let pt = EvaluationPoint::new((1..=n as i64).map(|k| Rational::new(k, 3)).collect()).unwrap();
        let value = schur_eval(&shape, &pt);
        // Zero exactly when some column is longer than the number of variables.
        let tall = (0..shape.outer().part(0)).any(|c| (0..shape.num_rows()).filter(|&p| shape.contains(p, c)).count() > n);
        prop_assert_eq!(value.is_zero(), tall);
        prop_assert!(!value.is_negative());
    }

    #[test]
    fn lr_expansion_identity(seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(4..=9);
        let i = rng.gen_range(1..=d / 2);
        let r = rng.gen_range(0..=i);
        let a = rng.gen_range(0..=r);
        let coeffs = (0..=d).map(|k| {
            if k < a { Rational::zero() } else if k == a { Rational::new(rng.gen_range(1..=7), 1) } else { Rational::new(rng.gen_range(-7..=7), rng.gen_range(1..=3)) }
        }).collect();
        let f = BivariateForm::new(coeffs).unwrap();
        let rows = IndexSet::random(&mut rng, i + 1, r + 1);
        let cols = IndexSet::random(&mut rng, d - i + 1, r + 1);
        let e = expand_minor(&f, i, &rows, &cols).unwrap();
        let direct = ToeplitzMatrix::build(&f, i).unwrap().minor(&rows, &cols).unwrap();
        prop_assert_eq!(&e.lhs, &direct);
        prop_assert!(e.bounds_hold);
        for w in e.terms.windows(2) {
            prop_assert!(w[0].alpha > w[1].alpha || (w[0].alpha == w[1].alpha && w[0].k < w[1].k));
        }
    }

    #[test]
    fn alpha_formulas_agree(ks in prop::collection::btree_set(0usize..10, 1..=4), i in 0usize..6, a in 0usize..3) {
        let k = IndexSet::new(ks.into_iter().collect()).unwrap();
        let r = k.len() - 1;
        prop_assume!(r <= i && a <= r);
        let nu = partition_from_column_set(&k, a).unwrap();
        let alpha = alpha_statistic(&k, i, r);
        prop_assert_eq!(alpha_of_partition(&nu, i, a, r), alpha);
        if let Some(tail) = alpha_tail_form(&nu, i, a, r) {
            prop_assert_eq!(tail, alpha);
        }
    }

    #[test]
    fn path_enumeration_matches_lgv(d in 2usize..=8, seed in any::<u64>()) {
        let r = (seed as usize) % (d / 2 + 1);
        let all: Vec<Vec<usize>> = (0..=d - r).combinations(r + 1).collect();
        let k = IndexSet::new(all[(seed as usize / 7) % all.len()].clone()).unwrap();
        let p = path_minor(&k, r, d).unwrap();
        prop_assert_eq!(&p, &path_minor_lgv(&k, r, d).unwrap());
        prop_assert!(p.is_homogeneous_of_degree(((r + 1) * (d - 2 * r)) as u32));
        prop_assert!(p.terms().all(|(_, c)| c.is_positive()));
    }

    #[test]
    fn forms_round_trip_through_json(f in form(8)) {
        let text = serde_json::to_string(&f).unwrap();
        let back: BivariateForm = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn polynomials_round_trip_through_json(f in form(5)) {
        let p: SparsePolynomial = f.to_polynomial(tnn_core::Var::X(1), tnn_core::Var::Y(1));
        let text = serde_json::to_string(&p).unwrap();
        let back: SparsePolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn index_sets_round_trip_through_text(ks in prop::collection::btree_set(0usize..30, 0..6)) {
        let k = IndexSet::new(ks.into_iter().collect()).unwrap();
        prop_assert_eq!(k.to_string().parse::<IndexSet>().unwrap(), k);
    }

    #[test]
    fn deformation_composes(f in form(6), t in 1i64..5) {
        // G_t then G_0 is G_t; G_0 is the identity.
        let t = Rational::new(1, t + 1);
        let g = f.substitute_linear(&t);
        prop_assert_eq!(g.substitute_linear(&Rational::zero()), g);
        prop_assert_eq!(f.substitute_linear(&Rational::zero()), f);
    }
}
