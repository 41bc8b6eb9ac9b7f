//! Weighted NE lattice paths and mixed Hessian determinants.
//!
//! Sources sit on the antidiagonal `x + y = 0` at `A_k = (-k, k)`; sinks sit
//! on `x + y = d - 2r` at `B_j = (-j, d - 2r + j)`. A step leaving the
//! diagonal `x + y = z - 1` is weighted `X_z` when it goes East and `Y_z`
//! when it goes North, so every path has exactly `d - 2r` weighted steps.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::form::BivariateForm;
use crate::linalg::determinant_polynomial;
use crate::poly::{Monomial, SparsePolynomial, Var};
use crate::rational::Rational;
use crate::toeplitz::{sperner_number, IndexSet, ToeplitzMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    North,
    East,
}

/// A lattice path given by its start point and its unit steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Every vertex visited, start and end included.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut v = vec![self.start];
        let (mut x, mut y) = self.start;
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
            v.push((x, y));
        }
        v
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices().last().unwrap()
    }

    /// Product of the edge weights.
    pub fn weight(&self) -> Monomial {
        let mut exps: BTreeMap<Var, u32> = BTreeMap::new();
        for (vertex, step) in self.vertices().iter().zip(&self.steps) {
            let z = (vertex.0 + vertex.1 + 1) as u32;
            let var = match step {
                Step::North => Var::Y(z),
                Step::East => Var::X(z),
            };
            *exps.entry(var).or_default() += 1;
        }
        Monomial::from_exponents(exps)
    }
}

/// Vertex-disjoint paths; path `q` runs from `A_(k_q + r)` to `B_(r + q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathSystem {
    pub paths: Vec<LatticePath>,
}

impl PathSystem {
    pub fn weight(&self) -> Monomial {
        self.paths
            .iter()
            .fold(Monomial::one(), |acc, p| acc.mul(&p.weight()))
    }

    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths
            .iter()
            .flat_map(LatticePath::vertices)
            .all(|v| seen.insert(v))
    }

    /// Text picture: path `q` is drawn with the digit `q`, other lattice
    /// points with `.`; North is up.
    pub fn render(&self) -> String {
        let all: Vec<(i64, i64)> = self.paths.iter().flat_map(LatticePath::vertices).collect();
        if all.is_empty() {
            return String::new();
        }
        let (x0, x1) = all.iter().map(|v| v.0).minmax().into_option().unwrap();
        let (y0, y1) = all.iter().map(|v| v.1).minmax().into_option().unwrap();
        let mut owner: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for (q, p) in self.paths.iter().enumerate() {
            for v in p.vertices() {
                owner.insert(v, q);
            }
        }
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            let line = (x0..=x1)
                .map(|x| owner.get(&(x, y)).map_or(".".to_string(), |q| q.to_string()))
                .join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_column_set(k: &IndexSet, r: usize, d: usize) -> Result<()> {
    contract!(2 * r <= d, "need 2r <= d, got r = {r}, d = {d}");
    contract!(k.len() == r + 1, "column set {k} must have {} elements", r + 1);
    contract!(
        k.last().is_some_and(|x| x <= d - r),
        "column set {k} exceeds {}",
        d - r
    );
    Ok(())
}

/// All paths of `len` steps with exactly `east` East steps, starting at `start`.
fn paths_with_east_steps(start: (i64, i64), len: usize, east: usize) -> Vec<LatticePath> {
    (0..len)
        .combinations(east)
        .map(|e| LatticePath {
            start,
            steps: (0..len)
                .map(|s| if e.contains(&s) { Step::East } else { Step::North })
                .collect(),
        })
        .collect()
}

/// Every vertex-disjoint system from `A_(K+r)` to `B_J`, `J = {r, …, 2r}`.
pub fn enumerate_path_systems(k: &IndexSet, r: usize, d: usize) -> Result<Vec<PathSystem>> {
    check_column_set(k, r, d)?;
    let len = d - 2 * r;
    let candidates: Vec<Vec<LatticePath>> = k
        .as_slice()
        .iter()
        .enumerate()
        .map(|(q, &kq)| {
            let src = (kq + r) as i64;
            match kq.checked_sub(q) {
                Some(east) if east <= len => paths_with_east_steps((-src, src), len, east),
                _ => Vec::new(),
            }
        })
        .collect();

    fn extend(
        candidates: &[Vec<LatticePath>],
        chosen: &mut Vec<LatticePath>,
        used: &mut HashSet<(i64, i64)>,
        out: &mut Vec<PathSystem>,
    ) {
        let q = chosen.len();
        if q == candidates.len() {
            out.push(PathSystem {
                paths: chosen.clone(),
            });
            return;
        }
        for path in &candidates[q] {
            let verts = path.vertices();
            if verts.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(verts.iter().copied());
            chosen.push(path.clone());
            extend(candidates, chosen, used, out);
            chosen.pop();
            for v in &verts {
                used.remove(v);
            }
        }
    }

    let mut out = Vec::new();
    extend(&candidates, &mut Vec::new(), &mut HashSet::new(), &mut out);
    Ok(out)
}

/// `Δ_((K+r)J)(W_(d-2r))` as the sum of path-system weights.
pub fn path_minor(k: &IndexSet, r: usize, d: usize) -> Result<SparsePolynomial> {
    let systems = enumerate_path_systems(k, r, d)?;
    Ok(SparsePolynomial::from_terms(
        systems.iter().map(|s| (s.weight(), Rational::one())),
    ))
}

/// Generating polynomial of single paths from `A_source` to `B_sink` with
/// `len` steps: the sum over `(source - sink)`-subsets `S` of the steps of
/// `Π_(z∈S) X_z · Π_(z∉S) Y_z`.
pub fn single_path_polynomial(source: usize, sink: usize, len: usize) -> SparsePolynomial {
    let Some(east) = source.checked_sub(sink).filter(|&e| e <= len) else {
        return SparsePolynomial::zero();
    };
    SparsePolynomial::from_terms((1..=len as u32).combinations(east).map(|s| {
        let exps = (1..=len as u32).map(|z| {
            if s.contains(&z) {
                (Var::X(z), 1)
            } else {
                (Var::Y(z), 1)
            }
        });
        (Monomial::from_exponents(exps), Rational::one())
    }))
}

/// The same minor as a determinant of single-path polynomials.
pub fn path_minor_lgv(k: &IndexSet, r: usize, d: usize) -> Result<SparsePolynomial> {
    check_column_set(k, r, d)?;
    let len = d - 2 * r;
    let m: Vec<Vec<SparsePolynomial>> = k
        .as_slice()
        .iter()
        .map(|&kp| {
            (0..=r)
                .map(|q| single_path_polynomial(kp + r, r + q, len))
                .collect()
        })
        .collect();
    determinant_polynomial(&m)
}

/// `P_r · MHess_r(F)` computed as `d! · (φ_d(F) · W_(d-2r))_(IJ)` with
/// `I = {0, …, r}` and `J = {r, …, 2r}`.
///
/// Only rows `k ≤ d` of the path matrix are needed: a nonzero entry
/// `W[k][j]` needs `k - j ≤ d - 2r` and `j ≤ 2r`.
pub fn mixed_hessian_permuted(form: &BivariateForm, r: usize) -> Result<Vec<Vec<SparsePolynomial>>> {
    let s = sperner_number(form)?;
    contract!(r < s, "r = {r} must be below the Sperner number {s}");
    let d = form.degree();
    let len = d - 2 * r;
    let dfact = Rational::factorial(d as u32);
    Ok((0..=r)
        .map(|p| {
            (0..=r)
                .map(|q| {
                    let j = r + q;
                    let mut entry = SparsePolynomial::zero();
                    for k in j..=(j + len).min(p + d) {
                        let c = form.coeff(k as i64 - p as i64);
                        if !c.is_zero() {
                            entry = entry + single_path_polynomial(k, j, len).scale(&c);
                        }
                    }
                    entry.scale(&dfact)
                })
                .collect()
        })
        .collect())
}

/// The unpermuted mixed Hessian from the operator description: entry
/// `(a, b)` is `(x^a y^(r-a) · x^b y^(r-b) · Π_z (X_z x + Y_z y)) ∘ F`.
pub fn mixed_hessian_operator(form: &BivariateForm, r: usize) -> Result<Vec<Vec<SparsePolynomial>>> {
    let d = form.degree();
    contract!(2 * r <= d, "need 2r <= d, got r = {r}, d = {d}");
    let len = d - 2 * r;
    let dfact = Rational::factorial(d as u32);
    // Expand the product of linear forms word by word; a word with e East
    // letters contributes x^e y^(len - e).
    let words: Vec<(usize, Monomial)> = (0..len)
        .map(|_| [Step::East, Step::North])
        .multi_cartesian_product()
        .map(|w| {
            let east = w.iter().filter(|&&s| s == Step::East).count();
            let m = Monomial::from_exponents(w.iter().enumerate().map(|(z, s)| {
                let z = z as u32 + 1;
                match s {
                    Step::East => (Var::X(z), 1),
                    Step::North => (Var::Y(z), 1),
                }
            }));
            (east, m)
        })
        .collect();
    Ok((0..=r)
        .map(|a| {
            (0..=r)
                .map(|b| {
                    // x^α y^β ∘ F with α + β = d is d! · c_α.
                    SparsePolynomial::from_terms(
                        words
                            .iter()
                            .map(|(e, m)| (m.clone(), &dfact * &form.coeff((a + b + e) as i64))),
                    )
                })
                .collect()
        })
        .collect())
}

/// One summand `Δ_K(φ^r_d(F)) · Δ_((K+r)J)(W_(d-2r))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerTerm {
    pub k: IndexSet,
    pub minor: Rational,
    pub path_minor: SparsePolynomial,
}

/// The summands of the Plücker expansion, in lexicographic order of `K`.
pub fn plucker_terms(form: &BivariateForm, r: usize) -> Result<Vec<PluckerTerm>> {
    let d = form.degree();
    contract!(r <= d / 2, "r = {r} exceeds d/2");
    let band = ToeplitzMatrix::build(form, r)?;
    band.maximal_column_sets()
        .into_iter()
        .map(|k| {
            Ok(PluckerTerm {
                minor: band.maximal_minor(&k)?,
                path_minor: path_minor(&k, r, d)?,
                k,
            })
        })
        .collect()
}

/// `(d!)^(r+1) · Σ_K Δ_K(φ^r_d(F)) · Δ_((K+r)J)(W_(d-2r))`.
pub fn plucker_determinant(form: &BivariateForm, r: usize) -> Result<SparsePolynomial> {
    let scale = Rational::factorial(form.degree() as u32).pow(r as u32 + 1);
    let mut total = SparsePolynomial::zero();
    for term in plucker_terms(form, r)? {
        if !term.minor.is_zero() {
            total = total + term.path_minor.scale(&term.minor);
        }
    }
    Ok(total.scale(&scale))
}

/// Sets `Y_1 = … = Y_(i-r) = t` and every other `X_z`, `Y_z` to 1.
pub fn specialize(p: &SparsePolynomial, i: usize, r: usize) -> SparsePolynomial {
    let t = SparsePolynomial::var(Var::T);
    let one = SparsePolynomial::one();
    let assignment: BTreeMap<Var, SparsePolynomial> = p
        .variables()
        .into_iter()
        .filter(|v| *v != Var::T)
        .map(|v| {
            let value = match v {
                Var::Y(z) if (z as usize) <= i.saturating_sub(r) => t.clone(),
                _ => one.clone(),
            };
            (v, value)
        })
        .collect();
    p.substitute(&assignment)
}

/// `Δ^i_((K+r)J)(t)`.
pub fn specialize_path_minor(k: &IndexSet, r: usize, i: usize, d: usize) -> Result<SparsePolynomial> {
    contract!(r <= i && i <= d / 2, "need r <= i <= d/2, got r = {r}, i = {i}, d = {d}");
    Ok(specialize(&path_minor(k, r, d)?, i, r))
}

/// `M_j^F(t) = (d!)^(j+1) · Σ_K Δ_K(φ^j_d(F)) · Δ^i_((K+j)J)(t)`.
pub fn m_polynomial(form: &BivariateForm, j: usize, i: usize) -> Result<SparsePolynomial> {
    let d = form.degree();
    let s = sperner_number(form)?;
    contract!(
        i <= d / 2 && j <= i && j < s,
        "need j <= min(i, s - 1) and i <= d/2, got j = {j}, i = {i}, s = {s}, d = {d}"
    );
    Ok(specialize(&plucker_determinant(form, j)?, i, j))
}
