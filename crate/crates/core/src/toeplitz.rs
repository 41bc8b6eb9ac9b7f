//! Toeplitz matrices `φ^i_d(F)` and exact positivity decisions.
//!
//! `φ^i_d(F)` has `i + 1` rows and `d - i + 1` columns with entry
//! `(p, q) = c_(i+q-p)`. Total positivity is decided through consecutive
//! minors (Fekete's criterion); total nonnegativity has no such shortcut and
//! is decided by enumerating every minor.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::form::BivariateForm;
use crate::linalg::{determinant_exact, rank_exact, submatrix};
use crate::rational::Rational;

/// A strictly increasing set of row or column indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        contract!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "index set {indices:?} is not strictly increasing"
        );
        Ok(IndexSet(indices))
    }

    /// `{start, start + 1, …, start + len - 1}`.
    pub fn run(start: usize, len: usize) -> Self {
        IndexSet((start..start + len).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Adds `by` to every index; fails if an index would become negative.
    pub fn shift(&self, by: i64) -> Result<Self> {
        let shifted = self
            .0
            .iter()
            .map(|&k| {
                let v = k as i64 + by;
                if v < 0 {
                    Err(Error::Contract(format!("shifting {self} by {by} leaves the index range")))
                } else {
                    Ok(v as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IndexSet(shifted))
    }

    /// A uniformly random `k`-subset of `0..n`.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Self {
        let mut v = rand::seq::index::sample(rng, n, k).into_vec();
        v.sort_unstable();
        IndexSet(v)
    }

    /// True for a run of consecutive integers (the empty set counts).
    pub fn is_run(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        IndexSet::new(v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl std::str::FromStr for IndexSet {
    type Err = Error;

    /// Parses `"0,1,3"`, optionally wrapped in braces.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        if inner.trim().is_empty() {
            return Ok(IndexSet(Vec::new()));
        }
        let v = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexSet::new(v)
    }
}

/// Both index sets are runs of consecutive integers.
pub fn is_consecutive(rows: &IndexSet, cols: &IndexSet) -> bool {
    rows.is_run() && cols.is_run()
}

/// Consecutive, and touching the first row or the first column.
pub fn is_initial(rows: &IndexSet, cols: &IndexSet) -> bool {
    is_consecutive(rows, cols) && (rows.contains(0) || cols.contains(0))
}

/// Shifts a consecutive pair by `t = min(a_0, b_0)` so that it becomes
/// initial. The entries are unchanged because the matrix is Toeplitz.
pub fn translate_to_initial(rows: &IndexSet, cols: &IndexSet) -> Result<(IndexSet, IndexSet)> {
    contract!(
        is_consecutive(rows, cols),
        "{rows} x {cols} is not a consecutive submatrix"
    );
    contract!(
        rows.len() == cols.len(),
        "row and column sets differ in size"
    );
    let t = match (rows.first(), cols.first()) {
        (Some(a), Some(b)) => a.min(b) as i64,
        _ => 0,
    };
    Ok((rows.shift(-t)?, cols.shift(-t)?))
}

/// A minor identified by its index sets, with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToeplitzMatrix {
    pub i: usize,
    pub d: usize,
    pub rows: Vec<Vec<Rational>>,
}

impl ToeplitzMatrix {
    /// `φ^i_d(F)`.
    pub fn build(form: &BivariateForm, i: usize) -> Result<Self> {
        let d = form.degree();
        contract!(i <= d, "band index {i} outside 0..={d}");
        let rows = (0..=i)
            .map(|p| {
                (0..=d - i)
                    .map(|q| form.coeffs()[i + q - p].clone())
                    .collect()
            })
            .collect();
        Ok(ToeplitzMatrix { i, d, rows })
    }

    pub fn nrows(&self) -> usize {
        self.i + 1
    }

    pub fn ncols(&self) -> usize {
        self.d - self.i + 1
    }

    pub fn min_dim(&self) -> usize {
        self.nrows().min(self.ncols())
    }

    pub fn entry(&self, p: usize, q: usize) -> &Rational {
        &self.rows[p][q]
    }

    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Vec<Vec<Rational>>> {
        self.check_indices(rows, cols)?;
        Ok(submatrix(&self.rows, rows.as_slice(), cols.as_slice()))
    }

    fn check_indices(&self, rows: &IndexSet, cols: &IndexSet) -> Result<()> {
        contract!(
            rows.len() == cols.len(),
            "minor needs equally many rows and columns, got {} and {}",
            rows.len(),
            cols.len()
        );
        contract!(
            rows.last().is_none_or(|r| r < self.nrows()),
            "row set {rows} out of range for {} rows",
            self.nrows()
        );
        contract!(
            cols.last().is_none_or(|c| c < self.ncols()),
            "column set {cols} out of range for {} columns",
            self.ncols()
        );
        Ok(())
    }

    /// `Δ_IJ(φ^i_d(F))`.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
        determinant_exact(&self.submatrix(rows, cols)?)
    }

    /// The maximal minor `Δ_K` using every row and the columns `K`.
    pub fn maximal_minor(&self, cols: &IndexSet) -> Result<Rational> {
        self.minor(&IndexSet::run(0, self.nrows()), cols)
    }

    /// All column sets of maximal minors, in lexicographic order.
    pub fn maximal_column_sets(&self) -> Vec<IndexSet> {
        (0..self.ncols())
            .combinations(self.nrows())
            .map(IndexSet)
            .collect()
    }

    /// Every consecutive minor of size at most `max_size`, ordered by size,
    /// then first row, then first column.
    pub fn consecutive_minors(&self, max_size: usize) -> Vec<MinorWitness> {
        let mut out = Vec::new();
        for k in 1..=max_size.min(self.min_dim()) {
            for a in 0..=self.nrows() - k {
                for b in 0..=self.ncols() - k {
                    let rows = IndexSet::run(a, k);
                    let cols = IndexSet::run(b, k);
                    let value = self.minor(&rows, &cols).expect("indices in range");
                    out.push(MinorWitness { rows, cols, value });
                }
            }
        }
        out
    }

    /// Every minor of size at most `max_size`, in the same ordering scheme
    /// with lexicographic index sets.
    fn all_minors(&self, max_size: usize) -> impl Iterator<Item = MinorWitness> + '_ {
        (1..=max_size.min(self.min_dim())).flat_map(move |k| {
            (0..self.nrows())
                .combinations(k)
                .cartesian_product((0..self.ncols()).combinations(k).collect::<Vec<_>>())
                .map(move |(r, c)| {
                    let rows = IndexSet(r);
                    let cols = IndexSet(c);
                    let value = self.minor(&rows, &cols).expect("indices in range");
                    MinorWitness { rows, cols, value }
                })
        })
    }

    /// First consecutive minor of size ≤ `k` that is not positive.
    fn consecutive_tp_failure(&self, k: usize) -> Option<MinorWitness> {
        for size in 1..=k.min(self.min_dim()) {
            for a in 0..=self.nrows() - size {
                for b in 0..=self.ncols() - size {
                    let rows = IndexSet::run(a, size);
                    let cols = IndexSet::run(b, size);
                    let value = self.minor(&rows, &cols).expect("indices in range");
                    if !value.is_positive() {
                        return Some(MinorWitness { rows, cols, value });
                    }
                }
            }
        }
        None
    }

    /// Total positivity by Fekete's criterion: every consecutive minor is
    /// positive.
    pub fn is_totally_positive(&self) -> bool {
        self.consecutive_tp_failure(self.min_dim()).is_none()
    }

    /// Total positivity by checking every minor.
    pub fn is_totally_positive_exhaustive(&self) -> bool {
        self.all_minors(self.min_dim()).all(|m| m.value.is_positive())
    }

    /// `TP_k`: every minor of size at most `k` is positive, decided through
    /// consecutive minors of size at most `k`.
    pub fn is_tp_k(&self, k: usize) -> Result<bool> {
        self.check_order(k)?;
        Ok(self.consecutive_tp_failure(k).is_none())
    }

    /// `TP_k` by checking every minor of size at most `k`.
    pub fn is_tp_k_exhaustive(&self, k: usize) -> Result<bool> {
        self.check_order(k)?;
        Ok(self.all_minors(k).all(|m| m.value.is_positive()))
    }

    fn check_order(&self, k: usize) -> Result<()> {
        contract!(
            (1..=self.min_dim()).contains(&k),
            "order {k} outside 1..={}",
            self.min_dim()
        );
        Ok(())
    }

    /// The first negative minor, or `None` when the matrix is totally
    /// nonnegative.
    pub fn negative_minor(&self) -> Option<MinorWitness> {
        self.all_minors(self.min_dim()).find(|m| m.value.is_negative())
    }

    pub fn is_totally_nonnegative(&self) -> bool {
        self.negative_minor().is_none()
    }

    pub fn rank(&self) -> usize {
        rank_exact(&self.rows).expect("rectangular by construction")
    }
}

impl fmt::Display for ToeplitzMatrix {
    /// Right-aligned grid with one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        for row in &cells {
            let line = row.iter().map(|c| format!("{c:>width$}")).join("  ");
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Maps a consecutive submatrix of `φ^(i-1)` to the equal consecutive
/// submatrix of `φ^i`: shift the rows down, unless the last column of
/// `φ^(i-1)` is involved, in which case shift the columns left.
pub fn consecutive_up(
    form: &BivariateForm,
    i: usize,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<(IndexSet, IndexSet)> {
    let d = form.degree();
    contract!(i >= 1 && i <= d / 2, "band index {i} outside 1..={}", d / 2);
    contract!(
        is_consecutive(rows, cols) && rows.len() == cols.len() && !rows.is_empty(),
        "{rows} x {cols} is not a nonempty consecutive square submatrix"
    );
    contract!(
        rows.last().unwrap() < i && cols.last().unwrap() <= d - i + 1,
        "{rows} x {cols} is out of range for the band {}",
        i - 1
    );
    if cols.contains(d - i + 1) {
        Ok((rows.clone(), cols.shift(-1)?))
    } else {
        Ok((rows.shift(1)?, cols.clone()))
    }
}

/// Maps a consecutive submatrix of `φ^i` of size at most `i` to the equal
/// consecutive submatrix of `φ^(i-1)`.
pub fn consecutive_down(
    form: &BivariateForm,
    i: usize,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<(IndexSet, IndexSet)> {
    let d = form.degree();
    contract!(i >= 1 && i <= d / 2, "band index {i} outside 1..={}", d / 2);
    contract!(
        is_consecutive(rows, cols) && rows.len() == cols.len() && !rows.is_empty(),
        "{rows} x {cols} is not a nonempty consecutive square submatrix"
    );
    contract!(
        rows.len() <= i,
        "size {} exceeds {i}; no matching submatrix one band down",
        rows.len()
    );
    contract!(
        rows.last().unwrap() <= i && cols.last().unwrap() <= d - i,
        "{rows} x {cols} is out of range for the band {i}"
    );
    if rows.contains(i) {
        Ok((rows.shift(-1)?, cols.clone()))
    } else {
        Ok((rows.clone(), cols.shift(1)?))
    }
}

/// `s(F) = max_i rank φ^i_d(F)` over `0 ≤ i ≤ ⌊d/2⌋`.
pub fn sperner_number(form: &BivariateForm) -> Result<usize> {
    contract!(!form.is_zero(), "the Sperner number of the zero form is undefined");
    let d = form.degree();
    Ok((0..=d / 2)
        .map(|i| ToeplitzMatrix::build(form, i).expect("in range").rank())
        .max()
        .unwrap_or(0))
}

/// `φ^j_d(F)` is totally nonnegative for every `0 ≤ j ≤ i`.
pub fn is_strongly_totally_nonnegative(form: &BivariateForm, i: usize) -> Result<bool> {
    let d = form.degree();
    contract!(i <= d / 2, "band index {i} outside 0..={}", d / 2);
    Ok((0..=i).all(|j| {
        ToeplitzMatrix::build(form, j)
            .expect("in range")
            .is_totally_nonnegative()
    }))
}
