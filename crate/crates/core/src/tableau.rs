//! Partitions, skew shapes, semistandard tableaux and Littlewood–Richardson
//! tableaux.
//!
//! Rows and entries are indexed from 0: a tableau with entries below `n`
//! uses the alphabet `{0, …, n-1}`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// kept for display but ignored by comparisons.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        contract!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "{parts:?} is not weakly decreasing"
        );
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of stored parts, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Part `p`, or 0 beyond the stored length.
    pub fn part(&self, p: usize) -> usize {
        self.0.get(p).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// Pads with zeros (or trims trailing zeros) to exactly `n` parts.
    pub fn padded(&self, n: usize) -> Result<Self> {
        contract!(
            self.length() <= n,
            "{self} has more than {n} nonzero parts"
        );
        Ok(Partition((0..n).map(|p| self.part(p)).collect()))
    }

    /// `μ ⊆ λ`: every part of `self` is at most the matching part of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        (0..self.len().max(outer.len())).all(|p| self.part(p) <= outer.part(p))
    }

    /// Adds `a` to each stored part (`μ + a` keeps the stored length).
    pub fn add_constant(&self, a: usize) -> Self {
        Partition(self.0.iter().map(|&p| p + a).collect())
    }

    /// The conjugate partition (columns become rows).
    pub fn conjugate(&self) -> Self {
        let n = self.part(0);
        Partition((0..n).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    fn trimmed(&self) -> &[usize] {
        let n = self.0.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1);
        &self.0[..n]
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Partition::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"7,7,6"`, optionally wrapped in parentheses; `""` is empty.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Every partition of `n` with no zero parts, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The skew diagram `λ/μ`; row `p` holds the columns `μ_p..λ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Pads both partitions to a common length.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        contract!(
            inner.is_contained_in(&outer),
            "{inner} is not contained in {outer}"
        );
        let n = outer.len().max(inner.len());
        let outer = Partition((0..n).map(|p| outer.part(p)).collect());
        let inner = Partition((0..n).map(|p| inner.part(p)).collect());
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape::new(shape, Partition::empty()).expect("the empty partition fits")
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_len(&self, p: usize) -> usize {
        self.outer.part(p) - self.inner.part(p)
    }

    pub fn num_boxes(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Whether `(p, col)` is a box of the diagram.
    pub fn contains(&self, p: usize, col: usize) -> bool {
        p < self.num_rows() && self.inner.part(p) <= col && col < self.outer.part(p)
    }

    /// Boxes in row-major order.
    fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|p| (self.inner.part(p)..self.outer.part(p)).map(move |c| (p, c)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        contract!(
            rows.len() == shape.num_rows()
                && rows.iter().enumerate().all(|(p, r)| r.len() == shape.row_len(p)),
            "filling does not match the shape {shape}"
        );
        Ok(Tableau { shape, rows })
    }

    /// Entry in row `p` at absolute column `col`.
    pub fn entry(&self, p: usize, col: usize) -> Option<usize> {
        if self.shape.contains(p, col) {
            Some(self.rows[p][col - self.shape.inner.part(p)])
        } else {
            None
        }
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.shape.num_rows()).all(|p| {
            (self.shape.inner.part(p)..self.shape.outer.part(p)).all(|c| {
                match (self.entry(p - 1, c), self.entry(p, c)) {
                    (Some(above), Some(here)) => above < here,
                    _ => true,
                }
            })
        });
        rows_ok && cols_ok
    }

    /// Bottom row first, each row left to right.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `content[v]` is the number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() <= v {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
        }
        counts
    }

    /// Exponent vector of the monomial `x^T` over `n` variables.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = self.content();
        w.resize(n.max(w.len()), 0);
        w
    }

    /// Text picture of the skew diagram: `.` marks removed boxes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for p in 0..self.shape.num_rows() {
            let mut cells = (0..self.shape.outer.part(p)).map(|c| match self.entry(p, c) {
                Some(v) => v.to_string(),
                None => ".".to_string(),
            });
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Every reversed prefix of `word` has at least as many `k`s as `k+1`s.
pub fn is_reverse_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word.iter().rev() {
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        if v > 0 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Lazy enumeration of semistandard tableaux of a skew shape with entries in
/// `{0, …, max_entry-1}`, in lexicographic order of the row-major filling.
pub struct SsytIter {
    shape: SkewShape,
    boxes: Vec<(usize, usize)>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    max_entry: usize,
    values: Vec<usize>,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(shape: &SkewShape, max_entry: usize) -> Self {
        let boxes = shape.boxes();
        let position = |p: usize, c: usize| boxes.iter().position(|&b| b == (p, c));
        let left = boxes
            .iter()
            .map(|&(p, c)| if c > 0 && shape.contains(p, c - 1) { position(p, c - 1) } else { None })
            .collect();
        let above = boxes
            .iter()
            .map(|&(p, c)| if p > 0 && shape.contains(p - 1, c) { position(p - 1, c) } else { None })
            .collect();
        let n = boxes.len();
        SsytIter {
            shape: shape.clone(),
            boxes,
            left,
            above,
            max_entry,
            values: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn lower_bound(&self, k: usize) -> usize {
        let from_left = self.left[k].map_or(0, |j| self.values[j]);
        let from_above = self.above[k].map_or(0, |j| self.values[j] + 1);
        from_left.max(from_above)
    }

    /// Fills positions from `pos` on, first bumping `pos` if `bump`.
    fn fill(&mut self, mut pos: isize, mut bump: bool) -> bool {
        let n = self.boxes.len() as isize;
        loop {
            if pos == n {
                return true;
            }
            if pos < 0 {
                return false;
            }
            let k = pos as usize;
            let candidate = if bump { self.values[k] + 1 } else { self.lower_bound(k) };
            if candidate < self.max_entry {
                self.values[k] = candidate;
                pos += 1;
                bump = false;
            } else {
                pos -= 1;
                bump = true;
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.shape.num_rows()];
        for (&(p, _), &v) in self.boxes.iter().zip(&self.values) {
            rows[p].push(v);
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.fill(self.boxes.len() as isize - 1, true)
        } else {
            self.started = true;
            self.fill(0, false)
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Semistandard tableaux of `shape` with entries below `max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> SsytIter {
    SsytIter::new(shape, max_entry)
}

/// Littlewood–Richardson tableaux of `shape`: semistandard fillings whose
/// row word is a reverse lattice word. Sorted lexicographically by the
/// row-major filling.
pub fn enumerate_lr_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    // Rows are filled right to left, which is exactly the order in which the
    // reversed row word reads them, so the lattice condition can be checked
    // box by box. An entry in row p never exceeds p.
    struct Search<'a> {
        shape: &'a SkewShape,
        rows: Vec<Vec<usize>>,
        counts: Vec<usize>,
        out: Vec<Tableau>,
    }

    impl Search<'_> {
        fn go(&mut self, p: usize, col: usize) {
            let shape = self.shape;
            if p == shape.num_rows() {
                self.out.push(Tableau {
                    shape: shape.clone(),
                    rows: self.rows.clone(),
                });
                return;
            }
            let lo = shape.inner.part(p);
            if col <= lo {
                // Row finished (or empty); move to the next row from its right end.
                let next = p + 1;
                self.go(next, shape.outer.part(next));
                return;
            }
            let c = col - 1;
            let k = c - lo;
            // Weakly increasing to the right: bounded by the right neighbour.
            let upper = if col < shape.outer.part(p) { self.rows[p][k + 1] } else { p };
            let upper = upper.min(p);
            let lower = match (p > 0).then(|| shape.contains(p - 1, c)) {
                Some(true) => self.rows[p - 1][c - shape.inner.part(p - 1)] + 1,
                _ => 0,
            };
            for v in lower..=upper {
                let count = |u: usize| self.counts.get(u).copied().unwrap_or(0);
                if v > 0 && count(v) + 1 > count(v - 1) {
                    continue;
                }
                if self.counts.len() <= v {
                    self.counts.resize(v + 1, 0);
                }
                self.counts[v] += 1;
                self.rows[p][k] = v;
                self.go(p, c);
                self.counts[v] -= 1;
            }
        }
    }

    let mut search = Search {
        shape,
        rows: (0..shape.num_rows()).map(|p| vec![0; shape.row_len(p)]).collect(),
        counts: Vec::new(),
        out: Vec::new(),
    };
    if shape.num_rows() == 0 {
        return vec![Tableau {
            shape: shape.clone(),
            rows: Vec::new(),
        }];
    }
    search.go(0, shape.outer.part(0));
    search.out.sort_by_key(|t| t.rows.concat());
    search.out
}

/// Content of an LR tableau as a partition with `parts` entries.
pub fn content_partition(t: &Tableau, parts: usize) -> Result<Partition> {
    let mut c = t.content();
    contract!(c.len() <= parts, "content {c:?} has more than {parts} parts");
    c.resize(parts, 0);
    Partition::new(c)
}

/// The Littlewood–Richardson coefficient `c^λ_(μ,ν)`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> Result<usize> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    Ok(enumerate_lr_tableaux(&shape)
        .iter()
        .filter(|t| Partition(t.content()) == *content)
        .count())
}

/// The LR expansion of `s_(λ/μ)` as `(ν, c^λ_(μ,ν))` pairs, each `ν` padded
/// to the number of rows of the shape, sorted by `ν` descending.
pub fn lr_expansion(shape: &SkewShape) -> Vec<(Partition, usize)> {
    let n = shape.num_rows();
    let mut counts: std::collections::BTreeMap<Partition, usize> = Default::default();
    for t in enumerate_lr_tableaux(shape) {
        let nu = content_partition(&t, n).expect("LR contents fit the row count");
        *counts.entry(nu).or_default() += 1;
    }
    counts.into_iter().rev().collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| super::partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(super::partitions_of(3)[1].parts(), &[2, 1]);
    }

    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(part(outer), part(inner)).unwrap()
    }

    /// Every filling with entries below n, filtered by the predicate.
    fn brute_force(shape: &SkewShape, n: usize) -> Vec<Tableau> {
        let boxes = shape.boxes();
        (0..boxes.len())
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(|vals| {
                let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
                for (&(p, _), v) in boxes.iter().zip(vals) {
                    rows[p].push(v);
                }
                Tableau::new(shape.clone(), rows).unwrap()
            })
            .filter(Tableau::is_semistandard)
            .collect()
    }

    #[test]
    fn partitions_compare_with_padding() {
        assert_eq!(part(&[4, 1, 0]), part(&[4, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("7,7,6".parse::<Partition>().unwrap(), part(&[7, 7, 6]));
        assert_eq!(part(&[4, 1]).padded(3).unwrap().parts(), &[4, 1, 0]);
        assert!(part(&[1, 1]).is_contained_in(&part(&[2, 1, 1])));
        assert!(!part(&[3]).is_contained_in(&part(&[2, 2])));
        assert!(SkewShape::new(part(&[2]), part(&[3])).is_err());
        assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
        assert_eq!(part(&[]).conjugate(), part(&[]));
    }

    #[test]
    fn small_ssyt_counts() {
        assert_eq!(enumerate_ssyt(&skew(&[1], &[]), 3).count(), 3);
        assert_eq!(enumerate_ssyt(&skew(&[2, 1], &[]), 3).count(), 8);
        let empty: Vec<Tableau> = enumerate_ssyt(&skew(&[], &[]), 2).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(enumerate_ssyt(&skew(&[2, 2], &[2, 2]), 2).count(), 1);
        // Three rows cannot be filled strictly from two letters.
        assert_eq!(enumerate_ssyt(&skew(&[1, 1, 1], &[]), 2).count(), 0);
    }

    #[test]
    fn ssyt_match_brute_force_in_order() {
        let shapes = [
            skew(&[2, 1], &[]),
            skew(&[3, 2], &[1]),
            skew(&[2, 2, 1], &[1, 1]),
            skew(&[3, 1, 1], &[2]),
            skew(&[2, 2], &[]),
        ];
        for shape in &shapes {
            for n in 1..=3 {
                let fast: Vec<Tableau> = enumerate_ssyt(shape, n).collect();
                let mut slow = brute_force(shape, n);
                slow.sort_by_key(|t| t.rows.concat());
                assert_eq!(fast, slow, "shape {shape}, n = {n}");
            }
        }
    }

    #[test]
    fn row_words() {
        let t = Tableau::new(skew(&[3], &[]), vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(t.row_word(), vec![0, 1, 2]);
        let t = Tableau::new(skew(&[1, 1, 1], &[]), vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(t.row_word(), vec![2, 1, 0]);
    }

    #[test]
    fn lattice_words() {
        assert!(!is_reverse_lattice_word(&[0, 0, 1]));
        assert!(is_reverse_lattice_word(&[1, 0, 0]));
        assert!(is_reverse_lattice_word(&[]));
        assert!(is_reverse_lattice_word(&[2, 1, 0, 1, 0, 0]));
        assert!(!is_reverse_lattice_word(&[1, 2, 0]));
    }

    #[test]
    fn straight_shape_has_one_lr_tableau() {
        let shape = skew(&[3, 2, 2], &[]);
        let lr = enumerate_lr_tableaux(&shape);
        assert_eq!(lr.len(), 1);
        assert_eq!(lr[0].rows, vec![vec![0, 0, 0], vec![1, 1], vec![2, 2]]);
        assert_eq!(Partition(lr[0].content()), part(&[3, 2, 2]));
    }

    #[test]
    fn small_skew_lr() {
        let lr = enumerate_lr_tableaux(&skew(&[2, 1], &[1]));
        let contents: Vec<Partition> = lr.iter().map(|t| Partition(t.content())).collect();
        assert_eq!(contents, vec![part(&[2]), part(&[1, 1])]);
    }

    #[test]
    fn lr_matches_filter_oracle() {
        let shapes = [
            skew(&[2, 1], &[1]),
            skew(&[3, 2, 1], &[2, 1]),
            skew(&[3, 3, 2], &[2, 1]),
            skew(&[4, 2, 2], &[2, 1]),
            skew(&[2, 2, 1], &[1]),
        ];
        for shape in &shapes {
            let rows = shape.num_rows();
            let mut oracle: Vec<Tableau> = brute_force(shape, rows)
                .into_iter()
                .filter(|t| is_reverse_lattice_word(&t.row_word()))
                .collect();
            oracle.sort_by_key(|t| t.rows.concat());
            assert_eq!(enumerate_lr_tableaux(shape), oracle, "shape {shape}");
        }
    }

    #[test]
    fn lr_coefficients() {
        // c^(2,2,1)_((1),(2,1,1)) = 1 by direct filtering, and the full
        // expansion of (2,2,1)/(1) is s_(2,2) + s_(2,1,1).
        assert_eq!(lr_coefficient(&part(&[2, 2, 1]), &part(&[1]), &part(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(
            lr_expansion(&skew(&[2, 2, 1], &[1])),
            vec![(part(&[2, 2, 0]), 1), (part(&[2, 1, 1]), 1)]
        );
        assert_eq!(lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])).unwrap(), 2);
        assert_eq!(lr_coefficient(&part(&[3, 1]), &part(&[]), &part(&[3, 1])).unwrap(), 1);
        assert!(lr_coefficient(&part(&[1]), &part(&[2]), &part(&[])).is_err());
    }

    #[test]
    fn nine_degree_example_tableaux() {
        let shape = skew(&[7, 7, 6], &[5, 2, 1]);
        let lr = enumerate_lr_tableaux(&shape);
        let contents: Vec<Partition> = lr.iter().map(|t| Partition(t.content())).collect();
        let mut sorted = contents.clone();
        sorted.sort();
        assert_eq!(sorted, vec![part(&[5, 5, 2]), part(&[6, 4, 2]), part(&[6, 5, 1])]);
        let all: Vec<Tableau> = enumerate_ssyt(&shape, 3).collect();
        for t in &lr {
            assert!(t.is_semistandard());
            assert!(is_reverse_lattice_word(&t.row_word()));
            assert!(all.contains(t));
        }
    }

    #[test]
    fn render_marks_removed_boxes() {
        let t = Tableau::new(skew(&[2, 1], &[1]), vec![vec![0], vec![1]]).unwrap();
        assert_eq!(t.render(), ". 0\n1\n");
    }
}
