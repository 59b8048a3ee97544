//! The [`BinaryMatroid`] value type: rank oracles, minors, duality,
//! simplification, small circuits, connectivity and sums.

mod connectivity;
mod fans;
mod sums;

pub use connectivity::{ConnectivityReport, Property, SeparationReport};
pub use fans::{Fan, FanKind, FanReport, SeparatorClass, SmallSeparator};
pub use sums::{direct_sum, parallel_connection, two_sum};

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::{self, low_mask, Gf2Matrix, MAX_COLS};
use crate::isomin::CanonicalKey;

/// A set of ground-set positions of one matroid, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        SubsetMask(low_mask(n))
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        SubsetMask(idx.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within a ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & low_mask(n))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::ops::BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | o.0)
    }
}

impl std::ops::BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & o.0)
    }
}

impl std::ops::Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !o.0)
    }
}

impl std::ops::BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, o: SubsetMask) {
        self.0 |= o.0;
    }
}

/// Rank data for one subset, see [`BinaryMatroid::rank_profile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub corank: usize,
    pub closure: SubsetMask,
    pub coclosure: SubsetMask,
    pub lambda: usize,
}

/// Which of the two reductions [`BinaryMatroid::si_co`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduce {
    Simplify,
    Cosimplify,
}

/// Whether to enumerate circuits or cocircuits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircuitKind {
    Circuit,
    Cocircuit,
}

/// Result of simplification or cosimplification.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub matroid: BinaryMatroid,
    /// For each original element, the position of its representative in
    /// `matroid`, or `None` for removed loops (coloops when cosimplifying).
    pub retained: Vec<Option<usize>>,
}

/// A binary matroid: distinct labels and a GF(2) representation kept in
/// reduced row-echelon form.
///
/// Label order is part of the value. Two matroids compare equal exactly
/// when their labels agree position by position and the columns define the
/// same labelled matroid.
pub struct BinaryMatroid {
    labels: Vec<String>,
    cols: Vec<u64>,
    rank: usize,
    key: OnceLock<CanonicalKey>,
}

impl Clone for BinaryMatroid {
    fn clone(&self) -> Self {
        BinaryMatroid { labels: self.labels.clone(), cols: self.cols.clone(), rank: self.rank, key: self.key.clone() }
    }
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, o: &Self) -> bool {
        self.labels == o.labels && self.cols == o.cols
    }
}

impl Eq for BinaryMatroid {}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatroid(rank {}, {} elements)", self.rank, self.labels.len())?;
        writeln!(f, "  {}", self.labels.join(" "))?;
        for row in self.rep().to_strings() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl BinaryMatroid {
    /// Builds the matroid of the columns of `m`, labelled in order.
    pub fn from_matrix(labels: Vec<String>, m: &Gf2Matrix) -> Result<Self> {
        if labels.len() != m.n_cols() {
            return Err(Error::Invalid(format!("{} labels for {} columns", labels.len(), m.n_cols())));
        }
        check_labels(&labels)?;
        let (red, piv) = gf2::rref(m);
        let rank = piv.len();
        if rank > 64 {
            return Err(Error::Invalid("rank above 64".into()));
        }
        let top = Gf2Matrix::from_rows(m.n_cols(), red.rows()[..rank].to_vec());
        Ok(BinaryMatroid { labels, cols: top.columns(), rank, key: OnceLock::new() })
    }

    /// Builds the matroid of arbitrary column vectors (each at most 64 bits).
    pub fn from_columns(labels: Vec<String>, cols: &[u64]) -> Result<Self> {
        if labels.len() != cols.len() {
            return Err(Error::Invalid(format!("{} labels for {} columns", labels.len(), cols.len())));
        }
        if cols.len() > MAX_COLS {
            return Err(Error::Invalid(format!("{} elements exceeds {MAX_COLS}", cols.len())));
        }
        let height = cols.iter().map(|c| 64 - c.leading_zeros() as usize).max().unwrap_or(0);
        Self::from_matrix(labels, &Gf2Matrix::from_columns(height, cols))
    }

    /// Convenience constructor from string labels and `0`/`1` rows.
    pub fn from_strs(labels: &[&str], rows: &[&str]) -> Result<Self> {
        let m = if rows.is_empty() { Gf2Matrix::zeros(0, labels.len()) } else { Gf2Matrix::from_strs(rows)? };
        Self::from_matrix(labels.iter().map(|s| s.to_string()).collect(), &m)
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<String>, cols: &[u64]) -> Self {
        let (cols, rank) = reduce_columns(cols);
        BinaryMatroid { labels, cols, rank, key: OnceLock::new() }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank
    }

    /// Column `i` of the reduced representation, as an `r`-bit vector.
    pub fn col(&self, i: usize) -> u64 {
        self.cols[i]
    }

    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// The `r x n` reduced row-echelon representation; its pivot columns form
    /// the lexicographically least basis.
    pub fn rep(&self) -> Gf2Matrix {
        Gf2Matrix::from_columns(self.rank, &self.cols)
    }

    /// Positions of the lexicographically least basis.
    pub fn lex_basis(&self) -> SubsetMask {
        let mut b = SubsetMask::EMPTY;
        let mut next = 0usize;
        for (j, &c) in self.cols.iter().enumerate() {
            if next < self.rank && c == 1 << next {
                b = b.with(j);
                next += 1;
            }
        }
        b
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Mask of the given labels.
    pub fn mask<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        let mut m = SubsetMask::EMPTY;
        for l in labels {
            m = m.with(self.idx(l.as_ref())?);
        }
        Ok(m)
    }

    /// Labels of the elements of a mask, in ground-set order.
    pub fn names(&self, x: SubsetMask) -> Vec<String> {
        x.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Rank of a subset.
    pub fn rank_of(&self, x: SubsetMask) -> usize {
        gf2::rank_of_words(x.iter().map(|i| self.cols[i]))
    }

    /// Corank `r*(X) = |X| + r(E - X) - r(M)`.
    pub fn corank_of(&self, x: SubsetMask) -> usize {
        x.len() + self.rank_of(x.complement(self.len())) - self.rank
    }

    pub fn lambda(&self, x: SubsetMask) -> usize {
        self.rank_of(x) + self.rank_of(x.complement(self.len())) - self.rank
    }

    pub fn is_independent(&self, x: SubsetMask) -> bool {
        self.rank_of(x) == x.len()
    }

    pub fn is_circuit(&self, x: SubsetMask) -> bool {
        !x.is_empty() && self.rank_of(x) == x.len() - 1 && x.iter().all(|i| self.is_independent(x.without(i)))
    }

    pub fn is_cocircuit(&self, x: SubsetMask) -> bool {
        !x.is_empty() && {
            let rest = x.complement(self.len());
            self.rank_of(rest) == self.rank - 1 && x.iter().all(|i| self.rank_of(rest.with(i)) == self.rank)
        }
    }

    pub fn is_basis(&self, x: SubsetMask) -> bool {
        x.len() == self.rank && self.is_independent(x)
    }

    /// `cl(X)`.
    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        let span = Span::of(x.iter().map(|i| self.cols[i]));
        SubsetMask::from_indices((0..self.len()).filter(|&j| x.contains(j) || span.contains(self.cols[j])))
    }

    /// `cl*(X)`: elements `e` with `e` in `X` or `e` a coloop of `M | (E - X)`.
    pub fn coclosure(&self, x: SubsetMask) -> SubsetMask {
        let rest = x.complement(self.len());
        let r = self.rank_of(rest);
        let mut out = x;
        for e in rest.iter() {
            if self.rank_of(rest.without(e)) < r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn rank_profile(&self, x: SubsetMask) -> RankProfile {
        let rank = self.rank_of(x);
        let corank = self.corank_of(x);
        let lambda = self.lambda(x);
        debug_assert_eq!(lambda + x.len(), rank + corank);
        RankProfile { rank, corank, closure: self.closure(x), coclosure: self.coclosure(x), lambda }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.cols[e] == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground().without(e)) < self.rank
    }

    /// Same matroid with the labels permuted into the given order.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<BinaryMatroid> {
        if order.len() != self.len() {
            return Err(Error::Invalid("reorder needs every label exactly once".into()));
        }
        let mut idx = Vec::with_capacity(order.len());
        for l in order {
            let i = self.idx(l.as_ref())?;
            if idx.contains(&i) {
                return Err(Error::Invalid(format!("label {} repeated", l.as_ref())));
            }
            idx.push(i);
        }
        Ok(self.permuted(&idx))
    }

    /// Matroid whose element `k` is element `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> BinaryMatroid {
        let labels = perm.iter().map(|&i| self.labels[i].clone()).collect();
        let cols: Vec<u64> = perm.iter().map(|&i| self.cols[i]).collect();
        Self::from_parts_unchecked(labels, &cols)
    }

    /// Same matroid with new labels (same positions).
    pub fn relabeled(&self, labels: Vec<String>) -> Result<BinaryMatroid> {
        if labels.len() != self.len() {
            return Err(Error::Invalid("relabel needs one label per element".into()));
        }
        check_labels(&labels)?;
        let mut m = self.clone();
        m.labels = labels;
        Ok(m)
    }

    /// Renames one label.
    pub fn rename(&self, from: &str, to: &str) -> Result<BinaryMatroid> {
        let i = self.idx(from)?;
        let mut labels = self.labels.clone();
        labels[i] = to.to_string();
        self.relabeled(labels)
    }

    /// Restriction to `X`, elements kept in ground-set order.
    pub fn restrict(&self, x: SubsetMask) -> BinaryMatroid {
        self.minor(SubsetMask::EMPTY, x.complement(self.len()))
    }

    /// `M / C \ D`.
    ///
    /// # Panics
    /// If `C` and `D` intersect.
    pub fn minor(&self, contract: SubsetMask, delete: SubsetMask) -> BinaryMatroid {
        assert!(!contract.intersects(delete), "contraction and deletion sets must be disjoint");
        let keep = self.ground() - contract - delete;
        let mut span = Span::default();
        for i in contract.iter() {
            span.insert(self.cols[i]);
        }
        let labels: Vec<String> = keep.iter().map(|i| self.labels[i].clone()).collect();
        let cols: Vec<u64> = keep.iter().map(|i| span.reduce(self.cols[i])).collect();
        Self::from_parts_unchecked(labels, &cols)
    }

    pub fn delete(&self, x: SubsetMask) -> BinaryMatroid {
        self.minor(SubsetMask::EMPTY, x)
    }

    pub fn contract(&self, x: SubsetMask) -> BinaryMatroid {
        self.minor(x, SubsetMask::EMPTY)
    }

    pub fn delete_labels<S: AsRef<str>>(&self, x: &[S]) -> Result<BinaryMatroid> {
        Ok(self.delete(self.mask(x)?))
    }

    pub fn contract_labels<S: AsRef<str>>(&self, x: &[S]) -> Result<BinaryMatroid> {
        Ok(self.contract(self.mask(x)?))
    }

    /// The dual matroid on the same labels.
    pub fn dual(&self) -> BinaryMatroid {
        let n = self.len();
        let basis = self.lex_basis();
        let pivot_row: Vec<usize> = {
            let mut v = vec![usize::MAX; n];
            for (k, j) in basis.iter().enumerate() {
                v[j] = k;
            }
            v
        };
        let mut rows = Vec::with_capacity(n - self.rank);
        for y in basis.complement(n).iter() {
            let mut w = 1u64 << y;
            for x in basis.iter() {
                if (self.cols[y] >> pivot_row[x]) & 1 == 1 {
                    w |= 1 << x;
                }
            }
            rows.push(w);
        }
        Self::from_matrix(self.labels.clone(), &Gf2Matrix::from_rows(n, rows)).expect("dual of a valid matroid")
    }

    /// Removes loops and all but the first element of each parallel class
    /// (or, dually, coloops and series classes).
    pub fn si_co(&self, mode: Reduce) -> Reduced {
        match mode {
            Reduce::Simplify => {
                let mut first: HashMap<u64, usize> = HashMap::new();
                let mut keep = Vec::new();
                let mut rep_of = vec![None; self.len()];
                for (j, &c) in self.cols.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let r = *first.entry(c).or_insert_with(|| {
                        keep.push(j);
                        j
                    });
                    rep_of[j] = Some(r);
                }
                let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &j)| (j, k)).collect();
                let retained = rep_of.iter().map(|r| r.map(|j| pos[&j])).collect();
                let matroid = self.restrict(SubsetMask::from_indices(keep));
                Reduced { matroid, retained }
            }
            Reduce::Cosimplify => {
                let r = self.dual().si_co(Reduce::Simplify);
                Reduced { matroid: r.matroid.dual(), retained: r.retained }
            }
        }
    }

    pub fn simplify(&self) -> BinaryMatroid {
        self.si_co(Reduce::Simplify).matroid
    }

    pub fn cosimplify(&self) -> BinaryMatroid {
        self.si_co(Reduce::Cosimplify).matroid
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.cols.iter().all(|&c| c != 0 && seen.insert(c))
    }

    pub fn is_cosimple(&self) -> bool {
        self.dual().is_simple()
    }

    /// All circuits (or cocircuits) with at most `cap` elements, sorted by
    /// size and then by mask.
    pub fn circuits_up_to(&self, cap: usize, kind: CircuitKind) -> Vec<SubsetMask> {
        match kind {
            CircuitKind::Circuit => small_circuits(&self.cols, cap),
            CircuitKind::Cocircuit => small_circuits(&self.dual().cols, cap),
        }
    }

    pub fn triangles(&self) -> Vec<SubsetMask> {
        self.circuits_up_to(3, CircuitKind::Circuit).into_iter().filter(|c| c.len() == 3).collect()
    }

    pub fn triads(&self) -> Vec<SubsetMask> {
        self.circuits_up_to(3, CircuitKind::Cocircuit).into_iter().filter(|c| c.len() == 3).collect()
    }

    /// Single-element extension by a new column, given in the coordinates
    /// of [`BinaryMatroid::col`].
    pub fn extend(&self, label: &str, col: u64) -> Result<BinaryMatroid> {
        if self.index_of(label).is_some() {
            return Err(Error::Invalid(format!("label {label} already present")));
        }
        if self.len() >= MAX_COLS {
            return Err(Error::Invalid("ground set full".into()));
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let mut cols = self.cols.clone();
        cols.push(col & low_mask(self.rank));
        Self::from_columns(labels, &cols)
    }

    /// Single-element coextension: the new element `e` is added to the basis
    /// and `row` (a mask over the current ground set) becomes its fundamental
    /// cocircuit minus `e` relative to the lexicographically least basis
    /// extended by `e`. Basis elements in `row` are ignored.
    pub fn coextend(&self, label: &str, row: SubsetMask) -> Result<BinaryMatroid> {
        if self.index_of(label).is_some() {
            return Err(Error::Invalid(format!("label {label} already present")));
        }
        if self.len() >= MAX_COLS || self.rank >= 64 {
            return Err(Error::Invalid("ground set full".into()));
        }
        let basis = self.lex_basis();
        let bit = 1u64 << self.rank;
        let mut cols: Vec<u64> = self.cols.clone();
        for (j, c) in cols.iter_mut().enumerate() {
            if row.contains(j) && !basis.contains(j) {
                *c |= bit;
            }
        }
        cols.push(bit);
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Self::from_columns(labels, &cols)
    }

    /// Single-element coextension in which `set` together with the new
    /// element is a cocycle (a disjoint union of cocircuits).
    pub fn coextend_cocycle(&self, label: &str, set: SubsetMask) -> Result<BinaryMatroid> {
        let basis = self.lex_basis();
        let units = (set & basis).iter().fold(0u64, |acc, b| acc | self.cols[b]);
        let row = (self.ground() - basis)
            .iter()
            .filter(|&j| set.contains(j) ^ ((self.cols[j] & units).count_ones() % 2 == 1))
            .fold(SubsetMask::EMPTY, |acc, j| acc.with(j));
        self.coextend(label, row)
    }

    /// Cached canonical key of the isomorphism class.
    pub fn canonical_key(&self) -> &CanonicalKey {
        self.key.get_or_init(|| crate::isomin::compute_canonical_key(self))
    }

    /// True when both matroids have the same labels and the identity on
    /// labels is an isomorphism (label order may differ).
    pub fn same_labelled(&self, other: &BinaryMatroid) -> bool {
        match other.reordered(&self.labels) {
            Ok(o) => o == *self,
            Err(_) => false,
        }
    }
}

/// Reduced row-echelon columns (and rank) of an arbitrary column family.
pub(crate) fn reduce_columns(cols: &[u64]) -> (Vec<u64>, usize) {
    gf2::rref_columns(cols)
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_COLS {
        return Err(Error::Invalid(format!("{} elements exceeds {MAX_COLS}", labels.len())));
    }
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::Invalid(format!("bad label {l:?}")));
        }
        if !seen.insert(l) {
            return Err(Error::Invalid(format!("duplicate label {l}")));
        }
    }
    Ok(())
}

/// Linear span of a set of vectors, kept as pivots indexed by leading bit.
#[derive(Clone)]
pub(crate) struct Span {
    piv: [u64; 64],
    pub(crate) dim: usize,
}

impl Default for Span {
    fn default() -> Self {
        Span { piv: [0; 64], dim: 0 }
    }
}

impl Span {
    pub(crate) fn of(v: impl IntoIterator<Item = u64>) -> Self {
        let mut s = Span::default();
        for x in v {
            s.insert(x);
        }
        s
    }

    /// Adds a vector; returns false when it was already in the span.
    pub(crate) fn insert(&mut self, mut v: u64) -> bool {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if self.piv[h] == 0 {
                self.piv[h] = v;
                self.dim += 1;
                return true;
            }
            v ^= self.piv[h];
        }
        false
    }

    /// Reduces `v` so it has no bit at any pivot position.
    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        let mut rest = v;
        while rest != 0 {
            let h = 63 - rest.leading_zeros() as usize;
            if self.piv[h] != 0 {
                v ^= self.piv[h];
            }
            rest = v & low_mask(h);
        }
        v
    }

    pub(crate) fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }
}

/// Circuits of size at most `cap` of the column family `cols`.
fn small_circuits(cols: &[u64], cap: usize) -> Vec<SubsetMask> {
    let mut by_vec: HashMap<u64, Vec<usize>> = HashMap::new();
    for (j, &c) in cols.iter().enumerate() {
        by_vec.entry(c).or_default().push(j);
    }
    let mut out = Vec::new();
    if cap == 0 {
        return out;
    }
    for (j, &c) in cols.iter().enumerate() {
        if c == 0 {
            out.push(SubsetMask::singleton(j));
        }
    }
    // DFS over independent sets S (increasing indices); the circuits closed by
    // S are the elements after max(S) equal to the sum of S.
    fn dfs(
        cols: &[u64],
        by_vec: &HashMap<u64, Vec<usize>>,
        cap: usize,
        start: usize,
        set: SubsetMask,
        sum: u64,
        span: &Span,
        out: &mut Vec<SubsetMask>,
    ) {
        if !set.is_empty() {
            if let Some(list) = by_vec.get(&sum) {
                let last = 63 - set.0.leading_zeros() as usize;
                for &j in list {
                    if j > last {
                        out.push(set.with(j));
                    }
                }
            }
        }
        if set.len() + 1 >= cap {
            return;
        }
        for i in start..cols.len() {
            let mut s2 = span.clone();
            if s2.insert(cols[i]) {
                dfs(cols, by_vec, cap, i + 1, set.with(i), sum ^ cols[i], &s2, out);
            }
        }
    }
    dfs(cols, &by_vec, cap, 0, SubsetMask::EMPTY, 0, &Span::default(), &mut out);
    out.sort_by_key(|m| (m.len(), m.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"]).unwrap()
    }

    #[test]
    fn span_reduce_clears_pivots() {
        let s = Span::of([0b110, 0b011]);
        assert_eq!(s.dim, 2);
        assert!(s.contains(0b101));
        assert!(!s.contains(0b001));
        assert_eq!(s.reduce(0b101), 0);
    }

    #[test]
    fn fano_counts() {
        let f = fano();
        assert_eq!(f.rank(), 3);
        assert_eq!(f.triangles().len(), 7);
        assert_eq!(f.circuits_up_to(4, CircuitKind::Circuit).len(), 14);
        assert_eq!(f.triads().len(), 0);
        assert_eq!(f.circuits_up_to(4, CircuitKind::Cocircuit).len(), 7);
    }

    #[test]
    fn lambda_two_formulas_agree() {
        let f = fano();
        for x in 0..(1u64 << 7) {
            let x = SubsetMask(x);
            let p = f.rank_profile(x);
            assert_eq!(p.lambda, p.rank + p.corank - x.len());
            assert_eq!(p.lambda, f.lambda(x.complement(7)));
        }
    }

    #[test]
    fn empty_set_profile() {
        let m = BinaryMatroid::from_strs(&["a", "b", "c"], &["110"]).unwrap();
        let p = m.rank_profile(SubsetMask::EMPTY);
        assert_eq!((p.rank, p.lambda), (0, 0));
        assert_eq!(p.closure, m.mask(&["c"]).unwrap());
    }

    #[test]
    fn dual_is_involution() {
        let f = fano();
        let d = f.dual();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.dual(), f);
        assert_eq!(d.triads().len(), 7);
    }

    #[test]
    fn minor_rank_and_commutation() {
        let f = fano();
        let c = f.mask(&["1"]).unwrap();
        let d = f.mask(&["7"]).unwrap();
        let a = f.minor(c, d);
        let b = f.contract(c).delete(SubsetMask::singleton(5));
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert_eq!(f.minor(SubsetMask::EMPTY, SubsetMask::EMPTY), f);
    }

    #[test]
    fn simplify_keeps_first_of_class() {
        let f = fano();
        let m = f.contract(f.mask(&["1"]).unwrap());
        let s = m.si_co(Reduce::Simplify);
        assert_eq!(s.matroid.len(), 3);
        assert!(s.matroid.is_simple());
        assert_eq!(s.matroid.labels()[0], "2");
    }

    #[test]
    fn coextend_cocycle_accepts_basis_elements() {
        let f = fano();
        let t = f.mask(&["1", "2"]).unwrap();
        let m = f.coextend_cocycle("e", t).unwrap();
        assert!(m.is_cocircuit(t.with(m.len() - 1)));
        assert_eq!(m.contract(SubsetMask::singleton(m.len() - 1)), f);
    }

    #[test]
    fn coextend_puts_row_in_cocircuit() {
        let f = fano();
        let m = f.coextend("e", f.mask(&["4", "5"]).unwrap()).unwrap();
        assert_eq!(m.rank(), 4);
        assert!(m.is_cocircuit(m.mask(&["4", "5", "e"]).unwrap()));
        assert_eq!(m.contract(m.mask(&["e"]).unwrap()), f);
    }
}
