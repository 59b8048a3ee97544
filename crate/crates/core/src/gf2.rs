//! Dense GF(2) matrices, reduced row-echelon form, standard forms `[I|A]`,
//! fundamental graphs and pivoting.
//!
//! Rows are stored as `u64` words, so a matrix has at most 64 columns.
//! Bit `j` of a row word is the entry in column `j`.

use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;

/// Largest supported number of columns (and of ground-set elements).
pub const MAX_COLS: usize = 64;

/// A dense bit matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Gf2Matrix {
    /// The all-zero matrix.
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        assert!(n_cols <= MAX_COLS, "at most {MAX_COLS} columns");
        Gf2Matrix { n_rows, n_cols, rows: vec![0; n_rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    /// Builds a matrix from row words; bits at or above `n_cols` must be clear.
    pub fn from_rows(n_cols: usize, rows: Vec<u64>) -> Self {
        assert!(n_cols <= MAX_COLS, "at most {MAX_COLS} columns");
        assert!(rows.iter().all(|r| r & !low_mask(n_cols) == 0), "row has bits beyond n_cols");
        Gf2Matrix { n_rows: rows.len(), n_cols, rows }
    }

    /// Builds a matrix whose column `j` is the bit vector `cols[j]`
    /// (bit `i` of the word is the entry in row `i`).
    pub fn from_columns(n_rows: usize, cols: &[u64]) -> Self {
        assert!(n_rows <= 64);
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            assert!(c & !low_mask(n_rows) == 0, "column has bits beyond n_rows");
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                m.rows[i] |= 1 << j;
                bits &= bits - 1;
            }
        }
        m
    }

    /// Parses rows written as strings of `0` and `1`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, |r| r.len());
        if n_cols > MAX_COLS {
            return Err(Error::Invalid(format!("{n_cols} columns exceeds {MAX_COLS}")));
        }
        let mut out = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n_cols {
                return Err(Error::Parse { line: i + 1, msg: "ragged row".into() });
            }
            let mut w = 0u64;
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => w |= 1 << j,
                    _ => return Err(Error::Parse { line: i + 1, msg: format!("bad character {ch:?}") }),
                }
            }
            out.push(w);
        }
        Ok(Gf2Matrix { n_rows: rows.len(), n_cols, rows: out })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(j < self.n_cols);
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Column `j` as a bit vector over the rows; needs at most 64 rows.
    pub fn column(&self, j: usize) -> u64 {
        assert!(self.n_rows <= 64);
        let mut c = 0u64;
        for (i, &r) in self.rows.iter().enumerate() {
            c |= ((r >> j) & 1) << i;
        }
        c
    }

    pub fn columns(&self) -> Vec<u64> {
        (0..self.n_cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Gf2Matrix {
        assert!(self.n_rows <= MAX_COLS);
        Gf2Matrix::from_columns(self.n_cols, &self.rows)
    }

    /// Keeps the listed columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Gf2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut w = 0u64;
                for (k, &j) in cols.iter().enumerate() {
                    w |= ((r >> j) & 1) << k;
                }
                w
            })
            .collect();
        Gf2Matrix { n_rows: self.n_rows, n_cols: cols.len(), rows }
    }

    pub fn rank(&self) -> usize {
        rank_of_words(self.rows.iter().copied())
    }

    /// Rows rendered as `0`/`1` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|&r| (0..self.n_cols).map(|j| if (r >> j) & 1 == 1 { '1' } else { '0' }).collect())
            .collect()
    }
}

/// Rank of a family of bit vectors.
pub fn rank_of_words(words: impl IntoIterator<Item = u64>) -> usize {
    let mut piv = [0u64; 64];
    let mut rank = 0;
    for mut v in words {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if piv[h] == 0 {
                piv[h] = v;
                rank += 1;
                break;
            }
            v ^= piv[h];
        }
    }
    rank
}

/// Echelon basis that remembers how each pivot is written in terms of the
/// vectors inserted so far (numbered in insertion order).
#[derive(Clone)]
pub(crate) struct CoordSpan {
    piv: [u64; 64],
    combo: [u64; 64],
    pub(crate) dim: usize,
}

impl Default for CoordSpan {
    fn default() -> Self {
        CoordSpan { piv: [0; 64], combo: [0; 64], dim: 0 }
    }
}

impl CoordSpan {
    /// Reduces `v`; returns the residual and the combination used.
    pub(crate) fn reduce(&self, mut v: u64) -> (u64, u64) {
        let mut c = 0u64;
        let mut rest = v;
        while rest != 0 {
            let h = 63 - rest.leading_zeros() as usize;
            if self.piv[h] != 0 {
                v ^= self.piv[h];
                c ^= self.combo[h];
            }
            rest = v & low_mask(h);
        }
        (v, c)
    }

    /// Coordinates of `v` over the inserted vectors, or `None` outside the span.
    pub(crate) fn coords(&self, v: u64) -> Option<u64> {
        let (r, c) = self.reduce(v);
        (r == 0).then_some(c)
    }

    /// Inserts `v` when independent; returns whether it was.
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        let (r, c) = self.reduce(v);
        if r == 0 || self.dim == 64 {
            return false;
        }
        let h = 63 - r.leading_zeros() as usize;
        self.piv[h] = r;
        self.combo[h] = c ^ (1 << self.dim);
        self.dim += 1;
        true
    }
}

/// Columns of the reduced row-echelon form of the column family `cols`,
/// together with its rank. Column `j` is written over the greedy basis.
pub(crate) fn rref_columns(cols: &[u64]) -> (Vec<u64>, usize) {
    let mut span = CoordSpan::default();
    let mut out = Vec::with_capacity(cols.len());
    for &v in cols {
        match span.coords(v) {
            Some(c) => out.push(c),
            None => {
                out.push(1 << span.dim);
                span.insert(v);
            }
        }
    }
    (out, span.dim)
}

/// Reduced row-echelon form and the pivot columns, in increasing order.
///
/// Zero rows are kept at the bottom so the shape is unchanged.
pub fn rref(m: &Gf2Matrix) -> (Gf2Matrix, Vec<usize>) {
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..m.n_cols {
        if r == rows.len() {
            break;
        }
        let bit = 1u64 << j;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pr = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pr;
            }
        }
        pivots.push(j);
        r += 1;
    }
    (Gf2Matrix { n_rows: m.n_rows, n_cols: m.n_cols, rows }, pivots)
}

/// A representation `[I|A]` with the basis columns first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// `r x n` matrix whose first `r` columns form an identity block.
    pub matrix: Gf2Matrix,
    /// Column labels of `matrix`: basis labels followed by cobasis labels.
    pub labels: Vec<String>,
    pub basis: Vec<String>,
    pub cobasis: Vec<String>,
    /// `perm[k]` is the input column placed at position `k`.
    pub perm: Vec<usize>,
}

impl StandardForm {
    /// The `A` block, rows indexed by basis and columns by cobasis.
    pub fn a_block(&self) -> Gf2Matrix {
        let r = self.basis.len();
        let cols: Vec<usize> = (r..self.labels.len()).collect();
        self.matrix.select_columns(&cols)
    }
}

/// Row-reduces `m` so that `basis` (or the leftmost pivot columns when
/// omitted) becomes an identity block placed first.
pub fn standard_form(m: &Gf2Matrix, labels: &[String], basis: Option<&[String]>) -> Result<StandardForm> {
    if labels.len() != m.n_cols() {
        return Err(Error::Invalid(format!("{} labels for {} columns", labels.len(), m.n_cols())));
    }
    let (red, pivots) = rref(m);
    let rank = pivots.len();
    let basis_idx: Vec<usize> = match basis {
        None => pivots.clone(),
        Some(b) => {
            let mut idx = Vec::with_capacity(b.len());
            for l in b {
                let i = labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
                if idx.contains(&i) {
                    return Err(Error::NotABasis(format!("{l} repeated")));
                }
                idx.push(i);
            }
            idx
        }
    };
    if basis_idx.len() != rank {
        return Err(Error::NotABasis(format!("size {} but rank is {rank}", basis_idx.len())));
    }
    let mut perm = basis_idx.clone();
    perm.extend((0..labels.len()).filter(|j| !basis_idx.contains(j)));
    let top = Gf2Matrix { n_rows: rank, n_cols: m.n_cols, rows: red.rows[..rank].to_vec() };
    let (sf, piv) = rref(&top.select_columns(&perm));
    if piv != (0..rank).collect::<Vec<_>>() {
        return Err(Error::NotABasis("columns are dependent".into()));
    }
    let labels_out: Vec<String> = perm.iter().map(|&j| labels[j].clone()).collect();
    Ok(StandardForm {
        matrix: sf,
        basis: labels_out[..rank].to_vec(),
        cobasis: labels_out[rank..].to_vec(),
        labels: labels_out,
        perm,
    })
}

/// The bipartite graph `G_B(M)` of a standard form with basis `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalGraph {
    pub basis_side: Vec<String>,
    pub cobasis_side: Vec<String>,
    /// `adjacency[i]` bit `j` is set iff `basis_side[i]` is adjacent to `cobasis_side[j]`.
    pub adjacency: Vec<u64>,
}

impl FundamentalGraph {
    pub fn is_edge(&self, x: &str, y: &str) -> bool {
        match (self.basis_pos(x), self.cobasis_pos(y)) {
            (Some(i), Some(j)) => (self.adjacency[i] >> j) & 1 == 1,
            _ => false,
        }
    }

    pub fn basis_pos(&self, x: &str) -> Option<usize> {
        self.basis_side.iter().position(|l| l == x)
    }

    pub fn cobasis_pos(&self, y: &str) -> Option<usize> {
        self.cobasis_side.iter().position(|l| l == y)
    }

    /// Neighbours of a vertex on either side.
    pub fn neighbors(&self, v: &str) -> Vec<String> {
        if let Some(i) = self.basis_pos(v) {
            return (0..self.cobasis_side.len())
                .filter(|&j| (self.adjacency[i] >> j) & 1 == 1)
                .map(|j| self.cobasis_side[j].clone())
                .collect();
        }
        if let Some(j) = self.cobasis_pos(v) {
            return (0..self.basis_side.len())
                .filter(|&i| (self.adjacency[i] >> j) & 1 == 1)
                .map(|i| self.basis_side[i].clone())
                .collect();
        }
        Vec::new()
    }

    /// The `A` matrix (rows basis, columns cobasis).
    pub fn a_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.cobasis_side.len(), self.adjacency.clone())
    }

    /// Pivots on the edge `xy` with `x` in the basis and `y` outside it.
    ///
    /// In the result `y` occupies the row slot of `x` and `x` the column slot of `y`.
    pub fn pivot(&self, x: &str, y: &str) -> Result<FundamentalGraph> {
        let (Some(i), Some(j)) = (self.basis_pos(x), self.cobasis_pos(y)) else {
            return Err(Error::PivotOnNonEdge(x.into(), y.into()));
        };
        if (self.adjacency[i] >> j) & 1 == 0 {
            return Err(Error::PivotOnNonEdge(x.into(), y.into()));
        }
        let row_x = self.adjacency[i];
        let mut adj = self.adjacency.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            if u != i && (*row >> j) & 1 == 1 {
                // The y-column keeps its value and now stands for x.
                *row ^= row_x & !(1 << j);
            }
        }
        // Row of y: same support as x's row, with the column slot j now meaning x.
        adj[i] = row_x;
        let mut basis_side = self.basis_side.clone();
        let mut cobasis_side = self.cobasis_side.clone();
        basis_side[i] = y.to_string();
        cobasis_side[j] = x.to_string();
        Ok(FundamentalGraph { basis_side, cobasis_side, adjacency: adj })
    }

    /// Subgraph induced on the surviving vertices.
    pub fn induced(&self, keep: &dyn Fn(&str) -> bool) -> FundamentalGraph {
        let rows: Vec<usize> = (0..self.basis_side.len()).filter(|&i| keep(&self.basis_side[i])).collect();
        let cols: Vec<usize> = (0..self.cobasis_side.len()).filter(|&j| keep(&self.cobasis_side[j])).collect();
        let adjacency = rows
            .iter()
            .map(|&i| {
                let mut w = 0u64;
                for (k, &j) in cols.iter().enumerate() {
                    w |= ((self.adjacency[i] >> j) & 1) << k;
                }
                w
            })
            .collect();
        FundamentalGraph {
            basis_side: rows.iter().map(|&i| self.basis_side[i].clone()).collect(),
            cobasis_side: cols.iter().map(|&j| self.cobasis_side[j].clone()).collect(),
            adjacency,
        }
    }

    /// The binary matroid represented by `[I|A]` for this graph.
    pub fn to_matroid(&self) -> BinaryMatroid {
        let r = self.basis_side.len();
        let n = r + self.cobasis_side.len();
        let rows = self.adjacency.iter().enumerate().map(|(i, &a)| (1u64 << i) | (a << r)).collect();
        let labels: Vec<String> = self.basis_side.iter().chain(&self.cobasis_side).cloned().collect();
        BinaryMatroid::from_matrix(labels, &Gf2Matrix::from_rows(n, rows)).expect("labels are distinct")
    }

    /// Same graph with vertices compared as labelled sets, independent of row/column order.
    pub fn edge_set(&self) -> std::collections::BTreeSet<(String, String)> {
        let mut out = std::collections::BTreeSet::new();
        for (i, x) in self.basis_side.iter().enumerate() {
            for (j, y) in self.cobasis_side.iter().enumerate() {
                if (self.adjacency[i] >> j) & 1 == 1 {
                    out.insert((x.clone(), y.clone()));
                }
            }
        }
        out
    }
}

/// `G_B(M)` for the basis `B` of `M`.
pub fn fundamental_graph(m: &BinaryMatroid, basis: &[String]) -> Result<FundamentalGraph> {
    let sf = standard_form(&m.rep(), m.labels(), Some(basis))?;
    let a = sf.a_block();
    Ok(FundamentalGraph { basis_side: sf.basis, cobasis_side: sf.cobasis, adjacency: a.rows().to_vec() })
}

/// Pivots `G_B(M)` on the edge `xy`, giving the representation for `(B - x) ∪ y`.
pub fn pivot(m: &BinaryMatroid, basis: &[String], x: &str, y: &str) -> Result<FundamentalGraph> {
    fundamental_graph(m, basis)?.pivot(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let id = Gf2Matrix::identity(4);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2, 3]));
        let z = Gf2Matrix::zeros(3, 5);
        assert_eq!(rref(&z), (z.clone(), vec![]));
    }

    #[test]
    fn rref_is_idempotent_and_keeps_rank() {
        let m = Gf2Matrix::from_strs(&["1101", "0111", "1010"]).unwrap();
        let (r1, p1) = rref(&m);
        let (r2, p2) = rref(&r1);
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        assert_eq!(m.rank(), p1.len());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn columns_roundtrip() {
        let m = Gf2Matrix::from_strs(&["110", "011"]).unwrap();
        let c = m.columns();
        assert_eq!(c, vec![0b01, 0b11, 0b10]);
        assert_eq!(Gf2Matrix::from_columns(2, &c), m);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().n_rows(), 3);
    }

    #[test]
    fn standard_form_rejects_dependent_or_short_basis() {
        let m = Gf2Matrix::from_strs(&["1011", "0111"]).unwrap();
        let l = labels(&["p", "q", "s", "t"]);
        assert!(matches!(standard_form(&m, &l, Some(&labels(&["p"]))), Err(Error::NotABasis(_))));
        let dep = Gf2Matrix::from_strs(&["1010", "0101"]).unwrap();
        assert!(matches!(standard_form(&dep, &l, Some(&labels(&["p", "s"]))), Err(Error::NotABasis(_))));
        let sf = standard_form(&m, &l, Some(&labels(&["q", "s"]))).unwrap();
        assert_eq!(sf.basis, labels(&["q", "s"]));
        assert_eq!(sf.matrix.select_columns(&[0, 1]), Gf2Matrix::identity(2));
    }

    #[test]
    fn pivot_twice_is_identity() {
        let m = Gf2Matrix::from_strs(&["10011", "01010", "00111"]).unwrap();
        let l = labels(&["a", "b", "c", "d", "e"]);
        let bm = BinaryMatroid::from_matrix(l.clone(), &m).unwrap();
        let g = fundamental_graph(&bm, &labels(&["a", "b", "c"])).unwrap();
        let g1 = g.pivot("a", "d").unwrap();
        let g2 = g1.pivot("d", "a").unwrap();
        assert_eq!(g.edge_set(), g2.edge_set());
        assert!(g.pivot("b", "e").is_err());
        // the pivoted graph represents the same matroid
        assert_eq!(g1.to_matroid().reordered(&l).unwrap(), bm);
    }
}
