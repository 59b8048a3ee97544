//! Separations and the connectivity flags built on them.
//!
//! Separations are found by a depth-first assignment of elements to the two
//! sides, in breadth-first order of the fundamental graph. For a basis `B`
//! with standard form `[I|A]`,
//! `λ(X) = rk A[X∩B, Y−B] + rk A[Y∩B, X−B]`, and evaluating the same formula
//! on a partial assignment gives a lower bound used for pruning.

use super::{BinaryMatroid, SubsetMask};
use crate::gf2::rank_of_words;

/// A separation `(X, E − X)` found in a matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    /// Order `k`: `λ(X) = k − 1`.
    pub k: usize,
    pub side_x: SubsetMask,
    pub vertical: bool,
    pub small_side_size: usize,
}

/// The connectivity properties reported by [`BinaryMatroid::connectivity_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    ThreeConnected,
    InternallyFourConnected,
    VerticallyFourConnected,
    FourFiveConnected,
    AlmostVerticallyFourConnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub is_3connected: bool,
    pub is_internally_4connected: bool,
    pub is_vertically_4connected: bool,
    pub is_45_connected: bool,
    pub is_almost_v4c: bool,
    /// First violated property (in the field order above) with a witness.
    pub witness: Option<(Property, SeparationReport)>,
    /// A witness for every violated property.
    pub witnesses: Vec<(Property, SeparationReport)>,
}

pub(crate) struct SepSearch {
    n: usize,
    order: Vec<usize>,
    basis: u64,
    /// For basis elements, the cobasis neighbours in `G_B`.
    arow: Vec<u64>,
}

impl SepSearch {
    pub(crate) fn new(m: &BinaryMatroid) -> Self {
        let n = m.len();
        let basis = m.lex_basis();
        let mut arow = vec![0u64; n];
        for (k, x) in basis.iter().enumerate() {
            let mut w = 0u64;
            for y in basis.complement(n).iter() {
                if (m.col(y) >> k) & 1 == 1 {
                    w |= 1 << y;
                }
            }
            arow[x] = w;
        }
        let mut adj = vec![0u64; n];
        for x in basis.iter() {
            adj[x] |= arow[x];
            for y in SubsetMask(arow[x]).iter() {
                adj[y] |= 1 << x;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut seen = 0u64;
        for s in 0..n {
            if (seen >> s) & 1 == 1 {
                continue;
            }
            seen |= 1 << s;
            let mut head = order.len();
            order.push(s);
            while head < order.len() {
                let v = order[head];
                head += 1;
                let mut nb = adj[v] & !seen;
                seen |= nb;
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    order.push(w);
                }
            }
        }
        SepSearch { n, order, basis: basis.0, arow }
    }

    fn bound(&self, x: u64, y: u64) -> usize {
        let b = self.basis;
        let r1 = rank_of_words(SubsetMask(x & b).iter().map(|i| self.arow[i] & y));
        let r2 = rank_of_words(SubsetMask(y & b).iter().map(|i| self.arow[i] & x));
        r1 + r2
    }

    /// Visits every `X` containing element 0 with `λ(X) ≤ t` and both sides of
    /// size at least `min_side`. Stops when `visit` returns true; returns
    /// whether it stopped.
    pub(crate) fn run(&self, t: usize, min_side: usize, visit: &mut dyn FnMut(SubsetMask, usize) -> bool) -> bool {
        if self.n == 0 || min_side * 2 > self.n || min_side == 0 {
            return false;
        }
        let first = self.order[0];
        self.dfs(1, 1 << first, 0, t, min_side, visit)
    }

    fn dfs(
        &self,
        depth: usize,
        x: u64,
        y: u64,
        t: usize,
        min_side: usize,
        visit: &mut dyn FnMut(SubsetMask, usize) -> bool,
    ) -> bool {
        let remaining = self.n - depth;
        let (nx, ny) = (x.count_ones() as usize, y.count_ones() as usize);
        if nx + remaining < min_side || ny + remaining < min_side {
            return false;
        }
        let lam = self.bound(x, y);
        if lam > t {
            return false;
        }
        if remaining == 0 {
            return visit(SubsetMask(x), lam);
        }
        let e = self.order[depth];
        self.dfs(depth + 1, x | (1 << e), y, t, min_side, visit)
            || self.dfs(depth + 1, x, y | (1 << e), t, min_side, visit)
    }
}

impl BinaryMatroid {
    /// Every `X` (containing the first element) with `λ(X) ≤ t` and both
    /// sides of size at least `min_side`, together with `λ(X)`.
    pub fn separations(&self, t: usize, min_side: usize) -> Vec<(SubsetMask, usize)> {
        let mut out = Vec::new();
        SepSearch::new(self).run(t, min_side, &mut |x, l| {
            out.push((x, l));
            false
        });
        out
    }

    /// First `X` with `λ(X) ≤ t`, both sides at least `min_side`, and `pred(X, λ)`.
    pub fn find_separation(
        &self,
        t: usize,
        min_side: usize,
        pred: &mut dyn FnMut(SubsetMask, usize) -> bool,
    ) -> Option<(SubsetMask, usize)> {
        let mut found = None;
        SepSearch::new(self).run(t, min_side, &mut |x, l| {
            if pred(x, l) {
                found = Some((x, l));
                true
            } else {
                false
            }
        });
        found
    }

    fn report(&self, x: SubsetMask, lam: usize, vertical: bool) -> SeparationReport {
        let n = self.len();
        SeparationReport { k: lam + 1, side_x: x, vertical, small_side_size: x.len().min(n - x.len()) }
    }

    fn side_min(&self, x: SubsetMask) -> usize {
        x.len().min(self.len() - x.len())
    }

    fn rank_min(&self, x: SubsetMask) -> usize {
        self.rank_of(x).min(self.rank_of(x.complement(self.len())))
    }

    /// A `k`-separation of order below `n`, if any.
    pub fn low_separation(&self, n: usize) -> Option<SeparationReport> {
        if n == 0 {
            return None;
        }
        self.find_separation(n - 2, 1, &mut |x, l| self.side_min(x) > l)
            .map(|(x, l)| self.report(x, l, false))
    }

    pub fn is_connected(&self) -> bool {
        self.low_separation(2).is_none()
    }

    pub fn is_3connected(&self) -> bool {
        self.low_separation(3).is_none()
    }

    /// 3-connected and every 3-separation has a side with at most `k` elements.
    pub fn is_4k_connected(&self, k: usize) -> bool {
        self.is_3connected() && self.find_separation(2, k + 1, &mut |_, _| true).is_none()
    }

    pub fn is_internally_4connected(&self) -> bool {
        self.is_4k_connected(3)
    }

    fn vertical_violation(&self, n: usize) -> Option<SeparationReport> {
        self.find_separation(n.saturating_sub(2), 1, &mut |x, l| {
            let k = l + 1;
            k < n && self.side_min(x) >= k && self.rank_min(x) >= k
        })
        .map(|(x, l)| self.report(x, l, true))
    }

    pub fn is_vertically_connected(&self, n: usize) -> bool {
        self.vertical_violation(n).is_none()
    }

    pub fn is_vertically_4connected(&self) -> bool {
        self.is_vertically_connected(4)
    }

    fn spanned_by_triad(&self, side: SubsetMask, triads: &[SubsetMask]) -> bool {
        triads.iter().any(|&t| t.is_subset(side) && side.is_subset(self.closure(t)))
    }

    fn almost_v4c_violation(&self) -> Option<SeparationReport> {
        if let Some(w) = self.vertical_violation(3) {
            return Some(w);
        }
        let triads = self.triads();
        let n = self.len();
        self.find_separation(2, 3, &mut |x, _| {
            self.rank_min(x) >= 3
                && !self.spanned_by_triad(x, &triads)
                && !self.spanned_by_triad(x.complement(n), &triads)
        })
        .map(|(x, l)| self.report(x, l, true))
    }

    pub fn is_almost_vertically_4connected(&self) -> bool {
        self.almost_v4c_violation().is_none()
    }

    /// All five connectivity flags, with witnesses for the failures.
    pub fn connectivity_report(&self) -> ConnectivityReport {
        let mut witnesses = Vec::new();
        let low = self.low_separation(3);
        if let Some(w) = low {
            witnesses.push((Property::ThreeConnected, w));
        }
        let three = low.is_none();
        let sep3 = |min_side: usize| {
            if !three {
                return low;
            }
            self.find_separation(2, min_side, &mut |_, _| true).map(|(x, l)| self.report(x, l, false))
        };
        let i4 = sep3(4);
        if let Some(w) = i4 {
            witnesses.push((Property::InternallyFourConnected, w));
        }
        let v4 = self.vertical_violation(4);
        if let Some(w) = v4 {
            witnesses.push((Property::VerticallyFourConnected, w));
        }
        let f45 = sep3(6);
        if let Some(w) = f45 {
            witnesses.push((Property::FourFiveConnected, w));
        }
        let av = self.almost_v4c_violation();
        if let Some(w) = av {
            witnesses.push((Property::AlmostVerticallyFourConnected, w));
        }
        ConnectivityReport {
            is_3connected: three,
            is_internally_4connected: i4.is_none(),
            is_vertically_4connected: v4.is_none(),
            is_45_connected: f45.is_none(),
            is_almost_v4c: av.is_none(),
            witness: witnesses.first().copied(),
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_lambda_sets(m: &BinaryMatroid, t: usize, min_side: usize) -> Vec<(SubsetMask, usize)> {
        let n = m.len();
        let mut out = Vec::new();
        for x in 0..(1u64 << n) {
            let x = SubsetMask(x);
            if !x.contains(SepSearch::new(m).order[0]) {
                continue;
            }
            let l = m.lambda(x);
            if l <= t && x.len() >= min_side && n - x.len() >= min_side {
                out.push((x, l));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn search_matches_brute_force() {
        let m = BinaryMatroid::from_strs(
            &["a", "b", "c", "d", "e", "f", "g", "h"],
            &["10001101", "01001011", "00100111", "00011100"],
        )
        .unwrap();
        for t in 0..3 {
            for s in 1..4 {
                let mut got = m.separations(t, s);
                got.sort();
                assert_eq!(got, brute_lambda_sets(&m, t, s), "t={t} s={s}");
            }
        }
    }

    #[test]
    fn fano_is_3connected_and_i4c() {
        let f = BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"])
            .unwrap();
        let r = f.connectivity_report();
        assert!(r.is_3connected && r.is_internally_4connected && r.is_45_connected);
        assert!(r.is_vertically_4connected && r.is_almost_v4c);
        assert!(r.witness.is_none());
    }

    #[test]
    fn loop_breaks_connectivity() {
        let m = BinaryMatroid::from_strs(&["a", "b", "c", "z"], &["1010", "0110"]).unwrap();
        let r = m.connectivity_report();
        assert!(!r.is_3connected);
        assert_eq!(r.witness.unwrap().0, Property::ThreeConnected);
        assert_eq!(r.witness.unwrap().1.k, 1);
    }
}
