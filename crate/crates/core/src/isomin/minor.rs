//! Minor testing.
//!
//! The search walks single-element deletions and contractions, skipping
//! minors already seen up to isomorphism. For a 3-connected target that is
//! not a wheel, the host is first simplified and cosimplified, split along
//! any 1- or 2-separation, and once 3-connected only 3-connected
//! single-element minors are followed.

use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use super::canon::{canonical_form_marked, is_isomorphic, CanonicalKey};
use crate::gf2::CoordSpan;
use crate::matroid::{BinaryMatroid, SubsetMask};

const NO_CACHE_LIMIT: usize = 1 << 20;

/// `M / C \ D ≅ N` with `C` independent and `D` coindependent in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub contract_set: SubsetMask,
    pub delete_set: SubsetMask,
    /// `(label in M, label in N)` for each element of `M / C \ D`.
    pub iso_map: Vec<(String, String)>,
}

impl MinorWitness {
    /// Rechecks the witness against `m` and `n`.
    pub fn verify(&self, m: &BinaryMatroid, n: &BinaryMatroid) -> bool {
        if self.contract_set.intersects(self.delete_set)
            || !m.is_independent(self.contract_set)
            || m.corank_of(self.delete_set) != self.delete_set.len()
        {
            return false;
        }
        let minor = m.minor(self.contract_set, self.delete_set);
        if minor.len() != n.len() || self.iso_map.len() != n.len() {
            return false;
        }
        let mut labels = vec![String::new(); minor.len()];
        for (a, b) in &self.iso_map {
            match minor.index_of(a) {
                Some(i) => labels[i] = b.clone(),
                None => return false,
            }
        }
        match minor.relabeled(labels) {
            Ok(r) => r.same_labelled(n),
            Err(_) => false,
        }
    }
}

fn no_cache() -> &'static Mutex<HashSet<(CanonicalKey, CanonicalKey)>> {
    static CACHE: OnceLock<Mutex<HashSet<(CanonicalKey, CanonicalKey)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashSet::new()))
}

fn cache_has(t: &CanonicalKey, m: &CanonicalKey) -> bool {
    no_cache().lock().map(|c| c.contains(&(t.clone(), m.clone()))).unwrap_or(false)
}

fn cache_put(t: &CanonicalKey, m: &CanonicalKey) {
    if let Ok(mut c) = no_cache().lock() {
        if c.len() >= NO_CACHE_LIMIT {
            c.clear();
        }
        c.insert((t.clone(), m.clone()));
    }
}

/// Cycle matroid of the wheel with `r` spokes.
pub(crate) fn wheel_columns(r: usize) -> Vec<u64> {
    let mut cols = Vec::with_capacity(2 * r);
    for i in 0..r {
        cols.push(1u64 << i);
        cols.push((1u64 << i) | (1 << ((i + 1) % r)));
    }
    cols
}

/// Whether `n` is the cycle matroid of a wheel with at least three spokes.
pub fn is_wheel(n: &BinaryMatroid) -> bool {
    let r = n.rank();
    if r < 3 || n.len() != 2 * r {
        return false;
    }
    let labels = (0..2 * r).map(|i| format!("w{i}")).collect();
    let w = BinaryMatroid::from_columns(labels, &wheel_columns(r)).expect("wheel");
    w.canonical_key() == n.canonical_key()
}

#[derive(Clone)]
struct State {
    m: BinaryMatroid,
    orig: Vec<usize>,
    contract: u64,
    delete: u64,
}

impl State {
    fn minor(&self, c: SubsetMask, d: SubsetMask) -> State {
        let mut contract = self.contract;
        let mut delete = self.delete;
        for i in c.iter() {
            contract |= 1 << self.orig[i];
        }
        for i in d.iter() {
            delete |= 1 << self.orig[i];
        }
        let keep = self.m.ground() - c - d;
        State { m: self.m.minor(c, d), orig: keep.iter().map(|i| self.orig[i]).collect(), contract, delete }
    }
}

struct Target {
    key: CanonicalKey,
    size: usize,
    rank: usize,
    corank: usize,
    /// 3-connected, simple, cosimple and at least four elements.
    structured: bool,
    wheel: bool,
}

struct MinorSearch {
    target: Target,
    visited: HashSet<CanonicalKey>,
    keep: SubsetMask,
}

impl MinorSearch {
    fn feasible(&self, m: &BinaryMatroid) -> bool {
        m.rank() >= self.target.rank && m.corank() >= self.target.corank
    }

    fn kept(&self, s: &State) -> SubsetMask {
        SubsetMask::from_indices((0..s.orig.len()).filter(|&i| self.keep.contains(s.orig[i])))
    }

    fn state_key(&self, s: &State) -> CanonicalKey {
        if self.keep.is_empty() {
            s.m.canonical_key().clone()
        } else {
            canonical_form_marked(&s.m, self.kept(s))
        }
    }

    fn search(&mut self, s: State) -> Option<State> {
        if !self.feasible(&s.m) {
            return None;
        }
        if s.m.len() == self.target.size {
            return (self.state_key(&s) == self.target.key).then_some(s);
        }
        let key = self.state_key(&s);
        let global = self.keep.is_empty();
        if self.visited.contains(&key) || (global && cache_has(&self.target.key, &key)) {
            return None;
        }
        let found = if self.target.structured && self.keep.is_empty() { self.structured(s) } else { self.generic(s) };
        if found.is_none() {
            if global {
                cache_put(&self.target.key, &key);
            }
            self.visited.insert(key);
        }
        found
    }

    fn generic(&mut self, s: State) -> Option<State> {
        let kept = self.kept(&s);
        for e in 0..s.m.len() {
            if kept.contains(e) {
                continue;
            }
            let one = SubsetMask::singleton(e);
            if !s.m.is_coloop(e) {
                if let Some(f) = self.search(s.minor(SubsetMask::EMPTY, one)) {
                    return Some(f);
                }
            }
            if !s.m.is_loop(e) {
                if let Some(f) = self.search(s.minor(one, SubsetMask::EMPTY)) {
                    return Some(f);
                }
            }
        }
        None
    }

    fn structured(&mut self, mut s: State) -> Option<State> {
        loop {
            let d = redundant(s.m.cols());
            if !d.is_empty() {
                s = s.minor(SubsetMask::EMPTY, d);
                continue;
            }
            let c = redundant(s.m.dual().cols());
            if !c.is_empty() {
                s = s.minor(c, SubsetMask::EMPTY);
                continue;
            }
            break;
        }
        if !self.feasible(&s.m) {
            return None;
        }
        if s.m.len() == self.target.size {
            return (self.state_key(&s) == self.target.key).then_some(s);
        }
        if let Some(sep) = s.m.low_separation(3) {
            for part in split_parts(&s, sep.side_x) {
                if let Some(f) = self.search(part) {
                    return Some(f);
                }
            }
            return None;
        }
        for e in 0..s.m.len() {
            let one = SubsetMask::singleton(e);
            for (c, d) in [(SubsetMask::EMPTY, one), (one, SubsetMask::EMPTY)] {
                let child = s.minor(c, d);
                if !self.feasible(&child.m) {
                    continue;
                }
                if self.target.wheel || child.m.len() == self.target.size || child.m.is_3connected() {
                    if let Some(f) = self.search(child) {
                        return Some(f);
                    }
                }
            }
        }
        None
    }
}

/// Loops and all but the first element of each parallel class.
fn redundant(cols: &[u64]) -> SubsetMask {
    let mut seen = HashSet::new();
    SubsetMask::from_indices((0..cols.len()).filter(|&j| cols[j] == 0 || !seen.insert(cols[j])))
}

/// The two parts of a 1- or 2-separation `(X, Y)` of a matroid with no
/// loops, coloops, or parallel or series pairs, each realised as a minor.
fn split_parts(s: &State, x: SubsetMask) -> Vec<State> {
    let n = s.m.len();
    let y = x.complement(n);
    if s.m.lambda(x) == 0 {
        return vec![s.minor(SubsetMask::EMPTY, y), s.minor(SubsetMask::EMPTY, x)];
    }
    let mut parts = Vec::with_capacity(2);
    for (keep, other) in [(x, y), (y, x)] {
        let across = bridge(&s.m, keep, other);
        let y0 = across.first().expect("2-separation has a bridge");
        let c = across.without(y0);
        parts.push(s.minor(c, other - across));
    }
    parts
}

/// A set `S ⊆ other` that is independent, with `ΣS` a non-zero vector of
/// `span(keep) ∩ span(other)`.
fn bridge(m: &BinaryMatroid, keep: SubsetMask, other: SubsetMask) -> SubsetMask {
    let mut own = CoordSpan::default();
    for i in keep.iter() {
        own.insert(m.col(i));
    }
    let mut basis = Vec::new();
    let mut ospan = CoordSpan::default();
    for i in other.iter() {
        if ospan.insert(m.col(i)) {
            basis.push(i);
        }
    }
    let mut rel = CoordSpan::default();
    for (k, &i) in basis.iter().enumerate() {
        let (r, _) = own.reduce(m.col(i));
        match rel.coords(r) {
            Some(c) => {
                let c = c | (1 << k);
                return SubsetMask::from_indices((0..basis.len()).filter(|&j| (c >> j) & 1 == 1).map(|j| basis[j]));
            }
            None => {
                rel.insert(r);
            }
        }
    }
    SubsetMask::EMPTY
}

fn run(m: &BinaryMatroid, n: &BinaryMatroid, keep: SubsetMask) -> Option<MinorWitness> {
    if n.len() > m.len() || n.rank() > m.rank() || n.corank() > m.corank() {
        return None;
    }
    let structured = n.len() >= 4 && n.is_simple() && n.is_cosimple() && n.is_3connected();
    let target = Target {
        key: n.canonical_key().clone(),
        size: n.len(),
        rank: n.rank(),
        corank: n.corank(),
        structured,
        wheel: structured && is_wheel(n),
    };
    let mut search = MinorSearch { target, visited: HashSet::new(), keep };
    let start = State { m: m.clone(), orig: (0..m.len()).collect(), contract: 0, delete: 0 };
    let found = if keep.is_empty() { search.search(start) } else { search.search_keep(start, n) }?;
    let iso_map = is_isomorphic(&found.m, n).expect("search ends on an isomorphic minor");
    let (contract_set, delete_set) = normalize(m, SubsetMask(found.contract), SubsetMask(found.delete));
    Some(MinorWitness { contract_set, delete_set, iso_map })
}

/// Rewrites `M / C \ D` as `M / C' \ D'` with `C'` independent and `D'`
/// coindependent; the minor is unchanged.
pub fn normalize(m: &BinaryMatroid, c: SubsetMask, d: SubsetMask) -> (SubsetMask, SubsetMask) {
    let mut span = CoordSpan::default();
    let mut indep = SubsetMask::EMPTY;
    for i in c.iter() {
        if span.insert(m.col(i)) {
            indep = indep.with(i);
        }
    }
    let dels = d | (c - indep);
    let after = m.contract(indep);
    let pos: Vec<usize> = {
        let mut p = vec![usize::MAX; m.len()];
        for (k, i) in (m.ground() - indep).iter().enumerate() {
            p[i] = k;
        }
        p
    };
    let r = after.rank();
    let mut coindep = SubsetMask::EMPTY;
    let mut local = SubsetMask::EMPTY;
    for i in dels.iter() {
        let trial = local.with(pos[i]);
        if after.rank_of(trial.complement(after.len())) == r {
            local = trial;
            coindep = coindep.with(i);
        }
    }
    (indep | (dels - coindep), coindep)
}

impl MinorSearch {
    /// Generic search where kept elements are never removed; the final
    /// comparison ignores the marking.
    fn search_keep(&mut self, s: State, n: &BinaryMatroid) -> Option<State> {
        if !self.feasible(&s.m) {
            return None;
        }
        if s.m.len() == self.target.size {
            return (s.m.canonical_key() == n.canonical_key()).then_some(s);
        }
        let key = self.state_key(&s);
        if !self.visited.insert(key) {
            return None;
        }
        let kept = self.kept(&s);
        for e in 0..s.m.len() {
            if kept.contains(e) {
                continue;
            }
            let one = SubsetMask::singleton(e);
            if !s.m.is_coloop(e) {
                if let Some(f) = self.search_keep(s.minor(SubsetMask::EMPTY, one), n) {
                    return Some(f);
                }
            }
            if !s.m.is_loop(e) {
                if let Some(f) = self.search_keep(s.minor(one, SubsetMask::EMPTY), n) {
                    return Some(f);
                }
            }
        }
        None
    }
}

/// Finds `C`, `D` with `M / C \ D ≅ N`.
pub fn has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> Option<MinorWitness> {
    run(m, n, SubsetMask::EMPTY)
}

/// As [`has_minor`], but the elements of `keep` must survive in the minor.
pub fn has_minor_keeping(m: &BinaryMatroid, n: &BinaryMatroid, keep: SubsetMask) -> Option<MinorWitness> {
    run(m, n, keep)
}

/// Binary matroids with none of `F7`, `F7*`, `M(K3,3)`, `M(K5)` as a minor.
pub fn is_cographic(m: &BinaryMatroid) -> bool {
    let fano = crate::catalog::fano();
    [fano.clone(), fano.dual(), crate::catalog::mk5(), crate::catalog::mk33()]
        .iter()
        .all(|n| has_minor(m, n).is_none())
}

pub fn is_graphic(m: &BinaryMatroid) -> bool {
    is_cographic(&m.dual())
}

/// Binary matroids with neither `F7` nor `F7*` as a minor.
pub fn is_regular(m: &BinaryMatroid) -> bool {
    let fano = crate::catalog::fano();
    has_minor(m, &fano).is_none() && has_minor(m, &fano.dual()).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"]).unwrap()
    }

    #[test]
    fn self_minor_is_identity_like() {
        let f = fano();
        let w = has_minor(&f, &f).unwrap();
        assert!(w.contract_set.is_empty() && w.delete_set.is_empty());
        assert!(w.verify(&f, &f));
    }

    #[test]
    fn wheel_detection() {
        let labels = (0..8).map(|i| format!("x{i}")).collect();
        let w = BinaryMatroid::from_columns(labels, &wheel_columns(4)).unwrap();
        assert!(is_wheel(&w));
        assert!(!is_wheel(&fano()));
    }

    #[test]
    fn fano_minor_of_extension() {
        let f = fano();
        let g = f.coextend("e", f.mask(&["4", "5", "6"]).unwrap()).unwrap();
        let w = has_minor(&g, &f).expect("coextension keeps the Fano minor");
        assert!(w.verify(&g, &f));
        assert!(has_minor(&f, &g).is_none());
    }

    #[test]
    fn two_sum_parts_are_minors() {
        let m = BinaryMatroid::from_strs(&["a", "b", "c", "d", "e"], &["10011", "01010", "00101"]).unwrap();
        let x = m.mask(&["a", "b"]).unwrap();
        if m.lambda(x) == 1 {
            let s = State { m: m.clone(), orig: (0..5).collect(), contract: 0, delete: 0 };
            for p in split_parts(&s, x) {
                assert!(p.m.len() < m.len());
            }
        }
    }
}
