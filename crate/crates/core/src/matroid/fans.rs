//! Fans, cofans and the classification of small 3-separators.

use std::collections::HashSet;

use super::{BinaryMatroid, SubsetMask};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FanKind {
    /// The first three elements form a triangle.
    Fan,
    /// The first three elements form a triad.
    Cofan,
}

/// An ordered fan or cofan; triples of consecutive elements alternate
/// between triangles and triads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    pub kind: FanKind,
    pub elements: Vec<usize>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mask(&self) -> SubsetMask {
        SubsetMask::from_indices(self.elements.iter().copied())
    }

    /// The same elements in reverse order, with the matching kind.
    pub fn reversed(&self) -> Fan {
        let flip = self.len() % 2 == 0;
        let kind = match (self.kind, flip) {
            (k, false) => k,
            (FanKind::Fan, true) => FanKind::Cofan,
            (FanKind::Cofan, true) => FanKind::Fan,
        };
        Fan { kind, elements: self.elements.iter().rev().copied().collect() }
    }

    /// Good elements of a fan or cofan of length four or five.
    pub fn good_elements(&self) -> Vec<usize> {
        let e = &self.elements;
        match (self.kind, e.len()) {
            (FanKind::Cofan, 4) => vec![e[0]],
            (FanKind::Fan, 4) => vec![e[3]],
            (FanKind::Fan, 5) => vec![e[1], e[3]],
            (FanKind::Cofan, 5) => vec![e[0], e[4]],
            _ => Vec::new(),
        }
    }
}

/// How a 3-separating set with at most five elements is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorClass {
    Triad,
    /// A fan or cofan of length four or five.
    Fan(Fan),
    /// A 4-element circuit-cocircuit inside the set whose closure
    /// (or coclosure when `in_coclosure`) contains the set.
    QuadClosure { quad: SubsetMask, in_coclosure: bool },
    /// Rank below three; no classification applies.
    LowRank,
    /// None of the above. Never produced for a 3-connected binary matroid.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallSeparator {
    pub set: SubsetMask,
    pub class: SeparatorClass,
    pub guts: SubsetMask,
    pub coguts: SubsetMask,
    pub interior: SubsetMask,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    /// Maximal fans and cofans; a sequence and its reversal are reported once.
    pub fans: Vec<Fan>,
    /// Exactly 3-separating sets of size three to five, classified.
    pub separators: Vec<SmallSeparator>,
}

struct Triples {
    tri: HashSet<u64>,
    triad: HashSet<u64>,
}

impl Triples {
    fn of(m: &BinaryMatroid) -> Self {
        Triples {
            tri: m.triangles().into_iter().map(|s| s.0).collect(),
            triad: m.triads().into_iter().map(|s| s.0).collect(),
        }
    }

    /// Whether the triple starting at position `i` (0-based) of a sequence of
    /// the given kind has the required type.
    fn fits(&self, kind: FanKind, i: usize, a: usize, b: usize, c: usize) -> bool {
        let want_triangle = (kind == FanKind::Fan) == (i % 2 == 0);
        let set = (1u64 << a) | (1 << b) | (1 << c);
        if want_triangle {
            self.tri.contains(&set)
        } else {
            self.triad.contains(&set)
        }
    }

    fn is_fan(&self, kind: FanKind, seq: &[usize]) -> bool {
        seq.len() >= 3 && (0..seq.len() - 2).all(|i| self.fits(kind, i, seq[i], seq[i + 1], seq[i + 2]))
    }
}

fn extend_all(t: &Triples, n: usize, kind: FanKind, seq: &mut Vec<usize>, out: &mut Vec<Fan>) {
    let mut grew = false;
    let k = seq.len();
    for x in 0..n {
        if seq.contains(&x) {
            continue;
        }
        if t.fits(kind, k - 2, seq[k - 2], seq[k - 1], x) {
            grew = true;
            seq.push(x);
            extend_all(t, n, kind, seq, out);
            seq.pop();
        }
    }
    if !grew {
        out.push(Fan { kind, elements: seq.clone() });
    }
}

fn can_prepend(t: &Triples, n: usize, f: &Fan) -> bool {
    let other = match f.kind {
        FanKind::Fan => FanKind::Cofan,
        FanKind::Cofan => FanKind::Fan,
    };
    (0..n).any(|x| !f.elements.contains(&x) && t.fits(other, 0, x, f.elements[0], f.elements[1]))
}

impl BinaryMatroid {
    /// All maximal fans and cofans (length at least three).
    pub fn maximal_fans(&self) -> Vec<Fan> {
        let t = Triples::of(self);
        let n = self.len();
        let mut raw = Vec::new();
        for (kind, list) in [(FanKind::Fan, &t.tri), (FanKind::Cofan, &t.triad)] {
            let mut starts: Vec<u64> = list.iter().copied().collect();
            starts.sort_unstable();
            for s in starts {
                let e: Vec<usize> = SubsetMask(s).iter().collect();
                for p in permutations3(&e) {
                    let mut seq = p.to_vec();
                    extend_all(&t, n, kind, &mut seq, &mut raw);
                }
            }
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for f in raw {
            if can_prepend(&t, n, &f) {
                continue;
            }
            let r = f.reversed();
            let key = if r.elements < f.elements { r.elements.clone() } else { f.elements.clone() };
            if seen.insert(key) {
                out.push(f);
            }
        }
        out
    }

    /// An ordering of `x` as a fan or cofan, if one exists.
    pub fn fan_ordering(&self, x: SubsetMask) -> Option<Fan> {
        let t = Triples::of(self);
        let elems: Vec<usize> = x.iter().collect();
        let mut found = None;
        for_each_permutation(&elems, &mut |p| {
            for kind in [FanKind::Fan, FanKind::Cofan] {
                if t.is_fan(kind, p) {
                    found = Some(Fan { kind, elements: p.to_vec() });
                    return true;
                }
            }
            false
        });
        found
    }

    /// `G(X) = X ∩ cl(E − X)`.
    pub fn guts(&self, x: SubsetMask) -> SubsetMask {
        x & self.closure(x.complement(self.len()))
    }

    /// `G*(X) = X ∩ cl*(E − X)`.
    pub fn coguts(&self, x: SubsetMask) -> SubsetMask {
        x & self.coclosure(x.complement(self.len()))
    }

    /// `int(X) = X − G(X)`.
    pub fn interior(&self, x: SubsetMask) -> SubsetMask {
        x - self.guts(x)
    }

    /// Classifies a 3-separating set with at most five elements.
    pub fn classify_small_separator(&self, x: SubsetMask) -> SeparatorClass {
        if self.rank_of(x) < 3 {
            return SeparatorClass::LowRank;
        }
        if x.len() == 3 && self.is_cocircuit(x) {
            return SeparatorClass::Triad;
        }
        if (4..=5).contains(&x.len()) {
            if let Some(f) = self.fan_ordering(x) {
                return SeparatorClass::Fan(f);
            }
        }
        let sub: Vec<usize> = x.iter().collect();
        for q in subsets_of_size(&sub, 4) {
            if self.is_circuit(q) && self.is_cocircuit(q) {
                if x.is_subset(self.closure(q)) {
                    return SeparatorClass::QuadClosure { quad: q, in_coclosure: false };
                }
                if x.is_subset(self.coclosure(q)) {
                    return SeparatorClass::QuadClosure { quad: q, in_coclosure: true };
                }
            }
        }
        SeparatorClass::Unclassified
    }

    /// Maximal fans plus every 3-separating set with three to five elements
    /// and its classification. Requires a 3-connected matroid.
    pub fn fans_and_small_separators(&self) -> Result<FanReport> {
        if !self.is_3connected() {
            return Err(Error::NotThreeConnected);
        }
        let n = self.len();
        let mut sets = Vec::new();
        for (x, l) in self.separations(2, 3) {
            if l != 2 {
                continue;
            }
            for s in [x, x.complement(n)] {
                if s.len() <= 5 {
                    sets.push(s);
                }
            }
        }
        sets.sort_by_key(|s| (s.len(), s.0));
        sets.dedup();
        let separators = sets
            .into_iter()
            .map(|s| SmallSeparator {
                set: s,
                class: self.classify_small_separator(s),
                guts: self.guts(s),
                coguts: self.coguts(s),
                interior: self.interior(s),
            })
            .collect();
        Ok(FanReport { fans: self.maximal_fans(), separators })
    }
}

fn permutations3(e: &[usize]) -> [[usize; 3]; 6] {
    let (a, b, c) = (e[0], e[1], e[2]);
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == v.len() {
            return f(v);
        }
        for i in k..v.len() {
            v.swap(k, i);
            if go(v, k + 1, f) {
                return true;
            }
            v.swap(k, i);
        }
        false
    }
    go(&mut items.to_vec(), 0, f)
}

pub(crate) fn subsets_of_size(items: &[usize], k: usize) -> Vec<SubsetMask> {
    let mut out = Vec::new();
    fn go(items: &[usize], k: usize, start: usize, cur: SubsetMask, out: &mut Vec<SubsetMask>) {
        if cur.len() == k {
            out.push(cur);
            return;
        }
        for i in start..items.len() {
            go(items, k, i + 1, cur.with(items[i]), out);
        }
    }
    go(items, k, 0, SubsetMask::EMPTY, &mut out);
    out
}
