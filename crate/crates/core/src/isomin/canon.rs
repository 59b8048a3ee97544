//! Canonical forms by partition refinement and backtracking.
//!
//! Elements are coloured by their incidences with circuits and cocircuits
//! of size at most four and, once some elements are individualised, by
//! their coordinates over the span of the individualised ones. Each leaf of
//! the search tree orders the ground set; its certificate is the reduced
//! row-echelon form in that order, and the key is the least certificate.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::gf2::{rref_columns, CoordSpan};
use crate::matroid::{BinaryMatroid, CircuitKind};

const HYPEREDGE_CAP: usize = 4;

/// A value that is equal for two matroids exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u64>);

impl CanonicalKey {
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|w| format!("{w:x}")).collect::<Vec<_>>().join(".")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// A canonical key with the ordering that realises it: `order[k]` is the
/// element placed at canonical position `k`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub key: CanonicalKey,
    pub order: Vec<usize>,
}

pub(crate) fn compute_canonical_key(m: &BinaryMatroid) -> CanonicalKey {
    canonize(m, None).key
}

/// Canonical key of the isomorphism class of `m`.
pub fn canonical_form(m: &BinaryMatroid) -> CanonicalKey {
    m.canonical_key().clone()
}

/// Canonical labelling of `m`, optionally respecting an element colouring:
/// isomorphisms must then preserve colours.
pub fn canonical_labelling(m: &BinaryMatroid, colors: Option<&[u64]>) -> Canonical {
    canonize(m, colors)
}

/// Canonical key of `m` with the elements of `marked` distinguished.
pub fn canonical_form_marked(m: &BinaryMatroid, marked: crate::matroid::SubsetMask) -> CanonicalKey {
    let colors: Vec<u64> = (0..m.len()).map(|i| marked.contains(i) as u64).collect();
    canonize(m, Some(&colors)).key
}

/// An isomorphism from `m` to `n` as `(label in m, label in n)` pairs in
/// the element order of `m`.
pub fn is_isomorphic(m: &BinaryMatroid, n: &BinaryMatroid) -> Option<Vec<(String, String)>> {
    if m.len() != n.len() || m.rank() != n.rank() || m.canonical_key() != n.canonical_key() {
        return None;
    }
    let a = canonize(m, None);
    let b = canonize(n, None);
    let mut map = vec![0usize; m.len()];
    for k in 0..m.len() {
        map[a.order[k]] = b.order[k];
    }
    Some((0..m.len()).map(|i| (m.label(i).to_string(), n.label(map[i]).to_string())).collect())
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

type Cells = Vec<Vec<usize>>;

struct Refiner<'a> {
    cols: &'a [u64],
    n: usize,
    edges: Vec<(u8, u64)>,
    inc: Vec<Vec<usize>>,
}

impl<'a> Refiner<'a> {
    fn new(m: &'a BinaryMatroid) -> Self {
        let n = m.len();
        let mut edges = Vec::new();
        for (tag, kind) in [(0u8, CircuitKind::Circuit), (1u8, CircuitKind::Cocircuit)] {
            for c in m.circuits_up_to(HYPEREDGE_CAP, kind) {
                edges.push((tag, c.0));
            }
        }
        let mut inc = vec![Vec::new(); n];
        for (k, &(_, mask)) in edges.iter().enumerate() {
            let mut b = mask;
            while b != 0 {
                let e = b.trailing_zeros() as usize;
                b &= b - 1;
                inc[e].push(k);
            }
        }
        Refiner { cols: m.cols(), n, edges, inc }
    }

    fn colors(&self, cells: &Cells) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for (k, cell) in cells.iter().enumerate() {
            for &e in cell {
                c[e] = k;
            }
        }
        c
    }

    fn hyper_signatures(&self, color: &[usize]) -> Vec<u64> {
        let mut sig = vec![0u64; self.n];
        let mut buf = Vec::new();
        let mut others = Vec::with_capacity(HYPEREDGE_CAP);
        for e in 0..self.n {
            buf.clear();
            for &k in &self.inc[e] {
                let (tag, mut b) = self.edges[k];
                b &= !(1 << e);
                others.clear();
                while b != 0 {
                    let f = b.trailing_zeros() as usize;
                    b &= b - 1;
                    others.push(color[f]);
                }
                others.sort_unstable();
                buf.push(hash_of(&(tag, &others)));
            }
            buf.sort_unstable();
            sig[e] = hash_of(&buf);
        }
        sig
    }

    fn span_signatures(&self, cells: &Cells, color: &[usize]) -> Option<Vec<u64>> {
        let mut span = CoordSpan::default();
        let mut any = false;
        for cell in cells {
            if cell.len() == 1 {
                any = true;
                span.insert(self.cols[cell[0]]);
            }
        }
        if !any {
            return None;
        }
        let mut sig = vec![0u64; self.n];
        let mut outside: HashMap<u64, Vec<usize>> = HashMap::new();
        let mut residual = vec![0u64; self.n];
        for e in 0..self.n {
            let (r, c) = span.reduce(self.cols[e]);
            if r == 0 {
                sig[e] = hash_of(&(1u8, c));
            } else {
                residual[e] = r;
                outside.entry(r).or_default().push(color[e]);
            }
        }
        for list in outside.values_mut() {
            list.sort_unstable();
        }
        for e in 0..self.n {
            if residual[e] != 0 {
                sig[e] = hash_of(&(0u8, &outside[&residual[e]]));
            }
        }
        Some(sig)
    }

    fn split(cells: Cells, sig: &[u64]) -> (Cells, bool) {
        let mut out = Vec::with_capacity(cells.len());
        let mut changed = false;
        for mut cell in cells {
            if cell.len() == 1 {
                out.push(cell);
                continue;
            }
            cell.sort_by_key(|&e| (sig[e], e));
            let mut start = 0;
            for i in 1..=cell.len() {
                if i == cell.len() || sig[cell[i]] != sig[cell[start]] {
                    out.push(cell[start..i].to_vec());
                    start = i;
                }
            }
            if sig[cell[0]] != sig[cell[cell.len() - 1]] {
                changed = true;
            }
        }
        (out, changed)
    }

    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            if cells.len() == self.n {
                return cells;
            }
            let color = self.colors(&cells);
            let (c, changed) = Self::split(cells, &self.hyper_signatures(&color));
            cells = c;
            if changed {
                continue;
            }
            let color = self.colors(&cells);
            match self.span_signatures(&cells, &color) {
                Some(sig) => {
                    let (c, changed) = Self::split(cells, &sig);
                    cells = c;
                    if !changed {
                        return cells;
                    }
                }
                None => return cells,
            }
        }
    }
}

struct Search<'a> {
    refiner: Refiner<'a>,
    colors: Option<&'a [u64]>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let cols: Vec<u64> = order.iter().map(|&e| self.refiner.cols[e]).collect();
        let (mut cert, _) = rref_columns(&cols);
        if let Some(c) = self.colors {
            cert.extend(order.iter().map(|&e| c[e]));
        }
        cert
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.certificate(&order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((b, bo)) => {
                if cert == *b {
                    let mut g = vec![0usize; order.len()];
                    for k in 0..order.len() {
                        g[bo[k]] = order[k];
                    }
                    if g.iter().enumerate().any(|(i, &x)| i != x) && self.autos.len() < 256 {
                        self.autos.push(g);
                    }
                } else if cert < *b {
                    self.best = Some((cert, order));
                }
            }
        }
    }

    fn orbit_roots(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.refiner.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if fixed.iter().all(|&p| g[p] == p) {
                for (i, &gi) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, gi));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|i| find(&mut parent, i)).collect()
    }

    fn dfs(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let cells = self.refiner.refine(cells);
        let Some(ti) = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
        else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let cell = cells[ti].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let roots = self.orbit_roots(path);
                if explored.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            child[ti] = vec![v];
            child.insert(ti + 1, cell.iter().copied().filter(|&x| x != v).collect());
            path.push(v);
            self.dfs(child, path);
            path.pop();
        }
    }
}

fn canonize(m: &BinaryMatroid, colors: Option<&[u64]>) -> Canonical {
    let n = m.len();
    let head = [n as u64, m.rank() as u64];
    if n == 0 {
        return Canonical { key: CanonicalKey(head.to_vec()), order: Vec::new() };
    }
    let cells: Cells = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            let mut values: Vec<u64> = c.to_vec();
            values.sort_unstable();
            values.dedup();
            values.iter().map(|v| (0..n).filter(|&e| c[e] == *v).collect()).collect()
        }
    };
    let mut s = Search { refiner: Refiner::new(m), colors, best: None, autos: Vec::new() };
    s.dfs(cells, &mut Vec::new());
    let (cert, order) = s.best.expect("search reaches a leaf");
    let mut key = head.to_vec();
    key.extend(cert);
    Canonical { key: CanonicalKey(key), order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::SubsetMask;

    fn fano() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"]).unwrap()
    }

    #[test]
    fn key_ignores_order() {
        let f = fano();
        let g = f.permuted(&[6, 2, 4, 0, 1, 5, 3]);
        assert_eq!(compute_canonical_key(&f), compute_canonical_key(&g));
        let map = is_isomorphic(&f, &g).unwrap();
        let pairs: Vec<(&str, &str)> = map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let order: Vec<&str> = pairs.iter().map(|p| p.1).collect();
        assert_eq!(f.relabeled(order.iter().map(|s| s.to_string()).collect()).unwrap().reordered(g.labels()).unwrap(), g);
    }

    #[test]
    fn fano_and_dual_differ() {
        let f = fano();
        assert_ne!(compute_canonical_key(&f), compute_canonical_key(&f.dual()));
        assert!(is_isomorphic(&f, &f.dual()).is_none());
    }

    #[test]
    fn marking_distinguishes_elements() {
        let f = fano();
        let line = f.mask(&["1", "2", "4"]).unwrap();
        let other = f.mask(&["1", "2", "3"]).unwrap();
        assert!(f.is_circuit(line));
        assert!(!f.is_circuit(other));
        assert_ne!(canonical_form_marked(&f, line), canonical_form_marked(&f, other));
        let line2 = f.triangles()[3];
        assert_eq!(canonical_form_marked(&f, line), canonical_form_marked(&f, line2));
        assert_ne!(canonical_form_marked(&f, SubsetMask::EMPTY), canonical_form_marked(&f, line));
    }
}
