//! Brute-force reference implementations used as test oracles.
//!
//! Everything here works from raw GF(2) column vectors with plain Gaussian
//! elimination and subset enumeration, and shares no code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

use binmat::BinaryMatroid;
use rand::seq::SliceRandom;
use rand::Rng;

/// A binary matroid given by its columns; element `i` is column `i`.
#[derive(Clone, Debug)]
pub struct Cols {
    pub cols: Vec<u64>,
}

fn insert(basis: &mut Vec<u64>, mut v: u64) -> bool {
    for &b in basis.iter() {
        v = v.min(v ^ b);
    }
    if v == 0 {
        return false;
    }
    basis.push(v);
    basis.sort_unstable_by(|a, b| b.cmp(a));
    true
}

impl Cols {
    pub fn of(m: &BinaryMatroid) -> Self {
        Cols { cols: m.cols().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn rank(&self, x: u64) -> usize {
        let mut basis = Vec::new();
        for i in 0..self.len() {
            if x >> i & 1 == 1 {
                insert(&mut basis, self.cols[i]);
            }
        }
        basis.len()
    }

    pub fn matroid_rank(&self) -> usize {
        self.rank(self.full())
    }

    pub fn lambda(&self, x: u64) -> usize {
        self.rank(x) + self.rank(self.full() & !x) - self.matroid_rank()
    }

    pub fn is_circuit(&self, x: u64) -> bool {
        let k = x.count_ones() as usize;
        k > 0 && self.rank(x) == k - 1 && (0..self.len()).filter(|&i| x >> i & 1 == 1).all(|i| self.rank(x & !(1 << i)) == k - 1)
    }

    pub fn is_cocircuit(&self, x: u64) -> bool {
        let r = self.matroid_rank();
        let rest = self.full() & !x;
        x != 0 && r > 0 && self.rank(rest) == r - 1 && (0..self.len()).filter(|&i| x >> i & 1 == 1).all(|i| self.rank(rest | 1 << i) == r)
    }

    /// All circuits, by subset enumeration.
    pub fn circuits(&self) -> Vec<u64> {
        (1..=self.full()).filter(|&x| self.is_circuit(x)).collect()
    }

    pub fn triangles(&self) -> Vec<u64> {
        subsets_of_size(self.len(), 3).into_iter().filter(|&x| self.is_circuit(x)).collect()
    }

    /// `M / c \ d`, by reducing every column modulo the span of `c`.
    pub fn minor(&self, c: u64, d: u64) -> Cols {
        let mut basis = Vec::new();
        for i in 0..self.len() {
            if c >> i & 1 == 1 {
                insert(&mut basis, self.cols[i]);
            }
        }
        let reduce = |mut v: u64| {
            for &b in &basis {
                v = v.min(v ^ b);
            }
            v
        };
        Cols { cols: (0..self.len()).filter(|&i| (c | d) >> i & 1 == 0).map(|i| reduce(self.cols[i])).collect() }
    }

    /// Whether some `k`-separation `(X', Y')` has `x ⊆ X'` and `y ⊆ Y'`.
    pub fn induces(&self, x: u64, y: u64, k: usize) -> bool {
        let rest: Vec<usize> = (0..self.len()).filter(|&i| (x | y) >> i & 1 == 0).collect();
        (0..1u64 << rest.len()).any(|pick| {
            let xs = rest.iter().enumerate().filter(|(j, _)| pick >> j & 1 == 1).fold(x, |acc, (_, &e)| acc | 1 << e);
            let ys = self.full() & !xs;
            xs.count_ones() as usize >= k && ys.count_ones() as usize >= k && self.lambda(xs) < k
        })
    }

    /// A side of some `k`-separation with `k < 3`, or of a 3-separation with
    /// both sides of size at least four.
    pub fn i4c_violation(&self) -> Option<u64> {
        let n = self.len();
        (1..self.full()).find(|&x| {
            let (a, b) = (x.count_ones() as usize, n - x.count_ones() as usize);
            let l = self.lambda(x);
            (l == 0 && a >= 1 && b >= 1) || (l == 1 && a >= 2 && b >= 2) || (l == 2 && a >= 4 && b >= 4)
        })
    }

    pub fn is_3connected(&self) -> bool {
        let n = self.len();
        (1..self.full()).all(|x| {
            let (a, b) = (x.count_ones() as usize, n - x.count_ones() as usize);
            let l = self.lambda(x);
            !((l == 0 && a >= 1 && b >= 1) || (l == 1 && a >= 2 && b >= 2))
        })
    }
}

/// Every subset of `w`.
pub fn subsets_of(w: u64) -> Vec<u64> {
    let mut out = vec![0];
    let mut s = w;
    while s != 0 {
        out.push(s);
        s = (s - 1) & w;
    }
    out
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|x| x.count_ones() as usize == k).collect()
}

/// Isomorphism by backtracking over bijections that carry circuits to
/// circuits.
pub fn isomorphic(a: &Cols, b: &Cols) -> bool {
    if a.len() != b.len() || a.matroid_rank() != b.matroid_rank() {
        return false;
    }
    let ca = a.circuits();
    let cb: HashSet<u64> = b.circuits().into_iter().collect();
    if ca.len() != cb.len() {
        return false;
    }
    let mut hist_a: Vec<usize> = ca.iter().map(|c| c.count_ones() as usize).collect();
    let mut hist_b: Vec<usize> = cb.iter().map(|c| c.count_ones() as usize).collect();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return false;
    }
    let n = a.len();
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &c in &ca {
        by_top[63 - c.leading_zeros() as usize].push(c);
    }
    let mut image = vec![0usize; n];
    let mut used = 0u64;
    fn go(k: usize, n: usize, by_top: &[Vec<u64>], cb: &HashSet<u64>, image: &mut [usize], used: &mut u64) -> bool {
        if k == n {
            return true;
        }
        for t in 0..n {
            if *used >> t & 1 == 1 {
                continue;
            }
            image[k] = t;
            let ok = by_top[k].iter().all(|&c| {
                let mapped = (0..=k).filter(|&i| c >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << image[i]);
                cb.contains(&mapped)
            });
            if ok {
                *used |= 1 << t;
                if go(k + 1, n, by_top, cb, image, used) {
                    return true;
                }
                *used &= !(1 << t);
            }
        }
        false
    }
    go(0, n, &by_top, &cb, &mut image, &mut used)
}

/// Minor containment by trying every independent contraction set and every
/// deletion set of the right sizes.
pub fn has_minor(m: &Cols, n: &Cols) -> bool {
    let (rm, rn) = (m.matroid_rank(), n.matroid_rank());
    if n.len() > m.len() || rn > rm || m.len() - n.len() < rm - rn {
        return false;
    }
    let k = rm - rn;
    let drop = m.len() - n.len() - k;
    for c in subsets_of_size(m.len(), k) {
        if m.rank(c) != k {
            continue;
        }
        for d in subsets_of_size(m.len(), drop) {
            if d & c != 0 {
                continue;
            }
            let minor = m.minor(c, d);
            if minor.matroid_rank() == rn && isomorphic(&minor, n) {
                return true;
            }
        }
    }
    false
}

/// A random binary matroid with `n` columns in dimension `r`.
pub fn random_cols(rng: &mut impl Rng, r: usize, n: usize) -> Cols {
    Cols { cols: (0..n).map(|_| rng.gen_range(0..1u64 << r)).collect() }
}

/// The same matroid after a random invertible change of coordinates and a
/// random reordering of the columns.
pub fn scramble(rng: &mut impl Rng, c: &Cols, r: usize) -> Cols {
    let rows: Vec<u64> = loop {
        let rows: Vec<u64> = (0..r).map(|_| rng.gen_range(0..1u64 << r)).collect();
        let mut basis = Vec::new();
        if rows.iter().all(|&v| insert(&mut basis, v)) {
            break rows;
        }
    };
    let apply = |v: u64| (0..r).fold(0u64, |acc, i| acc | (((rows[i] & v).count_ones() as u64) & 1) << i);
    let mut cols: Vec<u64> = c.cols.iter().map(|&v| apply(v)).collect();
    cols.shuffle(rng);
    Cols { cols }
}

pub fn to_matroid(c: &Cols) -> BinaryMatroid {
    let labels = (0..c.len()).map(|i| format!("x{i}")).collect();
    BinaryMatroid::from_columns(labels, &c.cols).expect("distinct labels")
}

/// Columns of `Δ_r` in the order `e1..er, a1..a(r-1), b1..b(r-1)`, written
/// out from the definition of the triangular Möbius matroid.
pub fn delta_cols(r: usize) -> Cols {
    let u = |i: usize| 1u64 << (i - 1);
    let mut cols: Vec<u64> = (1..=r).map(u).collect();
    cols.extend((1..r).map(|i| u(i) ^ u(r)));
    cols.extend((1..r - 1).map(|i| u(i) ^ u(i + 1)));
    cols.push(u(1) ^ u(r - 1) ^ u(r));
    Cols { cols }
}
