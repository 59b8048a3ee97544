//! Graphs whose cycle or bond matroids appear in the catalog.

use crate::matroid::{BinaryMatroid, SubsetMask};

/// A multigraph on vertices `0..n_vertices` with labelled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDesc {
    pub n_vertices: usize,
    /// `(label, u, v)`.
    pub edges: Vec<(String, usize, usize)>,
}

impl GraphDesc {
    pub fn new(n_vertices: usize) -> Self {
        GraphDesc { n_vertices, edges: Vec::new() }
    }

    pub fn edge(mut self, label: impl Into<String>, u: usize, v: usize) -> Self {
        assert!(u < self.n_vertices && v < self.n_vertices, "vertex out of range");
        self.edges.push((label.into(), u, v));
        self
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.0.clone()).collect()
    }

    /// Cycle matroid `M(G)` from the vertex-edge incidence matrix.
    pub fn cycle_matroid(&self) -> BinaryMatroid {
        let cols: Vec<u64> = self.edges.iter().map(|&(_, u, v)| (1u64 << u) ^ (1u64 << v)).collect();
        BinaryMatroid::from_columns(self.labels(), &cols).expect("graph fits in 64 vertices")
    }

    /// Bond matroid `M*(G)`.
    pub fn bond_matroid(&self) -> BinaryMatroid {
        self.cycle_matroid().dual()
    }

    /// Vertices incident with some edge of `x`.
    pub fn vertices_of(&self, x: SubsetMask) -> u64 {
        x.iter().fold(0u64, |acc, i| acc | (1 << self.edges[i].1) | (1 << self.edges[i].2))
    }

    /// Cyclomatic number `|X| - r(X)` in the cycle matroid.
    pub fn cyclomatic(&self, x: SubsetMask) -> usize {
        x.len() - self.cycle_matroid().rank_of(x)
    }

    /// Whether the edges of `x` induce a connected subgraph.
    pub fn is_connected_on(&self, x: SubsetMask) -> bool {
        let Some(start) = x.first() else {
            return true;
        };
        let mut reached = (1u64 << self.edges[start].1) | (1u64 << self.edges[start].2);
        loop {
            let before = reached;
            for i in x.iter() {
                let (_, u, v) = self.edges[i];
                if reached & ((1 << u) | (1 << v)) != 0 {
                    reached |= (1 << u) | (1 << v);
                }
            }
            if reached == before {
                break;
            }
        }
        reached == self.vertices_of(x)
    }
}

/// The complete graph `K5`.
pub fn k5() -> GraphDesc {
    let mut g = GraphDesc::new(5);
    for u in 0..5 {
        for v in u + 1..5 {
            g = g.edge(format!("{u}{v}"), u, v);
        }
    }
    g
}

/// The complete bipartite graph `K3,3`.
pub fn k33() -> GraphDesc {
    let mut g = GraphDesc::new(6);
    for u in 0..3 {
        for v in 3..6 {
            g = g.edge(format!("{u}{v}"), u, v);
        }
    }
    g
}

/// Cubic Möbius ladder on `2n` vertices.
///
/// Rim edges are `e1..en` then `a1..an`; spoke `bi` joins opposite rim
/// vertices. Its bond matroid is the triangular Möbius matroid of rank
/// `n + 1` with `e(n+1)` deleted.
pub fn cubic_ladder(vertices: usize) -> GraphDesc {
    assert!(vertices >= 4 && vertices % 2 == 0, "cubic ladder needs an even vertex count of at least 4");
    let n = vertices / 2;
    let m = 2 * n;
    let mut g = GraphDesc::new(m);
    for i in 1..=n {
        g = g.edge(format!("e{i}"), i - 1, i);
    }
    for i in 1..=n {
        g = g.edge(format!("a{i}"), (i + n - 1) % m, (i + n) % m);
    }
    for i in 1..=n {
        g = g.edge(format!("b{i}"), i % m, (i + n) % m);
    }
    g
}

/// Quartic Möbius ladder on an odd number `2n + 1` of vertices.
///
/// Rim edge `ei` joins `v(ni)` and `v(ni + 1)`, chord `ci` joins
/// `v(n(i - 1))` and `v(ni)`. Its bond matroid is the triadic Möbius matroid
/// of rank `2n + 2` with `e(2n+2)` deleted.
pub fn quartic_ladder(vertices: usize) -> GraphDesc {
    assert!(vertices >= 3 && vertices % 2 == 1, "quartic ladder needs an odd vertex count of at least 3");
    let n = (vertices - 1) / 2;
    let m = vertices;
    let mut g = GraphDesc::new(m);
    for i in 1..=m {
        g = g.edge(format!("e{i}"), (n * i) % m, (n * i + 1) % m);
    }
    for i in 1..=m {
        g = g.edge(format!("c{i}"), (n * (i - 1)) % m, (n * i) % m);
    }
    g
}

/// Wheel with `r` spokes `s1..sr` and rim edges `r1..rr`; the hub is vertex `r`.
pub fn wheel(r: usize) -> GraphDesc {
    assert!(r >= 2, "wheel needs at least two spokes");
    let mut g = GraphDesc::new(r + 1);
    for i in 0..r {
        g = g.edge(format!("s{}", i + 1), r, i);
    }
    for i in 0..r {
        g = g.edge(format!("r{}", i + 1), i, (i + 1) % r);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_ranks() {
        let k = k5().cycle_matroid();
        assert_eq!((k.rank(), k.len()), (4, 10));
        let k = k33().cycle_matroid();
        assert_eq!((k.rank(), k.len()), (5, 9));
        assert!(k.triangles().is_empty());
        let w = wheel(4).cycle_matroid();
        assert_eq!((w.rank(), w.len()), (4, 8));
    }

    #[test]
    fn ladders_are_regular_graphs() {
        for v in [4, 6, 8, 10] {
            let g = cubic_ladder(v);
            let mut deg = vec![0; v];
            for &(_, a, b) in &g.edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|&d| d == 3), "{v}: {deg:?}");
        }
        for v in [5, 7, 9] {
            let g = quartic_ladder(v);
            let mut deg = vec![0; v];
            for &(_, a, b) in &g.edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|&d| d == 4), "{v}: {deg:?}");
        }
    }

    #[test]
    fn cyclomatic_number_of_a_cycle() {
        let g = wheel(3);
        let rim = SubsetMask::from_indices(3..6);
        assert_eq!(g.cyclomatic(rim), 1);
        assert!(g.is_connected_on(rim));
        assert!(!g.is_connected_on(SubsetMask::from_indices([0, 4])));
    }
}
