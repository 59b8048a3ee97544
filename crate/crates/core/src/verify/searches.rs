use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::catalog::{delta4_plus, mk33, mobius, MobiusKind};
use crate::gen::{generate, generate_labelled, quad_coextensions, Direction, GenFilter};
use crate::isomin::has_minor;
use crate::matroid::{BinaryMatroid, SubsetMask};

/// Applies the steps of `plan` in turn, keeping one matroid per
/// isomorphism class at each layer. Layer `k` of the result holds the
/// matroids after step `k + 1`.
pub fn sweep(start: &[BinaryMatroid], plan: &[Direction], f: &GenFilter) -> Vec<Vec<BinaryMatroid>> {
    let mut layers = Vec::with_capacity(plan.len());
    let mut layer: Vec<BinaryMatroid> = start.to_vec();
    for &dir in plan {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for m in &layer {
            for e in generate(m, dir, f) {
                if seen.insert(e.canonical_key().clone()) {
                    next.push(e);
                }
            }
        }
        layers.push(next.clone());
        layer = next;
    }
    layers
}

/// Minor outcomes of one candidate batch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batch {
    pub candidates: usize,
    pub with_mk33: usize,
    pub with_delta4_plus: usize,
    /// Candidates with at least one of the two minors.
    pub with_either: usize,
    /// Per parent, the number of single-element steps kept before the
    /// candidates were built.
    pub per_parent: Vec<usize>,
}

impl Batch {
    fn record(&mut self, c: &BinaryMatroid, k33: &BinaryMatroid, plus: &BinaryMatroid) {
        let a = has_minor(c, k33).is_some();
        let b = has_minor(c, plus).is_some();
        self.candidates += 1;
        self.with_mk33 += a as usize;
        self.with_delta4_plus += b as usize;
        self.with_either += (a || b) as usize;
    }
}

/// Counts from the `Δ4` quad pipeline. The class is the labelled
/// 3-connected binary matroids with neither an `M(K3,3)`- nor a
/// `Δ4⁺`-minor; `EX` and `CO` are its members among the labelled
/// extensions and coextensions of `Δ4` by `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineCounts {
    pub ex: usize,
    pub co: usize,
    /// Members of `CO` with a four-element circuit-cocircuit.
    pub co_with_quad: usize,
    /// For each member of `EX`, the number of triangles containing `e`.
    pub ex_triangles_on_e: Vec<usize>,
    /// Quad coextensions on each triangle through `e` in `EX`.
    pub quad_on_ex: Batch,
    /// `CO` extended by `f`, then quad-coextended on a triangle through `e` and `f`.
    pub co_ext_triangle: Batch,
    /// `EX` extended by `f`, then quad-coextended on a triangle through `e` and `f`.
    pub ex_ext_triangle: Batch,
    /// `CO` coextended by `f`, then closed by `g = e + f` and quad-coextended.
    pub co_coext_closed: Batch,
    /// `EX` coextended by `f`, then closed and quad-coextended.
    pub ex_coext_closed: Batch,
    /// `CO` extended by `f` with no triangle through `e` and `f`, then closed and quad-coextended.
    pub co_ext_closed: Batch,
    /// `EX` extended likewise.
    pub ex_ext_closed: Batch,
    /// A triangle received more than one quad coextension.
    pub quad_not_unique: bool,
}

fn has_quad(m: &BinaryMatroid) -> bool {
    m.circuits_up_to(4, crate::matroid::CircuitKind::Circuit)
        .into_iter()
        .any(|c| c.len() == 4 && m.is_cocircuit(c))
}

fn triangles_through(m: &BinaryMatroid, a: usize, b: usize) -> Vec<SubsetMask> {
    m.triangles().into_iter().filter(|t| t.contains(a) && t.contains(b)).collect()
}

/// Runs the quad pipeline on `Δ4` and tallies every batch.
pub fn prop25_pipeline() -> PipelineCounts {
    let k33 = mk33();
    let plus = delta4_plus();
    let d4 = mobius(MobiusKind::Triangular, 4).expect("delta4");
    let class = GenFilter::new().three_connected().excluding(k33.clone()).excluding(plus.clone());
    let ex = generate_labelled(&d4, Direction::Extend, "e", &class).expect("fresh label");
    let co = generate_labelled(&d4, Direction::Coextend, "e", &class).expect("fresh label");
    let mut out = PipelineCounts {
        ex: ex.len(),
        co: co.len(),
        co_with_quad: co.iter().filter(|m| has_quad(m)).count(),
        ..Default::default()
    };
    let quad = |m: &BinaryMatroid, t: SubsetMask, batch: &mut Batch, flag: &mut bool| {
        let q = quad_coextensions(m, t, "x").expect("fresh label");
        *flag |= q.len() != 1;
        for c in &q {
            batch.record(c, &k33, &plus);
        }
    };
    let mut not_unique = false;
    let closed = |m: &BinaryMatroid| -> (BinaryMatroid, SubsetMask) {
        let (e, f) = (m.idx("e").expect("e"), m.idx("f").expect("f"));
        let g = m.extend("g", m.col(e) ^ m.col(f)).expect("fresh label");
        let t = g.mask(&["e", "f", "g"]).expect("labels");
        (g, t)
    };

    for n in &ex {
        let e = n.idx("e").expect("e");
        let ts: Vec<SubsetMask> = n.triangles().into_iter().filter(|t| t.contains(e)).collect();
        out.ex_triangles_on_e.push(ts.len());
        for t in ts {
            quad(n, t, &mut out.quad_on_ex, &mut not_unique);
        }
    }
    for (parents, from_co) in [(&co, true), (&ex, false)] {
        for n in parents.iter() {
            let exts = generate_labelled(n, Direction::Extend, "f", &class).expect("fresh label");
            let (mut with, mut without) = (0, 0);
            for m in &exts {
                let ts = triangles_through(m, m.idx("e").expect("e"), m.idx("f").expect("f"));
                if ts.is_empty() {
                    without += 1;
                    let (g, t) = closed(m);
                    let batch = if from_co { &mut out.co_ext_closed } else { &mut out.ex_ext_closed };
                    quad(&g, t, batch, &mut not_unique);
                } else {
                    with += 1;
                    let batch = if from_co { &mut out.co_ext_triangle } else { &mut out.ex_ext_triangle };
                    for t in ts {
                        quad(m, t, batch, &mut not_unique);
                    }
                }
            }
            let (bt, bc) = if from_co {
                (&mut out.co_ext_triangle, &mut out.co_ext_closed)
            } else {
                (&mut out.ex_ext_triangle, &mut out.ex_ext_closed)
            };
            bt.per_parent.push(with);
            bc.per_parent.push(without);
        }
    }
    for (parents, from_co) in [(&co, true), (&ex, false)] {
        for n in parents.iter() {
            let cos = generate_labelled(n, Direction::Coextend, "f", &class).expect("fresh label");
            for m in &cos {
                let (g, t) = closed(m);
                let batch = if from_co { &mut out.co_coext_closed } else { &mut out.ex_coext_closed };
                quad(&g, t, batch, &mut not_unique);
            }
            let batch = if from_co { &mut out.co_coext_closed } else { &mut out.ex_coext_closed };
            batch.per_parent.push(cos.len());
        }
    }
    out.quad_not_unique = not_unique;
    out
}
