mod common;

use binmat::bmx::{parse_bmx, to_bmx};
use binmat::deltawye::{delta_y, is_coindependent_triangle};
use binmat::gen::{generate, Direction, GenFilter};
use binmat::gf2::fundamental_graph;
use binmat::{BinaryMatroid, SubsetMask};
use common::{isomorphic, scramble, to_matroid, Cols};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cols(max_rank: usize, max_len: usize) -> impl Strategy<Value = Cols> {
    (2..=max_rank)
        .prop_flat_map(move |r| prop::collection::vec(1..1u64 << r, r..=max_len))
        .prop_map(|cols| Cols { cols })
}

/// `Δ_T(M)` as `P_T(M(K4), M) \ T`: a new coordinate `z` carries the three
/// `M(K4)` elements off the triangle, each taking the label of the triangle
/// element it shares no triangle with.
fn delta_by_parallel_connection(c: &Cols, t: [usize; 3]) -> Cols {
    let z = 1u64 << 63;
    let mut out = c.cols.clone();
    out[t[0]] = z | c.cols[t[1]];
    out[t[1]] = z | c.cols[t[0]];
    out[t[2]] = z;
    Cols { cols: out }
}

/// Classes of single-element extensions by trying every nonzero column and
/// merging with the brute isomorphism test.
fn brute_extension_classes(c: &Cols, r: usize, keep: impl Fn(&Cols) -> bool) -> usize {
    let mut reps: Vec<Cols> = Vec::new();
    for v in 1..1u64 << r {
        let mut e = c.clone();
        e.cols.push(v);
        if keep(&e) && !reps.iter().any(|x| isomorphic(x, &e)) {
            reps.push(e);
        }
    }
    reps.len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rank_matches_elimination(c in cols(6, 14), x in any::<u64>()) {
        let m = to_matroid(&c);
        let x = x & c.full();
        prop_assert_eq!(m.rank_of(SubsetMask(x)), c.rank(x));
        prop_assert_eq!(m.rank(), c.matroid_rank());
    }

    #[test]
    fn dual_rank_formula(c in cols(5, 11), x in any::<u64>()) {
        let m = to_matroid(&c);
        let d = m.dual();
        let x = x & c.full();
        let expected = x.count_ones() as usize + c.rank(c.full() & !x) - c.matroid_rank();
        prop_assert_eq!(d.rank_of(SubsetMask(x)), expected);
        prop_assert!(d.dual().same_labelled(&m));
    }

    #[test]
    fn bmx_round_trip(c in cols(6, 14)) {
        let m = to_matroid(&c);
        let back = parse_bmx(&to_bmx(&m)).unwrap();
        prop_assert!(back.same_labelled(&m));
        prop_assert_eq!(to_bmx(&back), to_bmx(&m));
    }

    #[test]
    fn canonical_key_ignores_coordinates(c in cols(5, 10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = 64 - c.cols.iter().fold(0u64, |a, &b| a | b).leading_zeros() as usize;
        let s = scramble(&mut rng, &c, r);
        let (a, b) = (to_matroid(&c), to_matroid(&s));
        prop_assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn delta_y_matches_parallel_connection(c in cols(5, 11)) {
        let m = to_matroid(&c);
        for t in m.triangles() {
            if !is_coindependent_triangle(&m, t) {
                continue;
            }
            let idx: Vec<usize> = t.iter().collect();
            let oracle = to_matroid(&delta_by_parallel_connection(&c, [idx[0], idx[1], idx[2]]));
            let lib = delta_y(&m, t).unwrap();
            prop_assert!(lib.same_labelled(&oracle));
            prop_assert_eq!(lib.rank(), m.rank() + 1);
        }
    }

    #[test]
    fn connectivity_flags_match_enumeration(c in cols(4, 10)) {
        let m = to_matroid(&c);
        prop_assert_eq!(m.is_3connected(), c.is_3connected());
        prop_assert_eq!(m.is_internally_4connected(), c.i4c_violation().is_none());
    }

    #[test]
    fn pivoting_preserves_the_matroid(c in cols(5, 11), pick in any::<prop::sample::Index>()) {
        let m = to_matroid(&c);
        let basis: Vec<String> = m.names(m.lex_basis());
        let g = fundamental_graph(&m, &basis).unwrap();
        prop_assert!(g.to_matroid().same_labelled(&m));
        let edges: Vec<(String, String)> = g.edge_set().into_iter().collect();
        if !edges.is_empty() {
            let (x, y) = &edges[pick.index(edges.len())];
            let p = g.pivot(x, y).unwrap();
            prop_assert!(p.to_matroid().same_labelled(&m));
            prop_assert!(p.basis_pos(y).is_some() && p.cobasis_pos(x).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generate_is_complete(c in cols(4, 7)) {
        let m = to_matroid(&c);
        let r = m.rank();
        let reduced = Cols::of(&m);
        prop_assert_eq!(generate(&m, Direction::Extend, &GenFilter::new()).len(), brute_extension_classes(&reduced, r, |_| true));
        prop_assert_eq!(
            generate(&m, Direction::Extend, &GenFilter::new().three_connected()).len(),
            brute_extension_classes(&reduced, r, |e| e.is_3connected())
        );
        let d = m.dual();
        let dual_cols = Cols::of(&d);
        prop_assert_eq!(
            generate(&m, Direction::Coextend, &GenFilter::new()).len(),
            brute_extension_classes(&dual_cols, d.rank(), |_| true)
        );
    }
}

#[test]
fn catalog_triangles_match_enumeration() {
    for e in binmat::catalog::census() {
        let m: BinaryMatroid = e.id.build().unwrap();
        let c = Cols::of(&m);
        let mut lib: Vec<u64> = m.triangles().into_iter().map(|t| t.0).collect();
        lib.sort_unstable();
        assert_eq!(lib, c.triangles(), "{}", e.name);
        assert_eq!(m.triads().len(), Cols::of(&m.dual()).triangles().len(), "{}", e.name);
    }
}
