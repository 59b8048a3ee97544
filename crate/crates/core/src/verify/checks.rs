use std::collections::{BTreeMap, BTreeSet};

use super::searches::{prop25_pipeline, sweep, Batch};
use super::Outcome;
use crate::catalog::{census, delta4_plus, delta4_plus_candidates, fano, fano_dual, mk33, mk5, mobius, MobiusKind, Sporadic};
use crate::deltawye::{allowable_triangles, delta_multi, delta_y, legitimate_sets, TriangleMultiset};
use crate::gen::{generate, generate_labelled, is_splitter, Direction, GenFilter};
use crate::isomin::{has_minor, is_cographic, is_isomorphic};
use crate::matroid::{BinaryMatroid, CircuitKind, SubsetMask};

fn delta(r: usize) -> BinaryMatroid {
    mobius(MobiusKind::Triangular, r).expect("triangular rank in range")
}

fn upsilon(r: usize) -> BinaryMatroid {
    mobius(MobiusKind::Triadic, r).expect("triadic rank in range")
}

fn has_k33(m: &BinaryMatroid) -> bool {
    has_minor(m, &mk33()).is_some()
}

fn set(m: &BinaryMatroid, labels: &[&str]) -> SubsetMask {
    m.mask(labels).expect("labels present")
}

fn ex_k33() -> GenFilter {
    GenFilter::new().three_connected().excluding(mk33())
}

/// The catalog name of `m`'s class among the sporadic and Möbius matroids.
fn named(m: &BinaryMatroid) -> Option<String> {
    let (r, n) = (m.rank(), m.len());
    for s in Sporadic::ALL {
        if s.shape() == (r, n) && s.build().canonical_key() == m.canonical_key() {
            return Some(s.display_name().to_string());
        }
    }
    if r >= 3 && n == 3 * r - 2 && delta(r).canonical_key() == m.canonical_key() {
        return Some(format!("Δ{r}"));
    }
    if r >= 4 && r % 2 == 0 && n == 2 * r - 1 && upsilon(r).canonical_key() == m.canonical_key() {
        return Some(format!("Υ{r}"));
    }
    None
}

/// `K33` when the minor is present, else the catalog name, else `other`.
fn outcome_tag(m: &BinaryMatroid) -> String {
    if has_k33(m) {
        "K33".into()
    } else {
        named(m).unwrap_or_else(|| "other".into())
    }
}

fn all_or_count(good: usize, total: usize) -> String {
    if good == total {
        "all".into()
    } else {
        format!("{good} of {total}")
    }
}

/// Adds `label` as the third point of the line through `a` and `b`.
fn close_triangle(m: &BinaryMatroid, label: &str, a: &str, b: &str) -> BinaryMatroid {
    let (i, j) = (m.idx(a).expect("label"), m.idx(b).expect("label"));
    m.extend(label, m.col(i) ^ m.col(j)).expect("fresh label")
}

fn with_triad(m: &BinaryMatroid, label: &str, pair: &[&str]) -> BinaryMatroid {
    m.coextend_cocycle(label, set(m, pair)).expect("fresh label")
}

pub(super) fn census_flags() -> Outcome {
    let table: [(&str, usize, usize); 27] = [
        ("F7", 3, 7),
        ("F7*", 4, 7),
        ("Δ4", 4, 10),
        ("M(K5)", 4, 10),
        ("C11", 4, 11),
        ("M4,11", 4, 11),
        ("C12", 4, 12),
        ("D12", 4, 12),
        ("M4,13", 4, 13),
        ("M4,14", 4, 14),
        ("PG(3,2)", 4, 15),
        ("M5,11", 5, 11),
        ("T12/e", 5, 11),
        ("M5,12a", 5, 12),
        ("M5,12b", 5, 12),
        ("Δ5", 5, 13),
        ("M5,13", 5, 13),
        ("Υ6", 6, 11),
        ("T12", 6, 12),
        ("M6,13", 6, 13),
        ("Δ6", 6, 16),
        ("M7,15", 7, 15),
        ("Δ7", 7, 19),
        ("Υ8", 8, 15),
        ("M9,18", 9, 18),
        ("Υ10", 10, 19),
        ("M11,21", 11, 21),
    ];
    let expected_rows: BTreeSet<String> = table.iter().map(|(n, r, s)| format!("{n}:{r}:{s}")).collect();
    let rows = census();
    let (f7, f7d) = (fano(), fano_dual());
    let mut computed_rows = BTreeSet::new();
    let mut non_v4c_sporadic = Vec::new();
    let mut non_i4c = 0;
    let mut triads_m511 = 0;
    for e in &rows {
        let m = e.id.build().expect("census id");
        let name = if is_isomorphic(&m, &f7).is_some() {
            "F7".to_string()
        } else if is_isomorphic(&m, &f7d).is_some() {
            "F7*".to_string()
        } else {
            e.name.clone()
        };
        computed_rows.insert(format!("{name}:{}:{}", e.rank, e.size));
        non_i4c += !e.internally_4connected as usize;
        if e.family == crate::catalog::Family::Sporadic && !e.vertically_4connected {
            non_v4c_sporadic.push(e.name.clone());
            triads_m511 = e.triads;
        }
    }
    let sporadic = rows.iter().filter(|e| e.family == crate::catalog::Family::Sporadic).count();
    let fmt = |rows_match: bool, n: usize, s: usize, bad: usize, nv: &[String], t: usize| {
        format!("table match={rows_match} entries={n} sporadic={s} not i4c={bad} sporadic not v4c={nv:?} triads there={t}")
    };
    let detail = rows
        .iter()
        .filter(|e| e.family != crate::catalog::Family::Sporadic && !e.vertically_4connected)
        .map(|e| format!("{} has {} triads", e.name, e.triads))
        .collect::<Vec<_>>()
        .join("; ");
    Outcome::new(
        fmt(true, 27, 18, 0, &["M5,11".to_string()], 1),
        fmt(computed_rows == expected_rows, rows.len(), sporadic, non_i4c, &non_v4c_sporadic, triads_m511),
    )
    .with_detail(format!("triadic Möbius entries are not vertically 4-connected: {detail}"))
}

pub(super) fn sporadics_k33_free() -> Outcome {
    let with: Vec<&str> = Sporadic::ALL.iter().filter(|s| has_k33(&s.build())).map(|s| s.display_name()).collect();
    Outcome::new("none of 18", if with.is_empty() { "none of 18".to_string() } else { format!("{with:?}") })
}

pub(super) fn t12_neighbours() -> Outcome {
    let t12 = Sporadic::T12.build();
    let f = ex_k33().excluding(delta(4));
    let mut parts = Vec::new();
    for (tag, base) in [("T12\\e", t12.delete(SubsetMask::singleton(0))), ("T12/e", t12.contract(SubsetMask::singleton(0)))] {
        let mut classes = BTreeSet::new();
        for dir in [Direction::Extend, Direction::Coextend] {
            for m in generate(&base, dir, &f) {
                classes.insert((m.canonical_key().clone(), named(&m).unwrap_or_else(|| "other".into())));
            }
        }
        let names: Vec<String> = classes.into_iter().map(|(_, n)| n).collect();
        parts.push(format!("{tag}: {names:?}"));
    }
    Outcome::new("T12\\e: [\"T12\"]; T12/e: [\"T12\"]", parts.join("; "))
        .with_detail("T12 is edge-transitive, so the choice of e is immaterial")
}

pub(super) fn splitters() -> Outcome {
    let a = is_splitter(&Sporadic::T12.build(), &[mk33(), delta(4)]);
    let b = is_splitter(&mk5(), &[fano(), fano_dual(), mk33()]);
    Outcome::new("T12: Ok(true); M(K5): Ok(true)", format!("T12: {a:?}; M(K5): {b:?}"))
}

pub(super) fn delta_on_rim_triangle() -> Outcome {
    let d4 = delta(4);
    let m = delta_y(&d4, set(&d4, &["a1", "e1", "e4"])).expect("coindependent triangle");
    Outcome::new("K33", outcome_tag(&m))
}

pub(super) fn double_delta_on_augmented_d4() -> Outcome {
    let d4 = delta(4);
    let n = d4.extend("b1'", d4.col(d4.idx("b1").expect("b1"))).expect("fresh label");
    let first = delta_y(&n, set(&n, &["a1", "a2", "b1'"])).expect("coindependent triangle");
    let second = delta_y(&first, set(&first, &["b1", "e1", "e2"])).expect("coindependent triangle");
    Outcome::new("K33", outcome_tag(&second))
}

pub(super) fn fano_three_lines() -> Outcome {
    let f = fano();
    let lines = f.triangles();
    let mut results = BTreeSet::new();
    let mut triples = 0;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            for k in j + 1..lines.len() {
                let common = lines[i] & lines[j] & lines[k];
                if !common.is_empty() {
                    continue;
                }
                triples += 1;
                let ts = TriangleMultiset::new(&f, vec![lines[i], lines[j], lines[k]], CircuitKind::Circuit).expect("lines are triangles");
                let m = delta_multi(&f, &ts).expect("delta of three lines");
                let dual_d4 = is_isomorphic(&m, &delta(4).dual()).is_some();
                results.insert(format!("Δ4*={dual_d4} minor={}", has_k33(&m)));
            }
        }
    }
    Outcome::new("[\"Δ4*=true minor=true\"]", format!("{:?}", results.into_iter().collect::<Vec<_>>()))
        .with_detail(format!("{triples} triples of lines without a common point"))
}

pub(super) fn m411_legitimate_sets() -> Outcome {
    let m = Sporadic::M4_11.build();
    let m511 = Sporadic::M5_11.build();
    let allowable = allowable_triangles(&m);
    let to_m511 = allowable
        .iter()
        .filter(|&&t| delta_y(&m, t).map(|d| is_isomorphic(&d, &m511).is_some()).unwrap_or(false))
        .count();
    let sets: Vec<TriangleMultiset> = legitimate_sets(&m).into_iter().filter(|s| s.len() >= 2).collect();
    let with = sets.iter().filter(|s| has_k33(&delta_multi(&m, s).expect("legitimate set"))).count();
    Outcome::new(
        "allowable=3 single Δ-Y to M5,11=all larger legitimate sets with minor=all",
        format!("allowable={} single Δ-Y to M5,11={} larger legitimate sets with minor={}", allowable.len(), all_or_count(to_m511, allowable.len()), all_or_count(with, sets.len())),
    )
    .with_detail(format!("{} legitimate sets with two or more triangles", sets.len()))
}

pub(super) fn delta4_plus_basics() -> Outcome {
    let c = delta4_plus_candidates().len();
    let free = !has_k33(&delta4_plus());
    Outcome::new("quad coextensions=1 free of the minor=true", format!("quad coextensions={c} free of the minor={free}"))
}

pub(super) fn delta4_plus_sweep() -> Outcome {
    let p = delta4_plus();
    let f = GenFilter::new().three_connected();
    let mut total = 0;
    let mut good = 0;
    for dir in [Direction::Extend, Direction::Coextend] {
        for m in generate_labelled(&p, dir, "x", &f).expect("fresh label") {
            let quad = set(&m, &["a1", "a2", "b1", "e5"]);
            if m.is_circuit(quad) && m.is_cocircuit(quad) {
                continue;
            }
            total += 1;
            good += has_k33(&m) as usize;
        }
    }
    Outcome::new("all", all_or_count(good, total)).with_detail(format!("{total} labelled extensions and coextensions without the quad"))
}

pub(super) fn upsilon_tip_extensions() -> Outcome {
    let mut parts = Vec::new();
    for r in [4, 6, 8] {
        let u = upsilon(r);
        let all = (1u64 << r) - 1;
        let mut tags = Vec::new();
        for col in [all, all & !(1 << (r - 1))] {
            let m = u.extend("t", col).expect("fresh label");
            let tag = if r == 4 {
                if m.is_vertically_4connected() { "v4c".to_string() } else { "not v4c".to_string() }
            } else {
                outcome_tag(&m)
            };
            tags.push(tag);
        }
        parts.push(format!("r={r}: {}", tags.join(", ")));
    }
    Outcome::new("r=4: not v4c, not v4c; r=6: K33, T12; r=8: K33, K33", parts.join("; "))
}

pub(super) fn delta_extensions() -> Outcome {
    let f = ex_k33();
    let d4: Vec<String> = generate(&delta(4), Direction::Extend, &f).iter().map(|m| named(m).unwrap_or_else(|| "other".into())).collect::<BTreeSet<_>>().into_iter().collect();
    let d5 = generate(&delta(5), Direction::Extend, &f).len();
    Outcome::new("Δ4: [\"C11\", \"M4,11\"]; Δ5: 0", format!("Δ4: {d4:?}; Δ5: {d5}"))
}

/// The cocircuit shapes allowed for coextensions of `Δr`, as label sets.
pub(crate) fn coextension_shapes(r: usize) -> BTreeSet<BTreeSet<String>> {
    let a = |i: usize| format!("a{i}");
    let b = |i: usize| format!("b{i}");
    let mut out = BTreeSet::new();
    let mut add = |v: Vec<String>| {
        out.insert(v.into_iter().collect::<BTreeSet<_>>());
    };
    for i in 1..=r - 2 {
        let t = [a(i), a(i + 1), b(i)];
        for skip in 0..3 {
            add(t.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, x)| x.clone()).collect());
        }
        add(t.to_vec());
    }
    for i in 1..=r - 3 {
        add(vec![a(i + 1), a(i + 2), b(i), b(i + 2)]);
        add(vec![a(i + 1), a(i + 2), b(i), b(i + 1), b(i + 2)]);
    }
    add(vec![a(1), a(2), b(2), b(r - 1)]);
    add(vec![a(1), a(2), b(1), b(2), b(r - 1)]);
    add(vec![a(1), b(r - 1)]);
    add(vec![a(r - 1), b(r - 1)]);
    add(vec![a(1), a(r - 1), b(1)]);
    add(vec![a(1), a(r - 1), b(r - 2)]);
    add(vec![a(1), a(r - 1), b(1), b(r - 1)]);
    add(vec![a(1), a(r - 1), b(r - 2), b(r - 1)]);
    out
}

/// `C* - e` for the cocircuit of `m` through `e` avoiding `e1..er`.
fn cocircuit_off_rim(m: &BinaryMatroid, r: usize) -> BTreeSet<String> {
    let rim: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    let hyperplane = m.closure(m.mask(&rim).expect("rim labels"));
    let c = m.ground() - hyperplane;
    m.names(c).into_iter().filter(|l| l != "e").collect()
}

pub(super) fn delta5_coextensions() -> Outcome {
    let co = generate_labelled(&delta(5), Direction::Coextend, "e", &ex_k33()).expect("fresh label");
    let shapes = coextension_shapes(5);
    let matched = co.iter().filter(|m| shapes.contains(&cocircuit_off_rim(m, 5))).count();
    let classes: BTreeSet<_> = co.iter().map(|m| m.canonical_key().clone()).collect();
    Outcome::new("labelled=24 shapes matched=all", format!("labelled={} shapes matched={}", co.len(), all_or_count(matched, co.len())))
        .with_detail(format!("{} isomorphism classes", classes.len()))
}

pub(super) fn delta6_special_coextensions() -> Outcome {
    let d6 = delta(6);
    let base = ["a2", "a3", "b1", "b3", "b4", "b5"];
    let mut good = 0;
    for extra in [&[][..], &["a5"][..], &["b2"][..], &["a5", "b2"][..]] {
        let labels: Vec<&str> = base.iter().chain(extra.iter()).copied().collect();
        let m = d6.coextend("e", set(&d6, &labels)).expect("fresh label");
        good += has_k33(&m) as usize;
    }
    Outcome::new("all", all_or_count(good, 4))
}

/// Allowable triangles of `Δr`: those through a spoke.
fn spoke_triangles(m: &BinaryMatroid, r: usize) -> Vec<SubsetMask> {
    let spokes = m.mask(&(1..r).map(|i| format!("b{i}")).collect::<Vec<_>>()).expect("spokes");
    m.triangles().into_iter().filter(|t| t.intersects(spokes)).collect()
}

pub(super) fn delta4_coextensions() -> Outcome {
    let d4 = delta(4);
    let co = generate_labelled(&d4, Direction::Coextend, "e", &ex_k33()).expect("fresh label");
    let m511 = Sporadic::M5_11.build();
    let allowable = spoke_triangles(&d4, 4);
    let mut ok = 0;
    for m in &co {
        let e = m.len() - 1;
        let iso = is_isomorphic(m, &m511).is_some();
        let attached = allowable.iter().any(|&t| {
            let t = m.mask(&d4.names(t)).expect("labels");
            let quad = t.with(e);
            (m.is_circuit(quad) && m.is_cocircuit(quad))
                || t.iter().any(|x| t.iter().any(|y| x < y && m.is_cocircuit(SubsetMask::from_indices([x, y, e]))))
        });
        ok += (iso || attached) as usize;
    }
    let classes: BTreeSet<_> = co.iter().map(|m| m.canonical_key().clone()).collect();
    Outcome::new("labelled=21 conclusion holds=all", format!("labelled={} conclusion holds={}", co.len(), all_or_count(ok, co.len())))
        .with_detail(format!("{} isomorphism classes", classes.len()))
}

/// `Δr` coextended by `e` with triad `{e} ∪ pair`, then extended by `f`
/// on the line through `e` and `x`.
fn triad_then_line(r: usize, pair: &[&str], x: &str) -> BinaryMatroid {
    let m1 = with_triad(&delta(r), "e", pair);
    close_triangle(&m1, "f", "e", x)
}

fn table(rows: &[(String, String)]) -> String {
    rows.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

pub(super) fn d4_triad_then_triangle() -> Outcome {
    let mut computed = Vec::new();
    for x in ["b2", "b3", "e1", "e2", "e4", "a3", "e3"] {
        computed.push((format!("a1a2/{x}"), outcome_tag(&triad_then_line(4, &["a1", "a2"], x))));
    }
    for x in ["b2", "e2", "e3", "e4"] {
        computed.push((format!("a1b1/{x}"), outcome_tag(&triad_then_line(4, &["a1", "b1"], x))));
    }
    let expected: Vec<(String, String)> = [
        ("a1a2/b2", "K33"),
        ("a1a2/b3", "K33"),
        ("a1a2/e1", "K33"),
        ("a1a2/e2", "K33"),
        ("a1a2/e4", "M5,12a"),
        ("a1a2/a3", "M5,12b"),
        ("a1a2/e3", "M5,12b"),
        ("a1b1/b2", "K33"),
        ("a1b1/e2", "K33"),
        ("a1b1/e3", "K33"),
        ("a1b1/e4", "M5,12a"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    Outcome::new(table(&expected), table(&computed))
}

pub(super) fn d5_triad_then_triangle() -> Outcome {
    let d5 = delta(5);
    let t0 = ["a1", "a2", "b1"];
    let mut total = 0;
    let mut good = 0;
    for (pair, permitted) in [(&["a1", "a2"][..], &[][..]), (&["a1", "b1"][..], &["a4", "b4", "e1"][..])] {
        for x in d5.labels() {
            if t0.contains(&x.as_str()) || permitted.contains(&x.as_str()) {
                continue;
            }
            total += 1;
            good += has_k33(&triad_then_line(5, pair, x)) as usize;
        }
    }
    Outcome::new("all", all_or_count(good, total)).with_detail(format!("{total} choices of the third element"))
}

fn triad_two_lines(r: usize, xf: &str, xg: &str) -> BinaryMatroid {
    let m = triad_then_line(r, &["a1", "b1"], xf);
    close_triangle(&m, "g", "e", xg)
}

pub(super) fn d4_triad_two_triangles() -> Outcome {
    let mut computed = Vec::new();
    let mut expected = Vec::new();
    for xf in ["a1", "a2", "b1"] {
        for xg in ["a3", "b3", "e1"] {
            let key = format!("{xf}/{xg}");
            expected.push((
                key.clone(),
                match (xf, xg) {
                    ("a1", "e1") => "Δ5".to_string(),
                    ("b1", "b3") => "M5,13".to_string(),
                    _ => "K33".to_string(),
                },
            ));
            computed.push((key, outcome_tag(&triad_two_lines(4, xf, xg))));
        }
    }
    Outcome::new(table(&expected), table(&computed))
}

pub(super) fn d5_triad_two_triangles() -> Outcome {
    let mut total = 0;
    let mut good = 0;
    let mut skipped = String::new();
    for xf in ["a1", "a2", "b1"] {
        for xg in ["a4", "b4", "e1"] {
            let m = triad_two_lines(5, xf, xg);
            if (xf, xg) == ("a1", "e1") {
                skipped = format!("a1/e1 gives {}", outcome_tag(&m));
                continue;
            }
            total += 1;
            good += has_k33(&m) as usize;
        }
    }
    Outcome::new("8 of 8", format!("{good} of {total}")).with_detail(skipped)
}

/// `Δr` coextended by `e` and `f` with triads on `pe` and `pf`, then
/// extended by `g` on the line through `e` and `f`.
fn two_triads_closed(r: usize, pe: &[&str], pf: &[&str]) -> BinaryMatroid {
    let m = with_triad(&delta(r), "e", pe);
    let m = with_triad(&m, "f", pf);
    close_triangle(&m, "g", "e", "f")
}

fn pairs_of<'a>(t: &[&'a str; 3]) -> [[&'a str; 2]; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

pub(super) fn d4_two_triads_spanning() -> Outcome {
    let t1 = ["b1", "e1", "e2"];
    let t2 = ["a2", "a3", "b2"];
    let mut v4c = Vec::new();
    let mut series = String::new();
    for pe in pairs_of(&t1) {
        for pf in pairs_of(&t2) {
            let m = two_triads_closed(4, &pe, &pf);
            let key = format!("{}{}/{}{}", pe[0], pe[1], pf[0], pf[1]);
            if m.is_vertically_4connected() {
                v4c.push(format!("{key}:{}", named(&m).unwrap_or_else(|| "other".into())));
            }
            if pe == ["b1", "e2"] && pf == ["a2", "b2"] {
                let m1 = m.delete(set(&m, &["g"]));
                let pair = set(&m1, &["e", "f"]);
                series = format!("e, f in series before closing: {}", m1.is_cocircuit(pair));
            }
        }
    }
    Outcome::new("[\"e1e2/a2a3:M6,13\"]", format!("{v4c:?}")).with_detail(series)
}

pub(super) fn d5_two_triads_adjacent_spokes() -> Outcome {
    let mut good = 0;
    for pe in [["b1", "e1"], ["e1", "e2"]] {
        for pf in [["a2", "a3"], ["a3", "b2"]] {
            good += has_k33(&two_triads_closed(5, &pe, &pf)) as usize;
        }
    }
    Outcome::new("all", all_or_count(good, 4))
}

pub(super) fn d5_two_triads_far_spokes() -> Outcome {
    let t1 = ["b1", "e1", "e2"];
    let mut free = Vec::new();
    let mut total = 0;
    for t2 in [["a3", "a4", "b3"], ["b3", "e3", "e4"]] {
        for pe in pairs_of(&t1) {
            for pf in pairs_of(&t2) {
                total += 1;
                if !has_k33(&two_triads_closed(5, &pe, &pf)) {
                    free.push(format!("{}/{}{}/{}{}", t2.join(""), pe[0], pe[1], pf[0], pf[1]));
                }
            }
        }
    }
    free.sort();
    let r6a = has_k33(&two_triads_closed(6, &["b1", "e2"], &["b4", "e4"]));
    let r6b = has_k33(&two_triads_closed(6, &["b1", "e1"], &["a4", "b3"]));
    Outcome::new(
        "cases=18 without minor=[\"a3a4b3/b1e1/a4b3\", \"b3e3e4/b1e2/b3e3\"] r=6 follow-ups with minor=true,true",
        format!("cases={total} without minor={free:?} r=6 follow-ups with minor={r6a},{r6b}"),
    )
}

pub(super) fn d4_two_triads_meeting() -> Outcome {
    Outcome::new("K33", outcome_tag(&two_triads_closed(4, &["b1", "e1"], &["b2", "e3"])))
}

pub(super) fn d4_nested_triads() -> Outcome {
    let a = outcome_tag(&two_triads_closed(4, &["e1", "e2"], &["b2", "e3"]));
    let b = outcome_tag(&two_triads_closed(4, &["b1", "e2"], &["b2", "e3"]));
    Outcome::new("K33, K33", format!("{a}, {b}"))
}

/// Four-element cocircuits of `m` inside `t ∪ u`.
fn quads_in(m: &BinaryMatroid, t: SubsetMask, u: SubsetMask) -> Vec<SubsetMask> {
    let w = t | u;
    let idx: Vec<usize> = w.iter().collect();
    let mut out = Vec::new();
    for skip_a in 0..idx.len() {
        for skip_b in skip_a + 1..idx.len() {
            let c = w.without(idx[skip_a]).without(idx[skip_b]);
            if c.len() == 4 && m.is_cocircuit(c) {
                out.push(c);
            }
        }
    }
    out
}

/// Results of the three-cofan reconstruction on every ordering of a good
/// triple and every choice of four-cocircuits; `None` when the triple is
/// not good.
fn good_triple_outcomes(m: &BinaryMatroid, ts: [SubsetMask; 3]) -> Option<Vec<BinaryMatroid>> {
    if ts[0].intersects(ts[1]) || ts[0].intersects(ts[2]) || ts[1].intersects(ts[2]) {
        return None;
    }
    let q01 = quads_in(m, ts[0], ts[1]);
    let q12 = quads_in(m, ts[1], ts[2]);
    let q02 = quads_in(m, ts[0], ts[2]);
    if q01.is_empty() || q12.is_empty() || q02.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let [i, j, k] = perm;
        let t = |x: usize| ts[x];
        let q = |x: usize, y: usize| quads_in(m, t(x), t(y));
        for c_ij in q(i, j) {
            for c_jk in q(j, k) {
                for c_ik in q(i, k) {
                    let names_e = m.names(t(i) & c_ij);
                    let names_f = m.names(t(j) & c_jk);
                    let names_g = m.names(t(k) & c_ik);
                    let m1 = m.coextend_cocycle("e", m.mask(&names_e).expect("labels")).expect("fresh label");
                    let m2 = m1.coextend_cocycle("f", m1.mask(&names_f).expect("labels")).expect("fresh label");
                    let m3 = m2.coextend_cocycle("g", m2.mask(&names_g).expect("labels")).expect("fresh label");
                    let col = ["e", "f", "g"].iter().fold(0u64, |acc, l| acc ^ m3.col(m3.idx(l).expect("label")));
                    out.push(m3.extend("x", col).expect("fresh label"));
                }
            }
        }
    }
    Some(out)
}

pub(super) fn d4_good_triple() -> Outcome {
    let d4 = delta(4);
    let ts = [set(&d4, &["b1", "e1", "e2"]), set(&d4, &["a2", "a3", "b2"]), set(&d4, &["a1", "b3", "e3"])];
    match good_triple_outcomes(&d4, ts) {
        None => Outcome::new("all", "not a good triple"),
        Some(ms) => {
            let good = ms.iter().filter(|m| has_k33(m)).count();
            Outcome::new("all", all_or_count(good, ms.len())).with_detail(format!("{} orderings and cocircuit choices", ms.len()))
        }
    }
}

pub(super) fn sporadic_extensions() -> Outcome {
    let f = GenFilter::new().three_connected();
    let (mut total, mut k33, mut sporadic, mut split, mut rest) = (0, 0, 0, 0, 0);
    let mut split_parents = BTreeSet::new();
    for s in Sporadic::ALL {
        for m in generate(&s.build(), Direction::Extend, &f) {
            total += 1;
            if has_k33(&m) {
                k33 += 1;
            } else if named(&m).is_some_and(|n| Sporadic::ALL.iter().any(|x| x.display_name() == n)) {
                sporadic += 1;
            } else if !m.is_internally_4connected() {
                split += 1;
                split_parents.insert(s.display_name());
            } else {
                rest += 1;
            }
        }
    }
    Outcome::new("internally 4-connected exceptions=0", format!("internally 4-connected exceptions={rest}")).with_detail(format!(
        "{total} extension classes: {k33} with the minor, {sporadic} sporadic, {split} not internally 4-connected (extensions of {:?})",
        split_parents.into_iter().collect::<Vec<_>>()
    ))
}

pub(super) fn sporadic_coextensions() -> Outcome {
    let f = ex_k33();
    let mut v4c = BTreeSet::new();
    let mut total = 0;
    for s in Sporadic::ALL {
        if matches!(s, Sporadic::M9_18 | Sporadic::M11_21) {
            continue;
        }
        for m in generate(&s.build(), Direction::Coextend, &f) {
            total += 1;
            if m.is_vertically_4connected() {
                v4c.insert(named(&m).unwrap_or_else(|| "other".into()));
            }
        }
    }
    let m7 = Sporadic::M7_15.build();
    let co = generate_labelled(&m7, Direction::Coextend, "e", &f).expect("fresh label");
    let triangles = m7.triangles();
    let inside = co
        .iter()
        .filter(|m| {
            let e = m.len() - 1;
            triangles.iter().any(|&t| {
                let t = m.mask(&m7.names(t)).expect("labels");
                (0u64..8).any(|bits| {
                    let sub = SubsetMask::from_indices(t.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, i)| i));
                    m.is_cocircuit(sub.with(e))
                })
            })
        })
        .count();
    let classes: BTreeSet<_> = co.iter().map(|m| m.canonical_key().clone()).collect();
    Outcome::new(
        "v4c=[\"T12\", \"T12/e\"] M7,15 labelled=12 cocircuit inside a triangle=all",
        format!("v4c={:?} M7,15 labelled={} cocircuit inside a triangle={}", v4c.into_iter().collect::<Vec<_>>(), co.len(), all_or_count(inside, co.len())),
    )
    .with_detail(format!("{total} coextension classes swept; M7,15 coextensions form {} classes", classes.len()))
}

pub(super) fn m511_coextensions() -> Outcome {
    let n = generate(&Sporadic::M5_11.build(), Direction::Coextend, &ex_k33()).len();
    Outcome::new("0", n.to_string())
}

fn i4c_names(layers: &[Vec<BinaryMatroid>]) -> Vec<String> {
    let mut out = BTreeSet::new();
    for layer in layers {
        for m in layer {
            if m.is_internally_4connected() {
                out.insert(named(m).unwrap_or_else(|| format!("unnamed rank {} size {}", m.rank(), m.len())));
            }
        }
    }
    out.into_iter().collect()
}

fn sporadic_bases(skip: &[Sporadic]) -> Vec<BinaryMatroid> {
    Sporadic::ALL.iter().filter(|s| !skip.contains(s)).map(|s| s.build()).collect()
}

fn names_str(v: &[&str]) -> String {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    format!("{v:?}")
}

fn coext_then_ext(bases: &[BinaryMatroid]) -> Vec<String> {
    let layers = sweep(bases, &[Direction::Coextend, Direction::Extend, Direction::Extend], &ex_k33());
    i4c_names(&layers)
}

pub(super) fn sweep_coext_then_ext() -> Outcome {
    let bases = sporadic_bases(&[Sporadic::M7_15, Sporadic::M9_18, Sporadic::M11_21]);
    Outcome::new(names_str(&["M5,11", "T12/e", "M5,12b", "M5,13", "T12", "M7,15"]), format!("{:?}", coext_then_ext(&bases)))
}

/// Sporadic matroids with two triangles sharing an element.
fn with_intersecting_triangles() -> Vec<Sporadic> {
    Sporadic::ALL
        .iter()
        .copied()
        .filter(|s| {
            let ts = s.build().triangles();
            ts.iter().enumerate().any(|(i, a)| ts[i + 1..].iter().any(|b| a.intersects(*b)))
        })
        .collect()
}

pub(super) fn sweep_intersecting() -> Outcome {
    let bases: Vec<BinaryMatroid> = with_intersecting_triangles().iter().map(|s| s.build()).collect();
    Outcome::new(names_str(&["M5,11", "T12/e", "M5,12b", "M5,13", "T12"]), format!("{:?}", coext_then_ext(&bases)))
        .with_detail(format!("{} bases", bases.len()))
}

pub(super) fn sweep_two_coext() -> Outcome {
    let plan = [Direction::Coextend, Direction::Coextend, Direction::Extend];
    let a = i4c_names(&sweep(&sporadic_bases(&[Sporadic::M7_15, Sporadic::M9_18, Sporadic::M11_21]), &plan, &ex_k33()));
    let inter: Vec<BinaryMatroid> = with_intersecting_triangles().iter().map(|s| s.build()).collect();
    let b = i4c_names(&sweep(&inter, &plan, &ex_k33()));
    let want = names_str(&["M5,11", "T12/e", "T12", "M7,15"]);
    Outcome::new(format!("all but the three largest: {want}; intersecting: {want}"), format!("all but the three largest: {a:?}; intersecting: {b:?}"))
}

pub(super) fn m512a_triad_claims() -> Outcome {
    let m = Sporadic::M5_12a.build();
    let allowable = allowable_triangles(&m);
    let f = ex_k33();
    let (mut first_total, mut first_ok) = (0, 0);
    let (mut second_total, mut second_ok) = (0, 0);
    for &t in &allowable {
        let tn = m.names(t);
        for pair in [[&tn[0], &tn[1]], [&tn[0], &tn[2]], [&tn[1], &tn[2]]] {
            let m1 = m.coextend_cocycle("x", set(&m, &[pair[0].as_str(), pair[1].as_str()])).expect("fresh label");
            let tt = m1.mask(&tn).expect("labels");
            for w in m.labels() {
                let my = close_triangle(&m1, "y", "x", w);
                if f.accepts(&my) {
                    first_total += 1;
                    let txy = set(&my, &["x", "y", w]);
                    let tt2 = my.mask(&tn).expect("labels");
                    let meets = txy.intersects(tt2);
                    let other = allowable.iter().filter(|&&u| u != t).any(|&u| {
                        let u = my.mask(&m.names(u)).expect("labels");
                        (txy & u).len() == 1 && contains_cocircuit(&my, txy | u)
                    });
                    first_ok += (meets || other) as usize;
                }
                if tt.contains(m1.idx(w).expect("label")) {
                    continue;
                }
                let my = close_triangle(&m1, "y", "x", w);
                for u in &tn {
                    let mz = close_triangle(&my, "z", "x", u);
                    let conn = m1.is_3connected() && mz.delete(set(&mz, &["z"])).is_3connected() && mz.is_3connected();
                    if conn {
                        second_total += 1;
                        second_ok += has_k33(&mz) as usize;
                    }
                }
            }
        }
    }
    Outcome::new("single triangle=all two triangles=all", format!("single triangle={} two triangles={}", all_or_count(first_ok, first_total), all_or_count(second_ok, second_total)))
        .with_detail(format!("{first_total} single-triangle and {second_total} two-triangle constructions"))
}

/// Whether some cocircuit of `m` lies inside `x`.
fn contains_cocircuit(m: &BinaryMatroid, x: SubsetMask) -> bool {
    m.rank_of(x.complement(m.len())) < m.rank()
}

pub(super) fn good_triples() -> Outcome {
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for s in [Sporadic::M4_11, Sporadic::M5_12a, Sporadic::M6_13, Sporadic::M7_15] {
        let m = s.build();
        let allowable = allowable_triangles(&m);
        let mut triples = 0;
        let mut bad = 0;
        let mut runs = 0;
        for i in 0..allowable.len() {
            for j in i + 1..allowable.len() {
                for k in j + 1..allowable.len() {
                    if let Some(ms) = good_triple_outcomes(&m, [allowable[i], allowable[j], allowable[k]]) {
                        triples += 1;
                        runs += ms.len();
                        bad += ms.iter().filter(|x| x.is_vertically_4connected() && !has_k33(x)).count();
                    }
                }
            }
        }
        parts.push(format!("{}: {}", s.display_name(), bad));
        detail.push(format!("{}: {triples} good triples, {runs} constructions", s.display_name()));
    }
    Outcome::new("M4,11: 0; M5,12a: 0; M6,13: 0; M7,15: 0", parts.join("; ")).with_detail(detail.join("; "))
}

fn batch_str(b: &Batch, outcome: &str) -> String {
    let stated = match outcome {
        "either" => all_or_count(b.with_either, b.candidates),
        "k33" => all_or_count(b.with_mk33, b.candidates),
        "plus" => all_or_count(b.with_delta4_plus, b.candidates),
        _ => unreachable!("outcome kind"),
    };
    format!("{} {outcome}={stated}", b.candidates)
}

pub(super) fn quad_pipeline() -> Outcome {
    let p = prop25_pipeline();
    let mut tri = p.ex_triangles_on_e.clone();
    tri.sort();
    let computed = format!(
        "EX={} CO={} CO quads={} triangles on e={:?} unique quads={} | {} | {} | {} | {} | {} | {} | {}",
        p.ex,
        p.co,
        p.co_with_quad,
        tri,
        !p.quad_not_unique,
        batch_str(&p.quad_on_ex, "either"),
        batch_str(&p.co_ext_triangle, "plus"),
        batch_str(&p.ex_ext_triangle, "k33"),
        batch_str(&p.co_coext_closed, "either"),
        batch_str(&p.ex_coext_closed, "either"),
        batch_str(&p.co_ext_closed, "either"),
        batch_str(&p.ex_ext_closed, "either"),
    );
    let expected = "EX=5 CO=15 CO quads=0 triangles on e=[3, 3, 4, 4, 4] unique quads=true | 18 either=all | 78 plus=all | 14 k33=all | 84 either=all | 27 either=all | 21 either=all | 6 either=all";
    let detail = format!(
        "CO extensions with a triangle on e,f {:?}; without {:?}; EX with {:?}; without {:?}; CO coextensions {:?}; EX coextensions {:?}",
        p.co_ext_triangle.per_parent, p.co_ext_closed.per_parent, p.ex_ext_triangle.per_parent, p.ex_ext_closed.per_parent, p.co_coext_closed.per_parent, p.ex_coext_closed.per_parent
    );
    Outcome::new(expected, computed).with_detail(detail)
}

pub(super) fn inventories() -> Outcome {
    let mut inv = Vec::new();
    for s in [
        Sporadic::M4_11,
        Sporadic::M5_12a,
        Sporadic::M6_13,
        Sporadic::M7_15,
        Sporadic::M9_18,
        Sporadic::M11_21,
        Sporadic::C11,
        Sporadic::D12,
        Sporadic::M5_11,
        Sporadic::T12Contract,
        Sporadic::M5_12b,
        Sporadic::M5_13,
        Sporadic::T12,
    ] {
        let m = s.build();
        inv.push(format!("{} {}/{}", s.display_name(), m.triangles().len(), allowable_triangles(&m).len()));
    }
    let with_allowable: Vec<&str> = Sporadic::ALL.iter().filter(|s| !allowable_triangles(&s.build()).is_empty()).map(|s| s.display_name()).collect();
    let mut pairwise = Vec::new();
    for s in [Sporadic::M5_12a, Sporadic::M6_13, Sporadic::M7_15, Sporadic::M9_18, Sporadic::M11_21] {
        let m = s.build();
        let a = allowable_triangles(&m);
        let ok = a.iter().enumerate().all(|(i, &t)| a[i + 1..].iter().all(|&u| !quads_in(&m, t, u).is_empty()));
        pairwise.push(format!("{}={ok}", s.display_name()));
    }
    let deletions = |s: Sporadic, target: Sporadic| {
        let m = s.build();
        let t = target.build();
        (0..m.len()).filter(|&i| is_isomorphic(&m.delete(SubsetMask::singleton(i)), &t).is_some()).count()
    };
    let del = format!(
        "C12→C11 {} M4,13→D12 {} M4,14→M4,13 {} PG(3,2)→M4,14 {} M5,13→M5,12b {}",
        deletions(Sporadic::C12, Sporadic::C11),
        deletions(Sporadic::M4_13, Sporadic::D12),
        deletions(Sporadic::M4_14, Sporadic::M4_13),
        deletions(Sporadic::PG32, Sporadic::M4_14),
        deletions(Sporadic::M5_13, Sporadic::M5_12b),
    );
    let inter: Vec<&str> = with_intersecting_triangles().iter().map(|s| s.display_name()).collect();
    let computed = format!(
        "{} | allowable in {:?} | pairwise four-cocircuits {} | deletions {} | intersecting {:?}",
        inv.join(", "),
        with_allowable,
        pairwise.join(" "),
        del,
        inter
    );
    let expected = "M4,11 13/3, M5,12a 8/4, M6,13 4/4, M7,15 5/5, M9,18 6/6, M11,21 7/7, C11 12/0, D12 17/0, M5,11 4/0, T12/e 5/0, M5,12b 7/0, M5,13 10/0, T12 0/0 \
        | allowable in [\"M4,11\", \"M5,12a\", \"M6,13\", \"M7,15\", \"M9,18\", \"M11,21\"] \
        | pairwise four-cocircuits M5,12a=true M6,13=true M7,15=true M9,18=true M11,21=true \
        | deletions C12→C11 12 M4,13→D12 12 M4,14→M4,13 14 PG(3,2)→M4,14 15 M5,13→M5,12b 4 \
        | intersecting [\"M(K5)\", \"C11\", \"M4,11\", \"C12\", \"D12\", \"M4,13\", \"M4,14\", \"PG(3,2)\", \"M5,11\", \"T12/e\", \"M5,12a\", \"M5,12b\", \"M5,13\"]";
    Outcome::new(expected, computed)
}

/// Cap on the rank of the Möbius matroids in the property suite.
pub(crate) const MOBIUS_SUITE_MAX_RANK: usize = 8;

pub(super) fn mobius_suite() -> Outcome {
    let mut failures: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    let mut fail = |what: &'static str, msg: String| failures.entry(what).or_default().push(msg);
    for r in 3..=MOBIUS_SUITE_MAX_RANK {
        let d = delta(r);
        let name = format!("Δ{r}");
        if !d.is_internally_4connected() {
            fail("internally 4-connected", name.clone());
        }
        if r <= 7 && has_k33(&d) {
            fail("no M(K3,3)-minor", name.clone());
        }
        if r >= 4 && d.triangles().len() != 3 * r - 3 {
            fail("3r - 3 triangles", name.clone());
        }
        let cographic_ops: Vec<BinaryMatroid> = {
            let mut v = vec![d.delete(set(&d, &[&format!("e{r}")])), d.contract(set(&d, &[&format!("e{r}")]))];
            for i in 1..r {
                v.push(d.contract(set(&d, &[&format!("e{i}")])));
                v.push(d.contract(set(&d, &[&format!("a{i}")])));
                v.push(d.delete(set(&d, &[&format!("b{i}")])));
            }
            v
        };
        if r <= 6 && !cographic_ops.iter().all(is_cographic) {
            fail("listed minors cographic", name.clone());
        }
        if r >= 4 {
            let smaller = delta(r - 1);
            let mut ops: Vec<(String, Vec<String>)> = Vec::new();
            for i in 1..=r - 2 {
                for x in [format!("e{i}"), format!("e{}", i + 1)] {
                    for y in [format!("a{i}"), format!("a{}", i + 1)] {
                        ops.push((format!("b{i}"), vec![x.clone(), y]));
                    }
                }
            }
            for x in ["a1".to_string(), format!("e{}", r - 1)] {
                for y in [format!("a{}", r - 1), "e1".to_string()] {
                    ops.push((format!("b{}", r - 1), vec![x.clone(), y]));
                }
            }
            for (c, ds) in ops {
                let m = d.contract(set(&d, &[&c])).delete_labels(&ds).expect("labels");
                if is_isomorphic(&m, &smaller).is_none() {
                    fail("spoke contraction ladder", format!("{name}/{c}\\{ds:?}"));
                }
            }
            let quads = d.circuits_up_to(4, CircuitKind::Cocircuit).into_iter().filter(|c| c.len() == 4).count();
            if quads != r - 1 {
                fail("r - 1 four-cocircuits", format!("{name}: {quads}"));
            }
            if r <= 6 {
                let allowable: BTreeSet<SubsetMask> = allowable_triangles(&d).into_iter().collect();
                let spokes: BTreeSet<SubsetMask> = spoke_triangles(&d, r).into_iter().collect();
                if allowable != spokes {
                    fail("allowable triangles are the spoke triangles", name.clone());
                }
            }
        }
    }
    for r in (4..=MOBIUS_SUITE_MAX_RANK + 2).step_by(2) {
        let u = upsilon(r);
        let name = format!("Υ{r}");
        if !u.is_internally_4connected() {
            fail("internally 4-connected", name.clone());
        }
        if has_k33(&u) {
            fail("no M(K3,3)-minor", name.clone());
        }
        let mut ops = vec![u.delete(set(&u, &[&format!("e{r}")])), u.contract(set(&u, &[&format!("e{r}")]))];
        for i in 1..r {
            ops.push(u.contract(set(&u, &[&format!("e{i}")])));
            ops.push(u.delete(set(&u, &[&format!("c{i}")])));
        }
        if !ops.iter().all(is_cographic) {
            fail("listed minors cographic", name.clone());
        }
        if r >= 6 {
            let smaller = upsilon(r - 2);
            let mut ladders: Vec<(Vec<String>, Vec<String>)> = Vec::new();
            let c = |i: usize| format!("c{i}");
            let e = |i: usize| format!("e{i}");
            for i in 1..=r - 3 {
                for x in [e(i), e(i + 2)] {
                    ladders.push((vec![c(i), c(i + 1)], vec![e(i + 1), x]));
                }
                ladders.push((vec![c(i), c(i + 2)], vec![e(i + 1), e(i + 2)]));
            }
            for x in [e(2), e(r - 1)] {
                ladders.push((vec![c(1), c(r - 1)], vec![e(1), x]));
            }
            for x in [e(1), e(r - 2)] {
                ladders.push((vec![c(r - 2), c(r - 1)], vec![e(r - 1), x]));
            }
            ladders.push((vec![c(1), c(r - 2)], vec![e(1), e(r - 1)]));
            ladders.push((vec![c(2), c(r - 1)], vec![e(1), e(2)]));
            for (cs, ds) in ladders {
                let m = u.contract_labels(&cs).expect("labels").delete_labels(&ds).expect("labels");
                if is_isomorphic(&m, &smaller).is_none() {
                    fail("rim contraction ladders", format!("{name}/{cs:?}\\{ds:?}"));
                }
            }
        }
    }
    let computed = if failures.is_empty() { "no failures".to_string() } else { format!("{failures:?}") };
    Outcome::new("no failures", computed).with_detail(format!("Δ3..Δ{MOBIUS_SUITE_MAX_RANK} and Υ4..Υ{}", MOBIUS_SUITE_MAX_RANK + 2))
}
