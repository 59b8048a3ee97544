//! Named binary matroids: the Möbius families, the quad coextension of
//! `Δ4`, the eighteen sporadic matroids, graph sources and the census of
//! internally 4-connected non-cographic matroids without an
//! `M(K3,3)`-minor.

mod graphs;

pub use graphs::{cubic_ladder, k33, k5, quartic_ladder, wheel, GraphDesc};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::deltawye::{allowable_triangles, delta_multi, delta_y, TriangleMultiset};
use crate::error::{Error, Result};
use crate::isomin::canonical_labelling;
use crate::matroid::{BinaryMatroid, CircuitKind, SubsetMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MobiusKind {
    Triangular,
    Triadic,
}

fn unit(i: usize) -> u64 {
    1u64 << (i - 1)
}

/// Labels and raw columns of `Δ_r` or `Υ_r`; `ei` is the `i`-th unit vector.
pub fn mobius_columns(kind: MobiusKind, r: usize) -> Result<(Vec<String>, Vec<u64>)> {
    let mut labels: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    let mut cols: Vec<u64> = (1..=r).map(unit).collect();
    match kind {
        MobiusKind::Triangular => {
            if !(3..=40).contains(&r) {
                return Err(Error::BadRank { kind: "triangular", rank: r });
            }
            for i in 1..r {
                labels.push(format!("a{i}"));
                cols.push(unit(i) | unit(r));
            }
            for i in 1..r {
                labels.push(format!("b{i}"));
                cols.push(if i + 1 < r { unit(i) | unit(i + 1) } else { unit(1) | unit(r - 1) | unit(r) });
            }
        }
        MobiusKind::Triadic => {
            if r < 4 || r % 2 == 1 || r > 62 {
                return Err(Error::BadRank { kind: "triadic", rank: r });
            }
            for i in 1..r {
                labels.push(format!("c{i}"));
                cols.push(if i + 1 < r { unit(i) | unit(i + 1) | unit(r) } else { unit(1) | unit(r - 1) | unit(r) });
            }
        }
    }
    Ok((labels, cols))
}

/// `Δ_r` (rank `r`, `3r - 2` elements) or `Υ_r` (rank `r`, `2r - 1` elements).
pub fn mobius(kind: MobiusKind, r: usize) -> Result<BinaryMatroid> {
    let (labels, cols) = mobius_columns(kind, r)?;
    BinaryMatroid::from_columns(labels, &cols)
}

/// The Fano plane on `1..7`.
pub fn fano() -> BinaryMatroid {
    BinaryMatroid::from_strs(&["1", "2", "3", "4", "5", "6", "7"], &["1001101", "0101011", "0010111"])
        .expect("fano matrix")
}

pub fn fano_dual() -> BinaryMatroid {
    fano().dual()
}

pub fn mk5() -> BinaryMatroid {
    k5().cycle_matroid()
}

pub fn mk33() -> BinaryMatroid {
    static MK33: OnceLock<BinaryMatroid> = OnceLock::new();
    MK33.get_or_init(|| k33().cycle_matroid()).clone()
}

/// `PG(3, 2)`: element `pk` is the vector with binary expansion `k`.
pub fn pg32() -> BinaryMatroid {
    let labels = (1..16).map(|k| format!("p{k}")).collect();
    let cols: Vec<u64> = (1..16).collect();
    BinaryMatroid::from_columns(labels, &cols).expect("pg32")
}

/// Every coextension of `Δ4` by `e5` in which `{a1, a2, b1, e5}` is a
/// circuit and a cocircuit, over all rows on the non-basis elements.
pub fn delta4_plus_candidates() -> Vec<BinaryMatroid> {
    let d4 = mobius(MobiusKind::Triangular, 4).expect("delta4");
    let nonbasis: Vec<usize> = (d4.ground() - d4.lex_basis()).iter().collect();
    let mut out = Vec::new();
    for pick in 0u64..(1 << nonbasis.len()) {
        let row = SubsetMask::from_indices((0..nonbasis.len()).filter(|&k| (pick >> k) & 1 == 1).map(|k| nonbasis[k]));
        let m = d4.coextend("e5", row).expect("coextension");
        let quad = m.mask(&["a1", "a2", "b1", "e5"]).expect("labels");
        if m.is_circuit(quad) && m.is_cocircuit(quad) {
            out.push(m);
        }
    }
    out
}

/// `Δ4⁺`.
pub fn delta4_plus() -> BinaryMatroid {
    delta4_plus_candidates().into_iter().next().expect("quad coextension exists")
}

/// The eighteen sporadic matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sporadic {
    MK5,
    C11,
    M4_11,
    C12,
    D12,
    M4_13,
    M4_14,
    PG32,
    M5_11,
    T12Contract,
    M5_12a,
    M5_12b,
    M5_13,
    T12,
    M6_13,
    M7_15,
    M9_18,
    M11_21,
}

impl Sporadic {
    pub const ALL: [Sporadic; 18] = [
        Sporadic::MK5,
        Sporadic::C11,
        Sporadic::M4_11,
        Sporadic::C12,
        Sporadic::D12,
        Sporadic::M4_13,
        Sporadic::M4_14,
        Sporadic::PG32,
        Sporadic::M5_11,
        Sporadic::T12Contract,
        Sporadic::M5_12a,
        Sporadic::M5_12b,
        Sporadic::M5_13,
        Sporadic::T12,
        Sporadic::M6_13,
        Sporadic::M7_15,
        Sporadic::M9_18,
        Sporadic::M11_21,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Sporadic::MK5 => "mk5",
            Sporadic::C11 => "c11",
            Sporadic::M4_11 => "m4_11",
            Sporadic::C12 => "c12",
            Sporadic::D12 => "d12",
            Sporadic::M4_13 => "m4_13",
            Sporadic::M4_14 => "m4_14",
            Sporadic::PG32 => "pg32",
            Sporadic::M5_11 => "m5_11",
            Sporadic::T12Contract => "t12_contract",
            Sporadic::M5_12a => "m5_12a",
            Sporadic::M5_12b => "m5_12b",
            Sporadic::M5_13 => "m5_13",
            Sporadic::T12 => "t12",
            Sporadic::M6_13 => "m6_13",
            Sporadic::M7_15 => "m7_15",
            Sporadic::M9_18 => "m9_18",
            Sporadic::M11_21 => "m11_21",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Sporadic::MK5 => "M(K5)",
            Sporadic::C11 => "C11",
            Sporadic::M4_11 => "M4,11",
            Sporadic::C12 => "C12",
            Sporadic::D12 => "D12",
            Sporadic::M4_13 => "M4,13",
            Sporadic::M4_14 => "M4,14",
            Sporadic::PG32 => "PG(3,2)",
            Sporadic::M5_11 => "M5,11",
            Sporadic::T12Contract => "T12/e",
            Sporadic::M5_12a => "M5,12a",
            Sporadic::M5_12b => "M5,12b",
            Sporadic::M5_13 => "M5,13",
            Sporadic::T12 => "T12",
            Sporadic::M6_13 => "M6,13",
            Sporadic::M7_15 => "M7,15",
            Sporadic::M9_18 => "M9,18",
            Sporadic::M11_21 => "M11,21",
        }
    }

    /// `(rank, size)`.
    pub fn shape(self) -> (usize, usize) {
        match self {
            Sporadic::MK5 => (4, 10),
            Sporadic::C11 | Sporadic::M4_11 => (4, 11),
            Sporadic::C12 | Sporadic::D12 => (4, 12),
            Sporadic::M4_13 => (4, 13),
            Sporadic::M4_14 => (4, 14),
            Sporadic::PG32 => (4, 15),
            Sporadic::M5_11 | Sporadic::T12Contract => (5, 11),
            Sporadic::M5_12a | Sporadic::M5_12b => (5, 12),
            Sporadic::M5_13 => (5, 13),
            Sporadic::T12 => (6, 12),
            Sporadic::M6_13 => (6, 13),
            Sporadic::M7_15 => (7, 15),
            Sporadic::M9_18 => (9, 18),
            Sporadic::M11_21 => (11, 21),
        }
    }

    pub fn build(self) -> BinaryMatroid {
        static CACHE: OnceLock<Mutex<HashMap<Sporadic, BinaryMatroid>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(m) = cache.lock().expect("catalog cache").get(&self) {
            return m.clone();
        }
        let m = canonical_relabel(&self.construct());
        cache.lock().expect("catalog cache").insert(self, m.clone());
        m
    }

    fn construct(self) -> BinaryMatroid {
        match self {
            Sporadic::MK5 => mk5(),
            Sporadic::PG32 => pg32(),
            Sporadic::C12 => pg_minus(&[1, 2, 3]),
            Sporadic::D12 => pg_minus(&[1, 2, 4]),
            Sporadic::M4_14 => pg_minus(&[1]),
            Sporadic::M4_13 => pg_minus(&[1, 2]),
            Sporadic::C11 => Sporadic::C12.build().delete(SubsetMask::singleton(0)),
            Sporadic::M4_11 => delta4_extension_with_pairs(4),
            Sporadic::M5_11 => {
                let m = Sporadic::M4_11.build();
                let t = *allowable_triangles(&m).first().expect("M4,11 has an allowable triangle");
                delta_y(&m, t).expect("allowable triangles are coindependent")
            }
            Sporadic::T12 => {
                let (mut labels, mut cols) = mobius_columns(MobiusKind::Triadic, 6).expect("upsilon6");
                labels.push("t".into());
                cols.push(0b11111);
                BinaryMatroid::from_columns(labels, &cols).expect("t12")
            }
            Sporadic::T12Contract => Sporadic::T12.build().contract(SubsetMask::singleton(0)),
            Sporadic::M5_12a => {
                let (through, avoid) = fano_lines();
                let mut set = through;
                set.push(avoid[0]);
                nabla_fano_dual(set)
            }
            Sporadic::M6_13 => nabla_fano_dual(fano_lines().1),
            Sporadic::M7_15 => {
                let (through, mut set) = fano_lines();
                set.push(through[0]);
                nabla_fano_dual(set)
            }
            Sporadic::M9_18 => {
                let (through, mut set) = fano_lines();
                set.extend_from_slice(&through[..2]);
                nabla_fano_dual(set)
            }
            Sporadic::M11_21 => nabla_fano_dual(fano().triangles()),
            Sporadic::M5_12b => {
                let d4 = mobius(MobiusKind::Triangular, 4).expect("delta4");
                let g = d4.coextend("e", d4.mask(&["a1", "a2"]).expect("labels")).expect("coextension");
                let f = g.col(g.idx("e").expect("e")) ^ g.col(g.idx("a3").expect("a3"));
                g.extend("f", f).expect("extension")
            }
            Sporadic::M5_13 => {
                let d4 = mobius(MobiusKind::Triangular, 4).expect("delta4");
                let g = d4.coextend("e", d4.mask(&["a1", "b1"]).expect("labels")).expect("coextension");
                let e = g.col(g.idx("e").expect("e"));
                let f = e ^ g.col(g.idx("b1").expect("b1"));
                let h = e ^ g.col(g.idx("b3").expect("b3"));
                g.extend("f", f).and_then(|g| g.extend("g", h)).expect("extension")
            }
        }
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

/// The sporadic matroid with the given token, such as `m4_11`.
pub fn sporadic(token: &str) -> Result<BinaryMatroid> {
    Sporadic::ALL
        .iter()
        .find(|s| s.token() == token)
        .map(|s| s.build())
        .ok_or_else(|| Error::UnknownId(token.to_string()))
}

fn pg_minus(points: &[u64]) -> BinaryMatroid {
    let pg = pg32();
    pg.delete(SubsetMask::from_indices(points.iter().map(|&p| p as usize - 1)))
}

/// `Δ4` extended by the first new vector that is the sum of exactly `pairs`
/// pairs of elements.
fn delta4_extension_with_pairs(pairs: usize) -> BinaryMatroid {
    let d4 = mobius(MobiusKind::Triangular, 4).expect("delta4");
    let cols = d4.cols();
    for v in 1u64..16 {
        if cols.contains(&v) {
            continue;
        }
        let mut count = 0;
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                if cols[i] ^ cols[j] == v {
                    count += 1;
                }
            }
        }
        if count == pairs {
            return d4.extend("x", v).expect("extension");
        }
    }
    unreachable!("Δ4 has an extension with {pairs} representing pairs")
}

/// Lines of the Fano plane through element `1`, and those avoiding it.
fn fano_lines() -> (Vec<SubsetMask>, Vec<SubsetMask>) {
    fano().triangles().into_iter().partition(|t| t.contains(0))
}

/// `∇(F7*; 𝒯) = Δ(F7; 𝒯)*` for a set of Fano lines.
fn nabla_fano_dual(lines: Vec<SubsetMask>) -> BinaryMatroid {
    let f = fano();
    let ts = TriangleMultiset::new(&f, lines, CircuitKind::Circuit).expect("fano lines are triangles");
    delta_multi(&f, &ts).expect("fano lines are coindependent").dual()
}

/// Relabels in canonical order: the lexicographically least basis becomes
/// `1..r` and the remaining elements `-1..-k`.
pub fn canonical_relabel(m: &BinaryMatroid) -> BinaryMatroid {
    let c = canonical_labelling(m, None);
    let p = m.permuted(&c.order);
    let basis = p.lex_basis();
    let (mut b, mut nb) = (0, 0);
    let labels = (0..p.len())
        .map(|i| {
            if basis.contains(i) {
                b += 1;
                b.to_string()
            } else {
                nb += 1;
                format!("-{nb}")
            }
        })
        .collect();
    p.relabeled(labels).expect("fresh labels are distinct")
}

/// Identifier of any named matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogId {
    DeltaR(usize),
    UpsilonR(usize),
    Delta4Plus,
    Fano,
    FanoDual,
    MK33,
    MStarK33,
    MStarK5,
    Sporadic(Sporadic),
    CubicLadderBond(usize),
    QuarticLadderBond(usize),
    Wheel(usize),
}

impl CatalogId {
    pub fn build(self) -> Result<BinaryMatroid> {
        Ok(match self {
            CatalogId::DeltaR(r) => mobius(MobiusKind::Triangular, r)?,
            CatalogId::UpsilonR(r) => mobius(MobiusKind::Triadic, r)?,
            CatalogId::Delta4Plus => delta4_plus(),
            CatalogId::Fano => fano(),
            CatalogId::FanoDual => fano_dual(),
            CatalogId::MK33 => mk33(),
            CatalogId::MStarK33 => mk33().dual(),
            CatalogId::MStarK5 => mk5().dual(),
            CatalogId::Sporadic(s) => s.build(),
            CatalogId::CubicLadderBond(_) | CatalogId::QuarticLadderBond(_) | CatalogId::Wheel(_) => {
                graphic_source(self)?
            }
        })
    }
}

/// Matroids defined from a graph: ladder bond matroids, wheels, `M(K5)`,
/// `M(K3,3)` and their duals.
pub fn graphic_source(id: CatalogId) -> Result<BinaryMatroid> {
    match id {
        CatalogId::CubicLadderBond(n) if n >= 4 && n % 2 == 0 && n <= 62 => Ok(cubic_ladder(n).bond_matroid()),
        CatalogId::QuarticLadderBond(n) if n >= 3 && n % 2 == 1 && n <= 63 => Ok(quartic_ladder(n).bond_matroid()),
        CatalogId::Wheel(r) if (2..=32).contains(&r) => Ok(wheel(r).cycle_matroid()),
        CatalogId::MK33 => Ok(mk33()),
        CatalogId::MStarK33 => Ok(mk33().dual()),
        CatalogId::Sporadic(Sporadic::MK5) => Ok(mk5()),
        CatalogId::MStarK5 => Ok(mk5().dual()),
        other => Err(Error::UnknownId(other.to_string())),
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::DeltaR(r) => write!(f, "delta_r({r})"),
            CatalogId::UpsilonR(r) => write!(f, "upsilon_r({r})"),
            CatalogId::Delta4Plus => f.write_str("delta4_plus"),
            CatalogId::Fano => f.write_str("fano"),
            CatalogId::FanoDual => f.write_str("fano_dual"),
            CatalogId::MK33 => f.write_str("mk33"),
            CatalogId::MStarK33 => f.write_str("mstar_k33"),
            CatalogId::MStarK5 => f.write_str("mstar_k5"),
            CatalogId::Sporadic(s) => f.write_str(s.token()),
            CatalogId::CubicLadderBond(n) => write!(f, "cubic_ladder_bond({n})"),
            CatalogId::QuarticLadderBond(n) => write!(f, "quartic_ladder_bond({n})"),
            CatalogId::Wheel(r) => write!(f, "wheel({r})"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((head, rest)) = s.split_once('(') {
            let arg = rest
                .strip_suffix(')')
                .and_then(|a| a.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownId(s.to_string()))?;
            return match head.trim() {
                "delta_r" => Ok(CatalogId::DeltaR(arg)),
                "upsilon_r" => Ok(CatalogId::UpsilonR(arg)),
                "cubic_ladder_bond" => Ok(CatalogId::CubicLadderBond(arg)),
                "quartic_ladder_bond" => Ok(CatalogId::QuarticLadderBond(arg)),
                "wheel" => Ok(CatalogId::Wheel(arg)),
                _ => Err(Error::UnknownId(s.to_string())),
            };
        }
        match s {
            "delta4_plus" => Ok(CatalogId::Delta4Plus),
            "fano" => Ok(CatalogId::Fano),
            "fano_dual" => Ok(CatalogId::FanoDual),
            "mk33" => Ok(CatalogId::MK33),
            "mstar_k33" => Ok(CatalogId::MStarK33),
            "mstar_k5" => Ok(CatalogId::MStarK5),
            _ => Sporadic::ALL
                .iter()
                .find(|x| x.token() == s)
                .map(|&x| CatalogId::Sporadic(x))
                .ok_or_else(|| Error::UnknownId(s.to_string())),
        }
    }
}

/// Family of a census entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    TriangularMobius,
    TriadicMobius,
    Sporadic,
}

/// One row of [`census`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusEntry {
    pub id: CatalogId,
    pub name: String,
    pub family: Family,
    pub rank: usize,
    pub size: usize,
    pub internally_4connected: bool,
    pub vertically_4connected: bool,
    pub triads: usize,
}

/// Largest rank of a census entry.
pub const CENSUS_MAX_RANK: usize = 11;

/// The census ids: `Δ3..Δ7`, `Υ4, Υ6, Υ8, Υ10` and the sporadic matroids.
pub fn census_ids() -> Vec<CatalogId> {
    let mut ids: Vec<CatalogId> = (3..=7).map(CatalogId::DeltaR).collect();
    ids.extend((4..=10).step_by(2).map(CatalogId::UpsilonR));
    ids.extend(Sporadic::ALL.iter().map(|&s| CatalogId::Sporadic(s)));
    ids
}

/// Every census entry with its connectivity flags, ordered by rank, then
/// size, then family.
pub fn census() -> Vec<CensusEntry> {
    let mut rows: Vec<CensusEntry> = census_ids()
        .into_iter()
        .map(|id| {
            let m = id.build().expect("census ids build");
            let (name, family) = match id {
                CatalogId::DeltaR(r) => (format!("Δ{r}"), Family::TriangularMobius),
                CatalogId::UpsilonR(r) => (format!("Υ{r}"), Family::TriadicMobius),
                CatalogId::Sporadic(s) => (s.display_name().to_string(), Family::Sporadic),
                _ => unreachable!("census ids are Möbius or sporadic"),
            };
            CensusEntry {
                id,
                name,
                family,
                rank: m.rank(),
                size: m.len(),
                internally_4connected: m.is_internally_4connected(),
                vertically_4connected: m.is_vertically_4connected(),
                triads: m.triads().len(),
            }
        })
        .collect();
    rows.sort_by_key(|e| (e.rank, e.size, e.family as u8));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_sizes() {
        for r in 3..9 {
            let d = mobius(MobiusKind::Triangular, r).unwrap();
            assert_eq!((d.rank(), d.len()), (r, 3 * r - 2));
        }
        for r in [4, 6, 8, 10] {
            let u = mobius(MobiusKind::Triadic, r).unwrap();
            assert_eq!((u.rank(), u.len()), (r, 2 * r - 1));
        }
        assert!(matches!(mobius(MobiusKind::Triangular, 2), Err(Error::BadRank { .. })));
        assert!(matches!(mobius(MobiusKind::Triadic, 5), Err(Error::BadRank { .. })));
    }

    #[test]
    fn small_mobius_are_fano_and_dual() {
        let d3 = mobius(MobiusKind::Triangular, 3).unwrap();
        assert_eq!(d3.canonical_key(), fano().canonical_key());
        let u4 = mobius(MobiusKind::Triadic, 4).unwrap();
        assert_eq!(u4.canonical_key(), fano_dual().canonical_key());
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for id in census_ids().into_iter().chain([
            CatalogId::Delta4Plus,
            CatalogId::Wheel(5),
            CatalogId::CubicLadderBond(8),
            CatalogId::MStarK33,
        ]) {
            assert_eq!(id.to_string().parse::<CatalogId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<CatalogId>(), Err(Error::UnknownId(_))));
        assert!(matches!(sporadic("m4_12"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn sporadic_shapes() {
        for s in Sporadic::ALL {
            let m = s.build();
            assert_eq!((m.rank(), m.len()), s.shape(), "{s}");
        }
    }

    #[test]
    fn delta4_plus_quad() {
        let m = delta4_plus();
        let quad = m.mask(&["a1", "a2", "b1", "e5"]).unwrap();
        assert!(m.is_circuit(quad) && m.is_cocircuit(quad));
        let back = m.contract(SubsetMask::singleton(m.idx("e5").unwrap()));
        assert_eq!(back.canonical_key(), mobius(MobiusKind::Triangular, 4).unwrap().canonical_key());
    }
}
