use serde::{Deserialize, Serialize};

use crate::catalog::{mk33, mobius, MobiusKind, Sporadic};
use crate::isomin::{has_minor, is_cographic, is_isomorphic, MinorWitness};
use crate::matroid::{BinaryMatroid, SubsetMask};

/// Largest ground set on which a `has_mk33_minor` verdict is confirmed by
/// search.
pub const CONFIRM_LIMIT: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    NotInternally4Connected,
    Cographic,
    MobiusTriangular(usize),
    MobiusTriadic(usize),
    Sporadic(Sporadic),
    HasMk33Minor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// A side `X` of a separation with `λ(X) = order - 1` violating internal
    /// 4-connectivity.
    Separation { side: Vec<String>, order: usize },
    /// None of `F7`, `F7*`, `M(K3,3)`, `M(K5)` is a minor.
    ExcludedMinorsAbsent,
    /// `(label in M, label in the catalog matroid)`.
    Isomorphism(Vec<(String, String)>),
    /// `M / contract \ delete ≅ M(K3,3)` under `map`.
    Minor { contract: Vec<String>, delete: Vec<String>, map: Vec<(String, String)> },
    /// The ground set exceeds [`CONFIRM_LIMIT`]; the verdict rests on the
    /// classification alone.
    ByTheorem,
    /// The search ran and found no `M(K3,3)`-minor, so `M` is a member of
    /// the class missing from the catalog.
    SearchFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub evidence: Evidence,
}

impl Verdict {
    /// Rechecks the evidence against `m`. `ByTheorem` and `SearchFailed`
    /// carry nothing to recheck and return false.
    pub fn recheck(&self, m: &BinaryMatroid) -> bool {
        match (&self.kind, &self.evidence) {
            (VerdictKind::NotInternally4Connected, Evidence::Separation { side, order }) => {
                let Ok(x) = m.mask(side) else { return false };
                let y = x.complement(m.len());
                let lam = m.lambda(x);
                lam + 1 == *order && x.len().min(y.len()) >= *order && (lam < 2 || x.len().min(y.len()) >= 4)
            }
            (VerdictKind::Cographic, Evidence::ExcludedMinorsAbsent) => is_cographic(m),
            (VerdictKind::MobiusTriangular(r), Evidence::Isomorphism(map)) => {
                mobius(MobiusKind::Triangular, *r).map(|n| map_is_isomorphism(m, &n, map)).unwrap_or(false)
            }
            (VerdictKind::MobiusTriadic(r), Evidence::Isomorphism(map)) => {
                mobius(MobiusKind::Triadic, *r).map(|n| map_is_isomorphism(m, &n, map)).unwrap_or(false)
            }
            (VerdictKind::Sporadic(s), Evidence::Isomorphism(map)) => map_is_isomorphism(m, &s.build(), map),
            (VerdictKind::HasMk33Minor, Evidence::Minor { contract, delete, map }) => {
                let (Ok(c), Ok(d)) = (m.mask(contract), m.mask(delete)) else { return false };
                MinorWitness { contract_set: c, delete_set: d, iso_map: map.clone() }.verify(m, &mk33())
            }
            _ => false,
        }
    }
}

/// Whether relabelling `m` by `map` gives exactly `n` as a labelled matroid.
fn map_is_isomorphism(m: &BinaryMatroid, n: &BinaryMatroid, map: &[(String, String)]) -> bool {
    if map.len() != m.len() || m.len() != n.len() {
        return false;
    }
    let mut labels = vec![String::new(); m.len()];
    for (from, to) in map {
        match m.index_of(from) {
            Some(i) if labels[i].is_empty() => labels[i] = to.clone(),
            _ => return false,
        }
    }
    m.relabeled(labels).map(|r| r.same_labelled(n)).unwrap_or(false)
}

/// A separation showing `m` is not internally 4-connected.
fn i4c_violation(m: &BinaryMatroid) -> Option<(SubsetMask, usize)> {
    if let Some(s) = m.low_separation(3) {
        return Some((s.side_x, s.k));
    }
    m.find_separation(2, 4, &mut |_, _| true).map(|(x, l)| (x, l + 1))
}

/// Places `m` in the classification: not internally 4-connected, cographic,
/// a Möbius matroid, a sporadic matroid, or a matroid with an
/// `M(K3,3)`-minor.
pub fn classify(m: &BinaryMatroid) -> Verdict {
    if let Some((x, order)) = i4c_violation(m) {
        return Verdict {
            kind: VerdictKind::NotInternally4Connected,
            evidence: Evidence::Separation { side: m.names(x), order },
        };
    }
    if is_cographic(m) {
        return Verdict { kind: VerdictKind::Cographic, evidence: Evidence::ExcludedMinorsAbsent };
    }
    let (r, n) = (m.rank(), m.len());
    if r >= 3 && n == 3 * r - 2 {
        if let Some(map) = mobius(MobiusKind::Triangular, r).ok().and_then(|d| is_isomorphic(m, &d)) {
            return Verdict { kind: VerdictKind::MobiusTriangular(r), evidence: Evidence::Isomorphism(map) };
        }
    }
    if r >= 4 && r % 2 == 0 && n == 2 * r - 1 {
        if let Some(map) = mobius(MobiusKind::Triadic, r).ok().and_then(|u| is_isomorphic(m, &u)) {
            return Verdict { kind: VerdictKind::MobiusTriadic(r), evidence: Evidence::Isomorphism(map) };
        }
    }
    for s in Sporadic::ALL {
        if s.shape() == (r, n) {
            if let Some(map) = is_isomorphic(m, &s.build()) {
                return Verdict { kind: VerdictKind::Sporadic(s), evidence: Evidence::Isomorphism(map) };
            }
        }
    }
    if n > CONFIRM_LIMIT {
        return Verdict { kind: VerdictKind::HasMk33Minor, evidence: Evidence::ByTheorem };
    }
    let evidence = match has_minor(m, &mk33()) {
        Some(w) => Evidence::Minor { contract: m.names(w.contract_set), delete: m.names(w.delete_set), map: w.iso_map },
        None => Evidence::SearchFailed,
    };
    Verdict { kind: VerdictKind::HasMk33Minor, evidence }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cubic_ladder, wheel};

    #[test]
    fn delta6_is_triangular() {
        let d = mobius(MobiusKind::Triangular, 6).unwrap();
        let v = classify(&d);
        assert_eq!(v.kind, VerdictKind::MobiusTriangular(6));
        assert!(v.recheck(&d));
    }

    #[test]
    fn ladder_bond_matroid_is_cographic() {
        let m = cubic_ladder(10).bond_matroid();
        let v = classify(&m);
        assert_eq!(v.kind, VerdictKind::Cographic);
        assert!(v.recheck(&m));
    }

    #[test]
    fn wheel_with_rim_removed_is_not_i4c() {
        let w = wheel(5).cycle_matroid();
        let m = w.delete(w.mask(&["r1"]).unwrap());
        let v = classify(&m);
        assert_eq!(v.kind, VerdictKind::NotInternally4Connected);
        assert!(v.recheck(&m));
    }

    #[test]
    fn upsilon6_all_ones_has_the_minor() {
        let u = mobius(MobiusKind::Triadic, 6).unwrap();
        let m = u.extend("t", 0b111111).unwrap();
        let v = classify(&m);
        assert_eq!(v.kind, VerdictKind::HasMk33Minor);
        assert!(matches!(v.evidence, Evidence::Minor { .. }));
        assert!(v.recheck(&m));
    }

    #[test]
    fn sporadic_with_map() {
        let m = Sporadic::M5_12a.build();
        let v = classify(&m);
        assert_eq!(v.kind, VerdictKind::Sporadic(Sporadic::M5_12a));
        assert!(v.recheck(&m));
    }
}
