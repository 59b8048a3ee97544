//! Delta-wye exchange, its multiset form, legitimate triangle sets and the
//! wye-delta reduction to a triad-free matroid.

use std::collections::HashMap;

use crate::catalog;
use crate::error::{Error, Result};
use crate::isomin::{canonical_form_marked, has_minor, is_cographic, is_isomorphic};
use crate::matroid::{BinaryMatroid, CircuitKind, Reduce, SubsetMask};

/// Whether `t` is a triangle whose complement spans the matroid.
pub fn is_coindependent_triangle(m: &BinaryMatroid, t: SubsetMask) -> bool {
    t.len() == 3 && m.is_circuit(t) && m.rank_of(t.complement(m.len())) == m.rank()
}

/// Whether `t` is a triad that is independent.
pub fn is_independent_triad(m: &BinaryMatroid, t: SubsetMask) -> bool {
    t.len() == 3 && m.is_cocircuit(t) && m.is_independent(t)
}

/// `Δ_T(M)`: the triangle `t` becomes a triad, the rank grows by one and
/// labels and element order are unchanged.
///
/// In coordinates this appends one row that is the indicator of `t`.
pub fn delta_y(m: &BinaryMatroid, t: SubsetMask) -> Result<BinaryMatroid> {
    if !is_coindependent_triangle(m, t) {
        return Err(Error::NotCoindependentTriangle(m.names(t)));
    }
    if m.rank() >= 64 {
        return Err(Error::Invalid("rank above 64".into()));
    }
    let bit = 1u64 << m.rank();
    let cols: Vec<u64> = (0..m.len()).map(|i| if t.contains(i) { m.col(i) | bit } else { m.col(i) }).collect();
    BinaryMatroid::from_columns(m.labels().to_vec(), &cols)
}

/// `∇_T(M) = (Δ_T(M*))*`.
pub fn wye_delta(m: &BinaryMatroid, t: SubsetMask) -> Result<BinaryMatroid> {
    if !is_independent_triad(m, t) {
        return Err(Error::NotIndependentTriad(m.names(t)));
    }
    Ok(delta_y(&m.dual(), t)?.dual())
}

/// `Δ_T` with the triangle given by labels.
pub fn delta_y_labels<S: AsRef<str>>(m: &BinaryMatroid, t: &[S]) -> Result<BinaryMatroid> {
    delta_y(m, m.mask(t)?)
}

/// `∇_T` with the triad given by labels.
pub fn wye_delta_labels<S: AsRef<str>>(m: &BinaryMatroid, t: &[S]) -> Result<BinaryMatroid> {
    wye_delta(m, m.mask(t)?)
}

/// Whether `Δ_T(M)` still has no `M(K3,3)`-minor.
pub fn is_allowable(m: &BinaryMatroid, t: SubsetMask) -> Result<bool> {
    let d = delta_y(m, t)?;
    Ok(has_minor(&d, &catalog::mk33()).is_none())
}

/// The allowable triangles of `m`, in the order of [`BinaryMatroid::triangles`].
pub fn allowable_triangles(m: &BinaryMatroid) -> Vec<SubsetMask> {
    m.triangles().into_iter().filter(|&t| is_allowable(m, t).unwrap_or(false)).collect()
}

/// A multiset of triangles (or triads) of a host matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleMultiset {
    members: Vec<SubsetMask>,
}

impl TriangleMultiset {
    /// Checks that each member is a circuit (or cocircuit) of size three.
    pub fn new(host: &BinaryMatroid, members: Vec<SubsetMask>, kind: CircuitKind) -> Result<Self> {
        for &t in &members {
            let ok = t.len() == 3
                && match kind {
                    CircuitKind::Circuit => host.is_circuit(t),
                    CircuitKind::Cocircuit => host.is_cocircuit(t),
                };
            if !ok {
                return Err(match kind {
                    CircuitKind::Circuit => Error::NotCoindependentTriangle(host.names(t)),
                    CircuitKind::Cocircuit => Error::NotIndependentTriad(host.names(t)),
                });
            }
        }
        Ok(TriangleMultiset { members })
    }

    pub fn from_labels<S: AsRef<str>>(host: &BinaryMatroid, members: &[[S; 3]], kind: CircuitKind) -> Result<Self> {
        let masks = members.iter().map(|t| host.mask(t)).collect::<Result<Vec<_>>>()?;
        Self::new(host, masks, kind)
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of members containing element `e`.
    pub fn multiplicity(&self, e: usize) -> usize {
        self.members.iter().filter(|t| t.contains(e)).count()
    }
}

/// `Δ(M; 𝒯)`.
///
/// Every element in `t_e > 1` members gets `t_e - 1` parallel copies named
/// `label.1`, `label.2`, ... appended in element order; the members are then
/// lifted to pairwise disjoint triangles, in order and using the original
/// element first, and `Δ` is applied to each lift in turn.
pub fn delta_multi(m: &BinaryMatroid, ts: &TriangleMultiset) -> Result<BinaryMatroid> {
    for &t in ts.members() {
        if !is_coindependent_triangle(m, t) {
            return Err(Error::NotCoindependentTriangle(m.names(t)));
        }
    }
    let mut labels = m.labels().to_vec();
    let mut cols = m.cols().to_vec();
    let mut copies: Vec<Vec<usize>> = (0..m.len()).map(|e| vec![e]).collect();
    for e in 0..m.len() {
        for k in 1..ts.multiplicity(e) {
            labels.push(format!("{}.{k}", m.label(e)));
            cols.push(m.col(e));
            copies[e].push(labels.len() - 1);
        }
    }
    let mut cur = BinaryMatroid::from_columns(labels, &cols)?;
    let mut used = vec![0usize; m.len()];
    let mut lifts = Vec::with_capacity(ts.len());
    for &t in ts.members() {
        let mut lift = SubsetMask::EMPTY;
        for e in t.iter() {
            lift = lift.with(copies[e][used[e]]);
            used[e] += 1;
        }
        lifts.push(lift);
    }
    for lift in lifts {
        cur = delta_y(&cur, lift)?;
    }
    Ok(cur)
}

/// `∇(M; 𝒯)` for a multiset of triads: `Δ(M*; 𝒯)*`.
pub fn nabla_multi(m: &BinaryMatroid, ts: &TriangleMultiset) -> Result<BinaryMatroid> {
    Ok(delta_multi(&m.dual(), ts)?.dual())
}

/// Whether `set` meets the four-cocircuit condition: for every pair of
/// members and every 4-cocircuit inside their union, some member meets both
/// parts of that cocircuit.
pub fn satisfies_cocircuit_condition(m: &BinaryMatroid, set: &[SubsetMask]) -> bool {
    let quads: Vec<SubsetMask> =
        m.circuits_up_to(4, CircuitKind::Cocircuit).into_iter().filter(|c| c.len() == 4).collect();
    for (i, &t) in set.iter().enumerate() {
        for &u in &set[i + 1..] {
            for &c in quads.iter().filter(|c| c.is_subset(t | u)) {
                let (p, q) = (t & c, u & c);
                if !set.iter().any(|s| s.intersects(p) && s.intersects(q)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All legitimate sets of `m`: subsets of the allowable triangles meeting
/// the four-cocircuit condition, the empty set first, ordered by size and
/// then by position.
pub fn legitimate_sets(m: &BinaryMatroid) -> Vec<TriangleMultiset> {
    legitimate_sets_from(&allowable_triangles(m), m)
}

/// As [`legitimate_sets`] with the allowable triangles supplied.
pub fn legitimate_sets_from(allowable: &[SubsetMask], m: &BinaryMatroid) -> Vec<TriangleMultiset> {
    let k = allowable.len();
    assert!(k < 32, "too many allowable triangles to enumerate");
    let mut picks: Vec<u32> = (0..1u32 << k).collect();
    picks.sort_by_key(|p| (p.count_ones(), p.reverse_bits()));
    picks
        .into_iter()
        .filter_map(|p| {
            let set: Vec<SubsetMask> = (0..k).filter(|&i| (p >> i) & 1 == 1).map(|i| allowable[i]).collect();
            satisfies_cocircuit_condition(m, &set).then_some(TriangleMultiset { members: set })
        })
        .collect()
}

/// Record of [`reduce_to_v4c`].
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub initial: BinaryMatroid,
    /// Triads on which `∇` was performed, as labels, in order.
    pub triads: Vec<Vec<String>>,
    /// The triad-free result.
    pub m0: BinaryMatroid,
    /// `si(M0)`, keeping the first element of each parallel class.
    pub si_m0: BinaryMatroid,
    /// Images of the performed triads in `si(M0)`.
    pub triangles: TriangleMultiset,
}

impl ReductionTrace {
    /// `Δ(si(M0); 𝒯)`.
    pub fn rebuild(&self) -> Result<BinaryMatroid> {
        delta_multi(&self.si_m0, &self.triangles)
    }

    /// Whether the performed triads are pairwise disjoint.
    pub fn triads_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.triads.iter().flatten().all(|l| seen.insert(l.clone()))
    }
}

/// Repeated `∇` on the least triad (by marked canonical form, then by
/// position) until no independent triad is left.
///
/// Requires `m` internally 4-connected, not cographic and without an
/// `M(K3,3)`-minor, and checks that `Δ(si(M0); 𝒯)` is isomorphic to `m`.
pub fn reduce_to_v4c(m: &BinaryMatroid) -> Result<ReductionTrace> {
    if !m.is_internally_4connected() {
        return Err(Error::PreconditionViolated("not internally 4-connected".into()));
    }
    if has_minor(m, &catalog::mk33()).is_some() {
        return Err(Error::PreconditionViolated("has an M(K3,3)-minor".into()));
    }
    if is_cographic(m) {
        return Err(Error::PreconditionViolated("cographic".into()));
    }
    reduce_unchecked(m)
}

pub(crate) fn reduce_unchecked(m: &BinaryMatroid) -> Result<ReductionTrace> {
    let mut cur = m.clone();
    let mut triads = Vec::new();
    while let Some(t) = least_triad(&cur) {
        triads.push(cur.names(t));
        cur = wye_delta(&cur, t)?;
    }
    let red = cur.si_co(Reduce::Simplify);
    let si_m0 = red.matroid;
    let mut members = Vec::with_capacity(triads.len());
    for t in &triads {
        let mut image = SubsetMask::EMPTY;
        for l in t {
            match red.retained[cur.idx(l)?] {
                Some(p) => image = image.with(p),
                None => return Err(Error::PreconditionViolated(format!("{l} became a loop"))),
            }
        }
        members.push(image);
    }
    let triangles = TriangleMultiset::new(&si_m0, members, CircuitKind::Circuit)?;
    let trace = ReductionTrace { initial: m.clone(), triads, m0: cur, si_m0, triangles };
    let rebuilt = trace.rebuild()?;
    if is_isomorphic(&rebuilt, m).is_none() {
        return Err(Error::PreconditionViolated("reconstruction is not isomorphic to the input".into()));
    }
    Ok(trace)
}

fn least_triad(m: &BinaryMatroid) -> Option<SubsetMask> {
    let mut keyed: HashMap<SubsetMask, _> = HashMap::new();
    for t in m.triads().into_iter().filter(|&t| m.is_independent(t)) {
        keyed.insert(t, canonical_form_marked(m, t));
    }
    keyed.into_iter().min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0))).map(|(t, _)| t)
}

/// `Δ_r°`: `Δ_r` with a parallel copy `ai'` of `ai` and `ei'` of `ei` for
/// `i = 1..r-1`.
pub fn delta_r_circ(r: usize) -> Result<BinaryMatroid> {
    let base = catalog::mobius(catalog::MobiusKind::Triangular, r)?;
    let mut labels = base.labels().to_vec();
    let mut cols = base.cols().to_vec();
    for i in 1..r {
        for name in [format!("a{i}"), format!("e{i}")] {
            cols.push(base.col(base.idx(&name)?));
            labels.push(format!("{name}'"));
        }
    }
    BinaryMatroid::from_columns(labels, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fano, mobius, MobiusKind};

    #[test]
    fn delta_raises_rank_and_inverts() {
        let f = fano();
        for t in f.triangles() {
            let d = delta_y(&f, t).unwrap();
            assert_eq!(d.rank(), 4);
            assert!(d.is_cocircuit(t));
            assert_eq!(wye_delta(&d, t).unwrap(), f);
        }
    }

    #[test]
    fn dependent_or_missing_triangle_is_rejected() {
        let f = fano();
        let not_triangle = f.mask(&["1", "2", "3"]).unwrap();
        assert!(matches!(delta_y(&f, not_triangle), Err(Error::NotCoindependentTriangle(_))));
        assert!(matches!(wye_delta(&f, not_triangle), Err(Error::NotIndependentTriad(_))));
    }

    #[test]
    fn single_member_multiset_is_plain_delta() {
        let d4 = mobius(MobiusKind::Triangular, 4).unwrap();
        let t = d4.triangles()[0];
        let ts = TriangleMultiset::new(&d4, vec![t], CircuitKind::Circuit).unwrap();
        assert_eq!(delta_multi(&d4, &ts).unwrap(), delta_y(&d4, t).unwrap());
    }

    #[test]
    fn repeated_member_adds_parallel_copies() {
        let f = fano();
        let t = f.triangles()[0];
        let ts = TriangleMultiset::new(&f, vec![t, t], CircuitKind::Circuit).unwrap();
        let d = delta_multi(&f, &ts).unwrap();
        assert_eq!((d.len(), d.rank()), (10, 5));
    }

    #[test]
    fn triangle_free_matroid_has_only_empty_legitimate_set() {
        let k33 = crate::catalog::mk33();
        let sets = legitimate_sets(&k33);
        assert_eq!(sets.len(), 1);
        assert!(sets[0].is_empty());
    }

    #[test]
    fn delta_r_circ_sizes() {
        let m = delta_r_circ(4).unwrap();
        assert_eq!((m.len(), m.rank()), (16, 4));
    }
}
