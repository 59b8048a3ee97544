//! Single-element extensions and coextensions up to isomorphism, splitter
//! tests and the reduction-step search.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isomin::{canonical_labelling, has_minor, is_wheel, CanonicalKey};
use crate::matroid::{BinaryMatroid, SubsetMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Extend,
    Coextend,
}

type Predicate = Arc<dyn Fn(&BinaryMatroid) -> bool + Send + Sync>;

/// Conditions every generated matroid must meet.
#[derive(Clone, Default)]
pub struct GenFilter {
    pub three_connected: bool,
    pub internally_4c: bool,
    pub vertically_4c: bool,
    pub simple: bool,
    pub cosimple: bool,
    /// None of these may be a minor.
    pub excluded: Vec<BinaryMatroid>,
    /// Each of these must be a minor.
    pub required: Vec<BinaryMatroid>,
    predicates: Vec<Predicate>,
}

impl fmt::Debug for GenFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenFilter")
            .field("three_connected", &self.three_connected)
            .field("internally_4c", &self.internally_4c)
            .field("vertically_4c", &self.vertically_4c)
            .field("simple", &self.simple)
            .field("cosimple", &self.cosimple)
            .field("excluded", &self.excluded.len())
            .field("required", &self.required.len())
            .field("predicates", &self.predicates.len())
            .finish()
    }
}

impl GenFilter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn three_connected(mut self) -> Self {
        self.three_connected = true;
        self
    }

    pub fn internally_4c(mut self) -> Self {
        self.internally_4c = true;
        self
    }

    pub fn vertically_4c(mut self) -> Self {
        self.vertically_4c = true;
        self
    }

    pub fn simple(mut self) -> Self {
        self.simple = true;
        self
    }

    pub fn cosimple(mut self) -> Self {
        self.cosimple = true;
        self
    }

    pub fn excluding(mut self, n: BinaryMatroid) -> Self {
        self.excluded.push(n);
        self
    }

    pub fn requiring(mut self, n: BinaryMatroid) -> Self {
        self.required.push(n);
        self
    }

    /// Adds a predicate on the generated matroid. Predicates see the result
    /// in the requested direction, never its dual.
    pub fn with_predicate(mut self, p: impl Fn(&BinaryMatroid) -> bool + Send + Sync + 'static) -> Self {
        self.predicates.push(Arc::new(p));
        self
    }

    /// The filter for duals: simple and cosimple swap, minors are dualized.
    /// Vertical 4-connectivity has no dual flag here, so it is kept for a
    /// post-hoc check by the caller; predicates are dropped.
    fn dual_structural(&self) -> GenFilter {
        GenFilter {
            three_connected: self.three_connected,
            internally_4c: self.internally_4c,
            vertically_4c: false,
            simple: self.cosimple,
            cosimple: self.simple,
            excluded: self.excluded.iter().map(|n| n.dual()).collect(),
            required: self.required.iter().map(|n| n.dual()).collect(),
            predicates: Vec::new(),
        }
    }

    /// Whether `m` passes every condition, cheapest first.
    pub fn accepts(&self, m: &BinaryMatroid) -> bool {
        (!self.simple || m.is_simple())
            && (!self.cosimple || m.is_cosimple())
            && (!self.three_connected || m.is_3connected())
            && (!self.internally_4c || m.is_internally_4connected())
            && (!self.vertically_4c || m.is_vertically_4connected())
            && self.predicates.iter().all(|p| p(m))
            && self.required.iter().all(|n| has_minor(m, n).is_some())
            && self.excluded.iter().all(|n| has_minor(m, n).is_none())
    }
}

/// A label not yet used in `m`: `x`, then `x1`, `x2`, ...
pub fn fresh_label(m: &BinaryMatroid) -> String {
    if m.index_of("x").is_none() {
        return "x".into();
    }
    (1..).map(|k| format!("x{k}")).find(|l| m.index_of(l).is_none()).expect("some label is free")
}

/// Every single-element extension (or coextension) of `m` passing `f`, one
/// per isomorphism class, sorted by canonical key. The new element is
/// labelled by [`fresh_label`].
///
/// Extensions range over all nonzero columns, so parallel extensions are
/// produced unless the filter excludes them.
pub fn generate(m: &BinaryMatroid, dir: Direction, f: &GenFilter) -> Vec<BinaryMatroid> {
    let label = fresh_label(m);
    let mut out: Vec<(CanonicalKey, BinaryMatroid)> = match dir {
        Direction::Extend => extensions(m, &label, f),
        Direction::Coextend => {
            let df = f.dual_structural();
            extensions(&m.dual(), &label, &df)
                .into_iter()
                .map(|(k, e)| (k, e.dual()))
                .filter(|(_, e)| (!f.vertically_4c || e.is_vertically_4connected()) && f.predicates.iter().all(|p| p(e)))
                .collect()
        }
    };
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, e)| e).collect()
}

/// Extensions keyed by the canonical key of the extension itself.
fn extensions(m: &BinaryMatroid, label: &str, f: &GenFilter) -> Vec<(CanonicalKey, BinaryMatroid)> {
    let r = m.rank();
    assert!(r < 31, "rank too large to enumerate every column");
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();
    for v in 1u64..(1 << r) {
        if f.simple && m.cols().contains(&v) {
            continue;
        }
        let e = m.extend(label, v).expect("fresh label");
        let key = e.canonical_key().clone();
        if !seen.insert(key.clone()) {
            continue;
        }
        if f.accepts(&e) {
            out.push((key, e));
        }
    }
    out
}

/// Every nonzero column of `m`'s extensions, without isomorphism reduction.
pub fn all_extensions(m: &BinaryMatroid) -> Vec<BinaryMatroid> {
    let label = fresh_label(m);
    (1u64..(1 << m.rank())).map(|v| m.extend(&label, v).expect("fresh label")).collect()
}

/// Every single-element extension (or coextension) of `m` passing `f`, as
/// labelled matroids: one per nonzero column, or one per nonzero row over
/// the elements outside the lex basis, in increasing order of that vector.
/// The new element is called `label`.
pub fn generate_labelled(m: &BinaryMatroid, dir: Direction, label: &str, f: &GenFilter) -> Result<Vec<BinaryMatroid>> {
    if m.index_of(label).is_some() {
        return Err(Error::Invalid(format!("label {label} already in use")));
    }
    Ok(match dir {
        Direction::Extend => {
            assert!(m.rank() < 31, "rank too large to enumerate every column");
            (1u64..(1 << m.rank()))
                .filter(|v| !f.simple || !m.cols().contains(v))
                .map(|v| m.extend(label, v).expect("label is free"))
                .filter(|e| f.accepts(e))
                .collect()
        }
        Direction::Coextend => {
            let outside: Vec<usize> = (m.ground() - m.lex_basis()).iter().collect();
            assert!(outside.len() < 31, "corank too large to enumerate every row");
            (1u64..(1 << outside.len()))
                .map(|v| {
                    let row = SubsetMask::from_indices(outside.iter().enumerate().filter(|(k, _)| v >> k & 1 == 1).map(|(_, &i)| i));
                    m.coextend(label, row).expect("label is free")
                })
                .filter(|e| f.accepts(e))
                .collect()
        }
    })
}

/// The coextensions of `m` by `label` in which `t` together with the new
/// element is both a circuit and a cocircuit.
///
/// For a triangle `t` of a 3-connected binary matroid there is exactly one.
pub fn quad_coextensions(m: &BinaryMatroid, t: SubsetMask, label: &str) -> Result<Vec<BinaryMatroid>> {
    if m.index_of(label).is_some() {
        return Err(Error::Invalid(format!("label {label} already in use")));
    }
    let outside: Vec<usize> = (m.ground() - m.lex_basis()).iter().collect();
    let mut out = Vec::new();
    for v in 1u64..(1 << outside.len()) {
        let row = SubsetMask::from_indices(outside.iter().enumerate().filter(|(k, _)| v >> k & 1 == 1).map(|(_, &i)| i));
        let c = m.coextend(label, row)?;
        let quad = t.with(c.len() - 1);
        if c.is_circuit(quad) && c.is_cocircuit(quad) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Whether `m` has no 3-connected single-element extension or coextension
/// avoiding every matroid in `forbidden`.
pub fn is_splitter(m: &BinaryMatroid, forbidden: &[BinaryMatroid]) -> Result<bool> {
    if m.len() < 4 || !m.is_3connected() {
        return Err(Error::NotThreeConnected);
    }
    if is_wheel(m) {
        return Err(Error::IsAWheel);
    }
    let mut f = GenFilter::new().three_connected();
    f.excluded = forbidden.to_vec();
    Ok(generate(m, Direction::Extend, &f).is_empty() && generate(m, Direction::Coextend, &f).is_empty())
}

/// The shape of a reduction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepShape {
    /// `M \ x`.
    Delete,
    /// `si(M / x)`.
    Contract1,
    /// `si(M / x / y)`.
    Contract2,
    /// `si(M / x / y / z)`.
    Contract3,
}

/// Which connectivity property the result of a step satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepFlag {
    InternallyFourConnected,
    VerticallyFourConnected,
}

/// Outcome of [`reduce_step`].
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub shape: StepShape,
    /// Labels deleted or contracted, in order.
    pub removed: Vec<String>,
    pub result: BinaryMatroid,
    pub flag: StepFlag,
}

/// Largest drop in size accepted for one step.
pub const STEP_BUDGET: usize = 4;

/// Finds a proper internally 4-connected minor `M0` of `m` with an
/// `n`-minor and `|E(M)| - |E(M0)| <= 4`, trying `M \ x`, then
/// `si(M / x)`, `si(M / x / y)` and `si(M / x / y / z)`, with elements in
/// canonical order.
///
/// For the contraction shapes the step is accepted when `si` of the
/// contraction is internally 4-connected, or when the contraction itself is
/// vertically 4-connected; `flag` tells which.
pub fn reduce_step(m: &BinaryMatroid, n: &BinaryMatroid) -> Result<ReductionStep> {
    if n.len() >= m.len() || n.rank() > m.rank() {
        return Err(Error::NotFound);
    }
    let order = canonical_labelling(m, None).order;
    let qualifies = |r: &BinaryMatroid| {
        r.len() >= n.len()
            && m.len() - r.len() <= STEP_BUDGET
            && r.rank() >= n.rank()
            && r.corank() >= n.corank()
            && r.is_internally_4connected()
            && has_minor(r, n).is_some()
    };
    for &x in &order {
        let r = m.delete(SubsetMask::singleton(x));
        if qualifies(&r) {
            return Ok(ReductionStep {
                shape: StepShape::Delete,
                removed: vec![m.label(x).to_string()],
                result: r,
                flag: StepFlag::InternallyFourConnected,
            });
        }
    }
    let shapes = [(1, StepShape::Contract1), (2, StepShape::Contract2), (3, StepShape::Contract3)];
    for (k, shape) in shapes {
        let mut found = None;
        for_each_subset(&order, k, &mut |pick| {
            let c = SubsetMask::from_indices(pick.iter().copied());
            if !m.is_independent(c) {
                return false;
            }
            let contracted = m.contract(c);
            let si = contracted.simplify();
            if qualifies(&si) {
                let flag = StepFlag::InternallyFourConnected;
                found = Some((pick.to_vec(), si, flag));
                return true;
            }
            if si.len() >= n.len()
                && m.len() - si.len() <= STEP_BUDGET
                && contracted.is_vertically_4connected()
                && has_minor(&si, n).is_some()
            {
                found = Some((pick.to_vec(), si, StepFlag::VerticallyFourConnected));
                return true;
            }
            false
        });
        if let Some((pick, result, flag)) = found {
            return Ok(ReductionStep { shape, removed: pick.iter().map(|&i| m.label(i).to_string()).collect(), result, flag });
        }
    }
    Err(Error::NotFound)
}

/// Calls `visit` on each `k`-subset of `items` in lexicographic order of
/// positions until it returns true.
fn for_each_subset(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if go(items, k, i + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, k, 0, &mut Vec::with_capacity(k), visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fano, mobius, wheel, MobiusKind};

    #[test]
    fn fano_has_one_simple_extension_class() {
        let f = fano();
        let simple = generate(&f, Direction::Extend, &GenFilter::new().simple());
        assert!(simple.is_empty());
        let any = generate(&f, Direction::Extend, &GenFilter::new());
        assert_eq!(any.len(), 1);
    }

    #[test]
    fn coextension_is_dual_of_extension() {
        let d4 = mobius(MobiusKind::Triangular, 4).unwrap();
        let f = GenFilter::new().three_connected();
        let co = generate(&d4, Direction::Coextend, &f);
        let ex = generate(&d4.dual(), Direction::Extend, &f);
        assert_eq!(co.len(), ex.len());
        for (a, b) in co.iter().zip(&ex) {
            assert_eq!(a.dual().canonical_key(), b.canonical_key());
        }
    }

    #[test]
    fn wheel_is_rejected_as_splitter() {
        let w = wheel(4).cycle_matroid();
        assert!(matches!(is_splitter(&w, &[]), Err(Error::IsAWheel)));
    }

    #[test]
    fn equal_sizes_give_not_found() {
        let d4 = mobius(MobiusKind::Triangular, 4).unwrap();
        assert!(matches!(reduce_step(&d4, &d4), Err(Error::NotFound)));
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(&[5, 6, 7], 2, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![5, 6], vec![5, 7], vec![6, 7]]);
    }
}
