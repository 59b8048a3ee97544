//! The check registry and the classifier for internally 4-connected binary
//! matroids without an `M(K3,3)`-minor.
//!
//! Each registered check recomputes one finite claim (a count, an
//! isomorphism class or a minor outcome) and reports it next to the expected
//! value. Checks run one at a time, each on its own thread under a time
//! budget; an overrun is reported as a failure.

mod checks;
mod classify;
mod searches;

use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classify::{classify, Evidence, Verdict, VerdictKind, CONFIRM_LIMIT};
pub use searches::{prop25_pipeline, sweep, PipelineCounts};

/// Outcome of one registered check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// What the check asserts.
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    /// `expected == computed`.
    pub pass: bool,
    /// Supporting counts that are not part of the comparison.
    pub detail: String,
    pub wall_time_ms: u64,
}

/// What a check body returns.
pub(crate) struct Outcome {
    pub expected: String,
    pub computed: String,
    pub detail: String,
}

impl Outcome {
    pub fn new(expected: impl Into<String>, computed: impl Into<String>) -> Self {
        Outcome { expected: expected.into(), computed: computed.into(), detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// A registry entry.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Default time budget.
    pub budget: Duration,
    run: fn() -> Outcome,
}

const SMALL: Duration = Duration::from_secs(60);
const LARGE: Duration = Duration::from_secs(900);

macro_rules! spec {
    ($id:literal, $budget:expr, $run:path, $anchor:literal) => {
        CheckSpec { id: $id, anchor: $anchor, budget: $budget, run: $run }
    };
}

static REGISTRY: &[CheckSpec] = &[
    spec!("V01", SMALL, checks::census_flags, "census: every entry is internally 4-connected; among the sporadic matroids only M5,11 fails vertical 4-connectivity, through a single triad"),
    spec!("V02", SMALL, checks::sporadics_k33_free, "no sporadic matroid has an M(K3,3)-minor"),
    spec!("V03", SMALL, checks::t12_neighbours, "T12 is the only 3-connected extension or coextension of T12\\e and of T12/e in ex(M(K3,3), Δ4)"),
    spec!("V04", SMALL, checks::splitters, "T12 is a splitter for ex(M(K3,3), Δ4) and M(K5) is a splitter for ex(F7, F7*, M(K3,3))"),
    spec!("V05", SMALL, checks::delta_on_rim_triangle, "Δ-Y on the triangle {a1, e1, e4} of Δ4 gives an M(K3,3)-minor"),
    spec!("V06", SMALL, checks::double_delta_on_augmented_d4, "Δ-Y on {a1, a2, b1'} then {b1, e1, e2} of Δ4 with b1' parallel to b1 gives an M(K3,3)-minor"),
    spec!("V07", SMALL, checks::fano_three_lines, "Δ-Y on three lines of F7 with no common point gives Δ4*, which has an M(K3,3)-minor"),
    spec!("V08", SMALL, checks::m411_legitimate_sets, "Δ-Y on each allowable triangle of M4,11 gives M5,11; legitimate sets of two or more triangles give an M(K3,3)-minor"),
    spec!("V09", SMALL, checks::delta4_plus_basics, "the quad coextension Δ4⁺ of Δ4 is unique and has no M(K3,3)-minor"),
    spec!("V10", SMALL, checks::delta4_plus_sweep, "every 3-connected extension or coextension of Δ4⁺ in which {a1, a2, b1, e5} is not a circuit-cocircuit has an M(K3,3)-minor"),
    spec!("V11", SMALL, checks::upsilon_tip_extensions, "tip extensions of Υr: r = 4 not vertically 4-connected; r = 6 all-ones has the minor, the other is T12; r = 8 both have the minor"),
    spec!("V12", SMALL, checks::delta_extensions, "3-connected extensions in ex(M(K3,3)): Δ4 has exactly C11 and M4,11, Δ5 has none"),
    spec!("V13", SMALL, checks::delta5_coextensions, "Δ5 has 24 labelled 3-connected coextensions in ex(M(K3,3)), each cocircuit of the listed shapes"),
    spec!("V14", SMALL, checks::delta6_special_coextensions, "the four coextensions of Δ6 by {a2, a3, b1, b3, b4, b5} plus a subset of {a5, b2} have M(K3,3)-minors"),
    spec!("V15", SMALL, checks::delta4_coextensions, "Δ4 has 21 labelled 3-connected coextensions in ex(M(K3,3)), each M5,11 or attached to an allowable triangle"),
    spec!("V16", SMALL, checks::d4_triad_then_triangle, "Δ4 coextended by a triad on a spoke triangle then extended by a triangle: the outcome table for every third element"),
    spec!("V17", SMALL, checks::d5_triad_then_triangle, "the same construction on Δ5: every third element outside the permitted set gives an M(K3,3)-minor"),
    spec!("V18", SMALL, checks::d4_triad_two_triangles, "Δ4 coextended by a triad then extended by two triangles: Δ5, M5,13, or an M(K3,3)-minor in the seven other cases"),
    spec!("V19", SMALL, checks::d5_triad_two_triangles, "the same construction on Δ5: all eight cases other than (a1, e1) have an M(K3,3)-minor"),
    spec!("V20", SMALL, checks::d4_two_triads_spanning, "two triads on rank-4 pairs of allowable triangles of Δ4 closed by a triangle: only M6,13 is vertically 4-connected"),
    spec!("V21", SMALL, checks::d5_two_triads_adjacent_spokes, "two triads on allowable triangles of Δ5 with consecutive spokes closed by a triangle: all four cases have an M(K3,3)-minor"),
    spec!("V22", SMALL, checks::d5_two_triads_far_spokes, "two triads on disjoint allowable triangles of Δ5: exactly two of eighteen cases avoid the minor; both r = 6 follow-ups have it"),
    spec!("V23", SMALL, checks::d4_two_triads_meeting, "two triads on allowable triangles of Δ4 meeting in a rim element closed by a triangle give an M(K3,3)-minor"),
    spec!("V24", SMALL, checks::d4_nested_triads, "a triad through the common rim element then a second triad closed by a triangle: both cases give an M(K3,3)-minor"),
    spec!("V25", SMALL, checks::d4_good_triple, "the three-cofan reconstruction on Δ4 gives an M(K3,3)-minor"),
    spec!("V26", LARGE, checks::sporadic_extensions, "every internally 4-connected extension of a sporadic matroid has an M(K3,3)-minor or is sporadic"),
    spec!("V27", LARGE, checks::sporadic_coextensions, "coextensions of the sporadic matroids other than M9,18 and M11,21: only T12/e and T12 are vertically 4-connected; M7,15 has 12 labelled coextensions, each with a cocircuit inside a triangle plus e"),
    spec!("V28", SMALL, checks::m511_coextensions, "M5,11 has no 3-connected coextension in ex(M(K3,3))"),
    spec!("V29", LARGE, checks::sweep_coext_then_ext, "coextend then extend once or twice from the sporadic matroids other than M7,15, M9,18, M11,21: the internally 4-connected outputs"),
    spec!("V30", SMALL, checks::m512a_triad_claims, "triad-then-triangle constructions on M5,12a: the triangle meets T or closes a cocircuit with another allowable triangle; two-triangle variants have the minor"),
    spec!("V31", LARGE, checks::sweep_intersecting, "the coextend-then-extend sweep from sporadic matroids with intersecting triangles: the internally 4-connected outputs"),
    spec!("V32", LARGE, checks::sweep_two_coext, "coextend twice then extend once: the internally 4-connected outputs"),
    spec!("V33", SMALL, checks::good_triples, "good triples of allowable triangles in M4,11, M5,12a, M6,13 and M7,15 give no vertically 4-connected member of ex(M(K3,3))"),
    spec!("V34", LARGE, checks::quad_pipeline, "the Δ4 quad pipeline: EX and CO sizes, the seven candidate batches and their minor outcomes"),
    spec!("V35", SMALL, checks::inventories, "triangle and allowable-triangle inventories, deletion classes, intersecting triangles and pairwise four-cocircuits"),
    spec!("V36", SMALL, checks::mobius_suite, "Möbius matroids: internal 4-connectivity, minor ladders, cographic minors, no M(K3,3)-minor, triangles, allowable triangles and four-cocircuits"),
];

/// Every registered check, in id order.
pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn lookup(id: &str) -> Result<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id.eq_ignore_ascii_case(id)).ok_or_else(|| Error::UnknownCheckId(id.to_string()))
}

/// Runs the checks named in `ids` (all of them when `None`) with their
/// default budgets. Reports come back in id order.
pub fn run_checks(ids: Option<&[&str]>) -> Result<Vec<CheckReport>> {
    run_checks_with_budget(ids, None)
}

/// As [`run_checks`], with `budget` replacing every default budget.
pub fn run_checks_with_budget(ids: Option<&[&str]>, budget: Option<Duration>) -> Result<Vec<CheckReport>> {
    let mut specs: Vec<&'static CheckSpec> = match ids {
        None => REGISTRY.iter().collect(),
        Some(ids) => ids.iter().map(|id| lookup(id)).collect::<Result<_>>()?,
    };
    specs.sort_by_key(|s| s.id);
    specs.dedup_by_key(|s| s.id);
    Ok(specs.into_iter().map(|s| run_one(s, budget.unwrap_or(s.budget))).collect())
}

fn run_one(spec: &'static CheckSpec, budget: Duration) -> CheckReport {
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let run = spec.run;
    thread::Builder::new()
        .name(spec.id.to_string())
        .spawn(move || {
            let _ = tx.send(run());
        })
        .expect("spawn check thread");
    let outcome = rx.recv_timeout(budget);
    let wall_time_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(o) => CheckReport {
            id: spec.id.into(),
            anchor: spec.anchor.into(),
            pass: o.expected == o.computed,
            expected: o.expected,
            computed: o.computed,
            detail: o.detail,
            wall_time_ms,
        },
        Err(mpsc::RecvTimeoutError::Timeout) => CheckReport {
            id: spec.id.into(),
            anchor: spec.anchor.into(),
            expected: "completion within budget".into(),
            computed: format!("time budget of {} s exceeded", budget.as_secs()),
            pass: false,
            detail: String::new(),
            wall_time_ms,
        },
        Err(mpsc::RecvTimeoutError::Disconnected) => CheckReport {
            id: spec.id.into(),
            anchor: spec.anchor.into(),
            expected: "completion".into(),
            computed: "check panicked".into(),
            pass: false,
            detail: String::new(),
            wall_time_ms,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sorted_and_unique() {
        let ids = check_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_id_is_rejected() {
        assert!(matches!(run_checks(Some(&["V99"])), Err(Error::UnknownCheckId(_))));
    }

    #[test]
    fn overrun_is_a_failure() {
        let r = run_checks_with_budget(Some(&["V26"]), Some(Duration::from_millis(1))).unwrap();
        assert!(!r[0].pass);
        assert!(r[0].computed.contains("budget"));
    }

    #[test]
    fn small_checks_pass() {
        let r = run_checks(Some(&["V05", "V07", "V09", "V02"])).unwrap();
        assert_eq!(r.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["V02", "V05", "V07", "V09"]);
        for c in &r {
            assert!(c.pass, "{c:?}");
        }
    }
}
