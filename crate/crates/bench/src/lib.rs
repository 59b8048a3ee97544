//! Inputs shared by the benchmarks in `benches/`.

use binmat::catalog::{mobius, MobiusKind, Sporadic};
use binmat::BinaryMatroid;

/// Hosts for the minor and canonical-form benchmarks, smallest first.
pub fn hosts() -> Vec<(&'static str, BinaryMatroid)> {
    vec![
        ("delta4", mobius(MobiusKind::Triangular, 4).expect("delta4")),
        ("m5_12a", Sporadic::M5_12a.build()),
        ("t12", Sporadic::T12.build()),
        ("m7_15", Sporadic::M7_15.build()),
        ("delta6", mobius(MobiusKind::Triangular, 6).expect("delta6")),
    ]
}
