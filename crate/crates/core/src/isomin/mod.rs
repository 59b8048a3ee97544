//! Isomorphism, canonical forms, minor testing and blocking sequences.

mod blocking;
mod canon;
mod minor;

pub use blocking::{blocks, find_blocking_sequence, induced_minor, induces_separation, is_minimal, lambda_b};
pub(crate) use canon::compute_canonical_key;
pub use canon::{canonical_form, canonical_form_marked, canonical_labelling, is_isomorphic, Canonical, CanonicalKey};
pub use minor::{has_minor, has_minor_keeping, is_cographic, is_graphic, is_regular, is_wheel, normalize, MinorWitness};
