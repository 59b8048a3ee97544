//! Binary matroid algorithms over GF(2).
//!
//! Matroids are stored as labelled column families in reduced row-echelon
//! form ([`BinaryMatroid`]). On top of that the crate provides connectivity
//! analysis, canonical forms and minor testing, delta-wye exchange, a
//! catalog of named matroids, extension generation and a registry of
//! executable checks.

pub mod bmx;
pub mod catalog;
pub mod deltawye;
pub mod error;
pub mod gen;
pub mod gf2;
pub mod isomin;
pub mod matroid;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{FundamentalGraph, Gf2Matrix, StandardForm};
pub use isomin::{has_minor, is_isomorphic, CanonicalKey, MinorWitness};
pub use matroid::{BinaryMatroid, CircuitKind, SubsetMask};
