//! Variable-length non-overlapping binary string families and the
//! variable-dimension non-overlapping matrix families built on top of them.
//!
//! Two string constructions are provided: a run-avoiding family whose
//! members frame an inner part free of `k` equal consecutive symbols
//! between `1^k 0` and `1 0^k`, and a Dyck family of elevated Dyck words.
//! Stacking same-width members under a fixed top and bottom row turns
//! either into a family of matrices no two of which (self included) can be
//! slid over one another to agreement.
//!
//! The crate pairs every construction with its closed-form cardinality
//! ([`counting`]) and with independent brute-force oracles ([`verify`])
//! that re-check the claimed properties by exhaustion at desk scale.

pub mod bitstring;
pub mod counting;
pub mod dyck;
pub mod error;
pub mod format;
pub mod matrix;
pub mod params;
pub mod verify;

pub use bitstring::{BitString, RunParams};
pub use counting::{BoundPair, CountMode};
pub use error::{Error, Result};
pub use matrix::{BinaryMatrix, OverlapKind, OverlapMode, OverlapReport};
pub use params::{Family, FamilyParams};
pub use verify::{Violation, ViolationWitness, WitnessOutcome};
