//! Finite commutative rings, their ideal lattices, and the two graphs on
//! nonzero annihilating ideals: the annihilating-ideal graph (edges `IJ = 0`)
//! and the annihilator-ideal graph (edges where `Ann(IJ)` strictly exceeds
//! `Ann(I) ∪ Ann(J)` as element sets).
//!
//! The crate builds rings from a small specification grammar, enumerates
//! their complete ideal lattices, constructs both graphs with their
//! invariants (connectivity, diameter, girth, shape classification, DOT
//! export), and machine-checks a catalogue of structural theorems about
//! these graphs over exhaustive corpora of small rings, reporting
//! counterexample witnesses on any failure.
//!
//! The annihilator-ideal graph also appears in the literature under the
//! notation `Γ'_Ann(R)`; it is the same graph as `A_I(R)` here.

pub mod corpus;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod ring;
pub mod ringspec;
pub mod verify;

pub use graph::{GraphKind, GraphShape, IdealGraph};
pub use ideal::{Ideal, IdealLattice};
pub use ring::{ElementSet, FiniteRing, RingError};
pub use ringspec::RingSpec;
pub use verify::{RingAnalysis, Status, TheoremId, VerificationReport};
