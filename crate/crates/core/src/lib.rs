//! Quasi-diagram calculus for gentle algebras with one maximal path.
//!
//! A quasi-diagram is an involution of `{1..n}`; gluing the vertices of a
//! linear `A_n` quiver along its classes produces a gentle algebra with one
//! maximal path, and every such algebra arises this way. This crate computes
//! the combinatorial side of that correspondence:
//!
//! * [`perm`] — exact permutation arithmetic and cycle notation;
//! * [`diagram`] — chords, isolated points, faces, surface invariants;
//! * [`homology`] — regularity, global dimension, Koszul dual existence;
//! * [`gentle`] — the glued quiver presentation and an independent
//!   global-dimension oracle via paths with full relations;
//! * [`group`] — the dihedral conjugation action, orbits, rotatable
//!   regularity, and closure under rotations and duals;
//! * [`moves`] — expansions, contractions and decomposition into a chord
//!   diagram base;
//! * [`enumerate`] — streams over involutions and matchings plus the exact
//!   counting formulas, each one backed by brute force.
//!
//! Composition convention, repo-wide: `p.compose(&q)` applies `q` first.

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod gentle;
pub mod group;
pub mod homology;
pub mod moves;
pub mod perm;

pub use diagram::{DiagramWire, FaceDecomposition, QuasiDiagram, SurfaceInvariants};
pub use error::{Error, Result};
pub use gentle::{DualPresentation, FullRelationPath, GentlePresentation};
pub use group::{ClosureResult, OrbitReport, SymmetryGroup};
pub use homology::{ExtendedNat, HomologyReport, KoszulInfo, KoszulType};
pub use moves::ExpansionTrace;
pub use perm::{CycleDecomposition, Permutation};
