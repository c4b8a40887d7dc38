//! Algebraic invariants and chip-firing on finite strongly connected directed
//! multigraphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`] and [`graph`] hold the data model: exact integer matrices and
//!   validated multigraphs with their total and reduced Laplacians.
//! * [`linalg`] provides exact linear algebra (determinants, Hermite and Smith
//!   normal forms, lattice membership and equality).
//! * [`invariants`] computes tree counts, the Pham index, the primitive period
//!   vector and the Eulerian / coEulerian / cactus classification.
//! * [`chipfiring`] runs chip-firing dynamics and decides the halting problem.
//! * [`sandpile`] works in the sandpile group of a sink.
//! * [`construct`] realises a zero-sum lattice as a Laplacian lattice and
//!   reduces nonnegative rank to halting.
//! * [`generate`] produces seeded random strongly connected graphs.

pub mod chipfiring;
pub mod construct;
mod error;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod matrix;
pub mod sandpile;

pub use chipfiring::{ChipConfig, FiringVector, HaltStatus, HaltingVerdict, Sandpile};
pub use error::{Error, Result};
pub use graph::DirectedMultigraph;
pub use invariants::GraphInvariants;
pub use matrix::{IntMatrix, IntVector};
