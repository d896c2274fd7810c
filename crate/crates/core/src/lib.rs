//! Pure algorithms for building and certifying 4-regular 4-connected graphs
//! whose number of Hamiltonian cycles does not grow with their order.
//!
//! Everything here is `no_std` + `alloc`: the multigraph carrier and its
//! graph6 codec, exact Hamiltonian cycle / path / 2-factor search,
//! flow-based connectivity certificates, the generators, and the condition
//! checkers. File formats other than graph6, threads, clocks and the CLI live
//! in the `quartic` companion crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod connectivity;
pub mod constructions;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod verify;

pub use graph::{EdgeRef, GraphError, MultiGraph, VertexId};
