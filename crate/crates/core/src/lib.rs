//! Exact computation of Grundy domination numbers and Grundy dominating
//! sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple graphs on `1..=n`, bitset vertex sets, structured
//!   families (powers of paths and cycles, complements) and independent-set
//!   enumeration.
//! * [`sequence`] and [`oracle`]: vertex sequences, footprint certificates,
//!   and an exhaustive memoised search for `γ_gr(G)`, `γ_gr(G, I)` and the
//!   rooted variant.
//! * [`product`]: X-join and lexicographic products, sequence lifting and the
//!   generic max-over-independent-sets evaluator.
//! * [`mwis`]: maximum weight independent sets on powers of paths and cycles.
//! * [`closed`]: constructive sequences and closed forms for X-joins whose
//!   main factor is a power of a path or a cycle.
//! * [`split`]: split graph recognition and the split main-factor solver.
//! * [`moddecomp`]: modular decomposition and the recursive solver built on
//!   top of everything above.
//!
//! Everything is `no_std` with `alloc`; file formats and the command line
//! live in the `grundy` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closed;
pub mod error;
pub mod graph;
pub mod moddecomp;
pub mod mwis;
pub mod oracle;
pub mod product;
pub mod sequence;
pub mod split;

pub use error::{Error, Result};
pub use graph::{Graph, StructuredKind, Vertex, VertexSet};
pub use oracle::{GammaGivenI, OracleConfig};
pub use sequence::{FootprintCertificate, Verification, VertexSequence, Violation};
