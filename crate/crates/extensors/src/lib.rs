//! Exact exterior-algebra ("extensor") arithmetic and the graph algorithms
//! built on it: detection and approximate counting of k-vertex paths,
//! approximate counting of bounded-pathwidth subgraphs, and detection of
//! degree-k multilinear terms in arithmetic circuits.
//!
//! Everything is computed over exact coefficient rings — integers,
//! rationals, prime fields, Q(√3), sparse multilinear polynomials — with no
//! floating point in any algebra path. Randomized algorithms draw all
//! randomness through seeded, stream-derived generators, so every result is
//! reproducible from a single master seed regardless of thread schedule.

pub mod circuit;
pub mod coding;
pub mod decomp;
pub mod error;
pub mod exterior;
pub mod graph;
pub mod oracle;
pub mod paths;
pub mod ring;
pub mod subgraph;
pub mod zeon;

pub use error::{Error, Result};
