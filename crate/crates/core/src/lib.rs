//! Star-transposition Cayley graphs on the symmetric group, the related
//! partial permutation, Schreier coset and `K(2, n)` graphs, explicit
//! eigenvector constructions on them, and exact certificates that the
//! constructions are what they claim to be.

pub mod certify;
pub mod combinatorics;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod export;
pub mod graph;
pub mod limits;
pub mod numeric;

pub use error::{Error, Result};
pub use graph::{GraphKind, LoopyGraph};
pub use limits::Limits;
