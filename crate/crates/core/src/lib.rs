//! Symmetric rigidity of simplicial cycles.
//!
//! Simplicial multicomplexes and their GF(2) cycle structure, free
//! involutions and the ℤ₂-irreducible classification, (symmetric)
//! Fogelsanger decompositions, an exact rigidity engine and the symmetric
//! lower bound on g₂.

pub mod combinatorics;
pub mod cycles;
pub mod error;
pub mod fogelsanger;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod lowerbound;
pub mod rigidity;
pub mod simplicial;
pub mod symmetric;

pub use error::{Error, Result};
pub use graph::Graph;
pub use simplicial::{Face, MultiComplex, VertexId};
pub use symmetric::{Involution, SymmetricComplex};
