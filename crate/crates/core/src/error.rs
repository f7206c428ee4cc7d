use thiserror::Error;

use crate::simplicial::{Face, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} repeated in a face")]
    DuplicateVertex(VertexId),
    #[error("facet {0} has multiplicity zero")]
    ZeroMultiplicity(Face),
    #[error("facet {facet} should have {expected} vertices")]
    FacetArity { facet: Face, expected: usize },
    #[error("requested {requested}-faces of a {k}-complex")]
    Dimension { requested: usize, k: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("facet {facet} has multiplicity {multiplicity}; operation needs a simplicial complex")]
    UnsupportedMultiset { facet: Face, multiplicity: usize },
    #[error("cannot contract vertex {0} onto itself")]
    ContractSameVertex(VertexId),
    #[error("edge {0}-{1} is a loop or has an endpoint outside the vertex set")]
    BadEdge(VertexId, VertexId),

    #[error("complex is not a cycle")]
    NotACycle,
    #[error("cycle space of dimension {0} is too large for exhaustive enumeration")]
    EnumerationTooLarge(usize),

    #[error("involution fixes vertex {0}")]
    FixedVertex(VertexId),
    #[error("vertex {0} appears in two pairs")]
    OverlappingPairs(VertexId),
    #[error("involution is not defined on vertex {0}")]
    InvolutionDomain(VertexId),
    #[error("face {0} is fixed by the involution")]
    FixedFace(Face),
    #[error("image of facet {0} is not a facet")]
    FacetImageMissing(Face),
    #[error("facet {0} and its image have different multiplicities")]
    MultiplicityMismatch(Face),
    #[error("paired vertices {0} and {1} are adjacent")]
    AdjacentPair(VertexId, VertexId),
    #[error("vertex count {0} exceeds the exhaustive search cap {1}")]
    SearchTooLarge(usize, usize),
    #[error("separator bound {bound} exceeds 2k = {limit}")]
    SeparatorBound { bound: usize, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("decomposition undefined: {0}")]
    DecompositionUndefined(String),

    #[error("point group with t = {t}, d = {d} is not an order-two group")]
    PointGroup { t: usize, d: usize },
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(VertexId),
    #[error("coordinates of vertex {0} have the wrong length")]
    CoordinateLength(VertexId),
    #[error("affine span has dimension {span}, below d - 1 = {needed}")]
    DegenerateSpan { span: usize, needed: usize },
    #[error("framework is not symmetric at vertex {0}")]
    NotSymmetric(VertexId),
    #[error("no numerical witness found after {0} halvings")]
    NumericalWitnessNotFound(u32),
    #[error("no non-degenerate sample after {0} attempts")]
    SamplingFailed(usize),

    #[error("argument out of range: {0}")]
    Range(String),
    #[error("generator infeasible: {0}")]
    Infeasible(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
