//! Exact rigidity engine for bar-joint frameworks with and without a
//! point-group symmetry of order two.

mod construct;
mod framework;
pub mod linalg;
mod matrix;
mod symmetric;

pub use construct::{
    cone, rigidity_via_contraction, split_and_realize, split_pair_and_realize, Cone, ContractionMode,
    ContractionReport, Realized, VertexSplit, MAX_HALVINGS,
};
pub use framework::{sample_gamma_generic, sample_generic, Framework, GammaFramework, PointGroup, Vector, COORD_BOX};
pub use matrix::{
    affine_span_dim, degenerate_edges, framework_span, is_inf_rigid, is_infinitesimal_motion, rigid_rank,
    rigidity_matrix, trivial_dim, trivial_motions, BlockData, Confidence, RigidityReport,
};
pub use symmetric::{
    affine_span_dim_symmetric, check_gluing, gamma_rigidity_with_witness, is_gamma_rigid, is_generically_rigid,
    is_z2_symmetric_graph, symmetric_block_split, symmetric_maxwell_bound, GluingVerdict, MaxwellBound, SpanCheck,
    DEFAULT_TRIALS, RESAMPLE_CAP,
};
