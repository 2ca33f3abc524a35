//! The P(1,4) algebra: metric, epsilon symbol, generators, structure
//! constants, matrix realizations and the invariants P^2, V, W.
//!
//! All functions are pure over immutable inputs and safe to call
//! concurrently; verification reports are ordered by generator pair.

pub mod bracket;
pub mod generator;
pub mod invariants;
pub mod metric;
pub mod momentum;
pub mod realization;

pub use bracket::{bracket, jacobi_combo, structure_constants, GeneratorCombo, StructureTable};
pub use generator::{GeneratorId, GeneratorKind};
pub use invariants::{
    casimir_p2, casimir_v, casimir_w, centrality_residual, frozen_w, little_algebra, FrozenWTensor,
};
pub use metric::{epsilon5, metric, MetricSignature, DIM};
pub use momentum::FiveMomentum;
pub use realization::{
    build_adjoint_realization, build_affine_realization, jacobi_matrix_residual,
    verify_bracket_subset, verify_realization, MatrixRealization, PairResidual,
    VerificationReport,
};
