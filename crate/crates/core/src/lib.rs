//! Exact-arithmetic toolkit for crossing and intersecting families of
//! geometric graphs on planar point sets.
//!
//! Everything truth-valued runs on arbitrary-precision rationals: predicates
//! never see a float, so every verdict the library reports is a theorem about
//! the instance, not an approximation. The crate has four layers:
//!
//! * [`geom`] exact predicates and primitives (orientation, segment and
//!   elbow crossing, general position, convex position),
//! * [`graphs`] geometric graphs, crossing/avoiding/intersecting families,
//!   and cycle crossing counts,
//! * [`constructions`] the extremal families themselves (elbows, nested
//!   triangle grids, maximally crossing Hamiltonian cycles, blades,
//!   long matchings, wedge families, antichain families),
//! * [`oracles`] independent brute-force baselines the constructions are
//!   checked against, plus [`equipartition`] and the [`document`]/[`render`]
//!   I/O layer used by the `crossfam` binary.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability and doubles as executable documentation.

pub mod numeric;
pub mod geom;
pub mod graphs;
pub mod equipartition;
pub mod constructions;
pub mod oracles;
pub mod document;
pub mod render;

use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by layer; everything is cheap to construct and
/// carries enough context to be actionable from a CLI message.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a degeneracy precondition (coincident points,
    /// zero-length segment, and similar).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Two graphs that must be vertex-disjoint share a vertex.
    #[error("shared vertex between graphs: {0}")]
    SharedVertex(String),

    /// Operands are of different graph kinds where one kind is required.
    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    /// A size parameter is outside the supported range.
    #[error("invalid size: {0}")]
    InvalidSize(String),

    /// The point set fails the general-position requirement for the
    /// operation.
    #[error("general position violation: {0}")]
    GeneralPositionViolation(String),

    /// An enumeration or search exceeded its configured resource cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Certified interval arithmetic could not separate two quantities even
    /// at the maximum working precision.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// Two candidates compare exactly equal where a strict order is needed.
    #[error("tie unresolved: {0}")]
    TieUnresolved(String),

    /// A search completed without finding a witness that is guaranteed to
    /// exist under the preconditions.
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    /// A separated point-set family violates its separation certificate.
    #[error("separation violation: {0}")]
    SeparationViolation(String),

    /// A transversal polygon that must be convex is not.
    #[error("transversal not convex: {0}")]
    TransversalNotConvex(String),

    /// Points required to be in convex position are not.
    #[error("not in convex position: {0}")]
    NotConvexPosition(String),

    /// An equipartition does not exist for the requested parameters.
    #[error("partition failure: {0}")]
    PartitionFailure(String),

    /// A labeling rule hit a configuration it cannot label.
    #[error("degenerate labeling: {0}")]
    DegenerateLabeling(String),

    /// An index refers outside the point set or family.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A query point lies exactly on a partition boundary.
    #[error("point on boundary: {0}")]
    OnBoundary(String),

    /// A document failed schema validation.
    #[error("schema error: {0}")]
    Schema(String),

    /// A number or document failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Underlying JSON failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
