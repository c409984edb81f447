//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the library.
///
/// Every fallible operation names the precondition or validation step it
/// failed; nothing is reported as a bare string without context.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A vertex index was used that is not below the vertex count.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A self-loop was supplied where a simple graph is required.
    SelfLoop { vertex: usize },
    /// Two objects that must share a vertex count do not.
    VertexCountMismatch { expected: usize, got: usize },
    /// An operation on a nonempty graph was called with `n = 0`.
    EmptyGraph,
    /// An Eulerian orientation was requested but some vertex has odd degree.
    OddDegree { vertex: usize },
    /// The input must be a forest but contains a cycle.
    NotAForest,
    /// The input must be a tree (connected and acyclic).
    NotATree,
    /// A tree of diameter at most 3 was required.
    DiameterTooLarge { diameter: usize },
    /// A component with at least two independent cycles was found.
    MulticyclicComponent { component_vertex: usize },
    /// A bounded interval with `lo > hi`.
    BadInterval { lo: i64, hi: i64 },
    /// A box references a dimension at or beyond the declared dimension count.
    DimOutOfRange {
        vertex: usize,
        dim: usize,
        dims: usize,
    },
    /// A representation does not realize the graph it was claimed to realize.
    DoesNotRealize {
        u: usize,
        v: usize,
        expected_edge: bool,
    },
    /// A cover part is not co-interval (its complement within its support is
    /// not an interval graph).
    PartNotCoInterval { part: usize },
    /// A cover part uses an edge absent from the base graph.
    PartEdgeNotInBase { part: usize, u: usize, v: usize },
    /// The cover parts miss an edge of the base graph.
    CoverIncomplete { u: usize, v: usize },
    /// A family member is not an interval supergraph of the intersection.
    BadFamilyMember { member: usize },
    /// An interval model does not realize the intended graph.
    BadIntervalModel { u: usize, v: usize },
    /// Codec preconditions violated (unnormalized, over-local, or out of range).
    CodecPrecondition(String),
    /// A bit string could not be decoded.
    CodecCorrupt(String),
    /// A prime was required.
    NotPrime { value: u64 },
    /// A threshold argument is below the window where existence is guaranteed.
    BelowThreshold { got: f64, threshold: f64 },
    /// A Steiner system failed validation.
    InvalidSteiner(String),
    /// A probability outside `[0, 1]`.
    BadProbability { p: f64 },
    /// A parameter outside its admissible range.
    BadParameter(String),
    /// A composition block representation failed verification.
    BadBlockRep { block: usize },
    /// Resampling hit its retry cap; carries the number of violations of the
    /// best attempt seen.
    RetriesExhausted {
        retries: usize,
        best_violations: usize,
    },
    /// A randomized pipeline failed and names the offending object.
    PipelineFailure(String),
    /// A representation violates the shape required by a coloring routine.
    ShapeViolation { vertex: usize, detail: String },
    /// A hypothesis required for a routine's guarantee does not hold.
    Hypothesis(String),
    /// The driver has no applicable strategy for the input.
    NoStrategy(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::VertexCountMismatch { expected, got } => {
                write!(f, "vertex count mismatch: expected {expected}, got {got}")
            }
            Error::EmptyGraph => write!(f, "operation undefined on the empty graph"),
            Error::OddDegree { vertex } => {
                write!(f, "vertex {vertex} has odd degree; Eulerian orientation impossible")
            }
            Error::NotAForest => write!(f, "input contains a cycle; a forest is required"),
            Error::NotATree => write!(f, "input is not a tree"),
            Error::DiameterTooLarge { diameter } => {
                write!(f, "tree has diameter {diameter}; at most 3 is required")
            }
            Error::MulticyclicComponent { component_vertex } => write!(
                f,
                "component containing vertex {component_vertex} has at least two cycles"
            ),
            Error::BadInterval { lo, hi } => write!(f, "bad interval [{lo}, {hi}]"),
            Error::DimOutOfRange { vertex, dim, dims } => {
                write!(f, "box of vertex {vertex} bounded in dimension {dim} >= dims {dims}")
            }
            Error::DoesNotRealize { u, v, expected_edge } => write!(
                f,
                "representation disagrees with graph on pair ({u}, {v}): edge expected = {expected_edge}"
            ),
            Error::PartNotCoInterval { part } => write!(f, "cover part {part} is not co-interval"),
            Error::PartEdgeNotInBase { part, u, v } => {
                write!(f, "cover part {part} uses edge ({u}, {v}) absent from the base graph")
            }
            Error::CoverIncomplete { u, v } => {
                write!(f, "cover misses base edge ({u}, {v})")
            }
            Error::BadFamilyMember { member } => {
                write!(f, "family member {member} is not an interval supergraph of the intersection")
            }
            Error::BadIntervalModel { u, v } => {
                write!(f, "interval model disagrees with graph on pair ({u}, {v})")
            }
            Error::CodecPrecondition(msg) => write!(f, "codec precondition violated: {msg}"),
            Error::CodecCorrupt(msg) => write!(f, "corrupt code word: {msg}"),
            Error::NotPrime { value } => write!(f, "{value} is not prime"),
            Error::BelowThreshold { got, threshold } => {
                write!(f, "argument {got} below guaranteed threshold {threshold}")
            }
            Error::InvalidSteiner(msg) => write!(f, "invalid Steiner system: {msg}"),
            Error::BadProbability { p } => write!(f, "probability {p} outside [0, 1]"),
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::BadBlockRep { block } => {
                write!(f, "block representation {block} does not realize its block graph")
            }
            Error::RetriesExhausted { retries, best_violations } => write!(
                f,
                "resampling failed after {retries} retries; best attempt had {best_violations} violations"
            ),
            Error::PipelineFailure(msg) => write!(f, "pipeline failure: {msg}"),
            Error::ShapeViolation { vertex, detail } => {
                write!(f, "representation shape violated at vertex {vertex}: {detail}")
            }
            Error::Hypothesis(msg) => write!(f, "hypothesis not satisfied: {msg}"),
            Error::NoStrategy(msg) => write!(f, "no applicable strategy: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
