use core::fmt;

use crate::graph::Vertex;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vertex outside `1..=n`.
    VertexOutOfRange {
        vertex: Vertex,
        n: usize,
    },
    /// A vertex listed twice in a sequence.
    RepeatedVertex(Vertex),
    SelfLoop(Vertex),
    DuplicateEdge(Vertex, Vertex),
    /// Parameters of a structured family that do not describe a graph.
    InvalidStructure(&'static str),
    /// The input is larger than the exhaustive routine accepts.
    TooLarge {
        n: usize,
        limit: usize,
    },
    NotIndependent,
    NotSplit,
    /// A split partition that does not match the graph it is used with.
    InvalidPartition(&'static str),
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    EmptyPart(Vertex),
    /// A vertex required by a lifting is absent from the main sequence or
    /// from the part sequences.
    MissingVertex(Vertex),
    /// Sequences passed to a concatenation share a vertex.
    OverlappingSequences(Vertex),
    /// Independent set of a path power outside the family with
    /// `min ≤ m + 1` and `max ≥ n − m`.
    NotInFamily,
    NoIndependentPair,
    /// The structured kind has no closed form at this order.
    NotClosedForm,
    /// Profile values must be at least one.
    InvalidProfile(Vertex),
    IntractablePrime {
        size: usize,
    },
    /// A callback or internal check produced contradictory results.
    Inconsistent(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::RepeatedVertex(v) => write!(f, "vertex {v} appears more than once"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::InvalidStructure(why) => write!(f, "invalid structured graph: {why}"),
            Error::TooLarge { n, limit } => {
                write!(f, "graph has {n} vertices, exhaustive limit is {limit}")
            }
            Error::NotIndependent => f.write_str("vertex set is not independent"),
            Error::NotSplit => f.write_str("graph is not split"),
            Error::InvalidPartition(why) => write!(f, "invalid split partition: {why}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::EmptyPart(v) => write!(f, "part for main vertex {v} is empty"),
            Error::MissingVertex(v) => write!(f, "vertex {v} is missing"),
            Error::OverlappingSequences(v) => write!(f, "sequences share vertex {v}"),
            Error::NotInFamily => f.write_str("independent set is not anchored at both ends"),
            Error::NoIndependentPair => f.write_str("no independent pair exists"),
            Error::NotClosedForm => f.write_str("no closed form for this order"),
            Error::InvalidProfile(v) => write!(f, "profile value for vertex {v} must be >= 1"),
            Error::IntractablePrime { size } => {
                write!(f, "intractable prime node with {size} vertices")
            }
            Error::Inconsistent(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl core::error::Error for Error {}
