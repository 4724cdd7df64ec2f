//! Error type shared by every module of the crate.

use std::fmt;

use thiserror::Error;

use crate::scheme::Violation;

/// Conditions an arc model can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcCondition {
    /// Every point of the circle is an end-point of some arc.
    EndpointCover,
    /// Every arc has at least two points.
    MinSize,
    /// No arc is the whole circle, and starts lie on the circle.
    Bounds,
    /// No arc is contained in another.
    NoContainment,
    /// Circle length equals the vertex count.
    LengthEqualsOrder,
    /// Every point is an end-point of exactly two arcs.
    ExactlyTwoEndpoints,
}

impl fmt::Display for ArcCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArcCondition::EndpointCover => "condition (1)",
            ArcCondition::MinSize => "condition (2)",
            ArcCondition::Bounds => "arc bounds",
            ArcCondition::NoContainment => "condition (i)",
            ArcCondition::LengthEqualsOrder => "condition (ii)",
            ArcCondition::ExactlyTwoEndpoints => "condition (iii)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed partition: {0}")]
    InvalidPartition(String),
    #[error("coloring is not coherent: {0}")]
    Incoherent(Violation),
    #[error("point counts differ: {0} vs {1}")]
    PointCountMismatch(usize, usize),
    #[error("color {0} is out of range or empty")]
    BadColor(usize),
    #[error("vertex set is not a class of any scheme equivalence")]
    NotEquivalenceClass,
    #[error("colors do not form an equivalence relation of the scheme")]
    NotEquivalence,
    #[error("{condition} violated: {detail}")]
    Arc {
        condition: ArcCondition,
        detail: String,
    },
    #[error("condition (3.1) violated at edge {0}-{1}")]
    NeighborhoodCondition(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has twins {0} and {1}")]
    HasTwins(usize, usize),
    #[error("reduction failed: {0}")]
    Reduction(String),
    #[error("regularity and condition (3.1) disagree (regular = {regular}); not a circular-arc graph")]
    Biconditional { regular: bool },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
