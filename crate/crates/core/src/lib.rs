//! Coherent closures of graphs, arc models of circular-arc graphs, and
//! recognition of circular-arc graphs whose scheme is an association scheme.
//!
//! Such graphs are exactly the lexicographic products `C_{m,k}[K_r]` of an
//! elementary circular-arc graph and a complete graph; [`decompose_caw`]
//! returns a checked certificate.

pub mod arc;
pub mod automorphism;
pub mod characterize;
pub mod closure;
pub mod error;
pub mod format;
pub mod graph;
pub mod scheme;

pub use arc::{check_neighborhood_condition, is_regular_equivalent, Arc, ArcFunction, NeighborhoodCheck, ReducedArcFunction};
pub use automorphism::{count_automorphisms, DEFAULT_AUT_LIMIT};
pub use characterize::{
    decompose_caw, is_elementary_caw, predicted_aut_order, predicted_scheme, scheme_decomposition, verify_wreath_theorem,
    Decomposition, ElementaryWitness, FailedStage, OuterKind, SchemeDecomposition, WreathReport,
};
pub use closure::{closure_of_graph, closure_of_graph_with_limit, coherent_closure, RelationSet, DEFAULT_CLOSURE_LIMIT};
pub use error::{ArcCondition, Error, Result};
pub use graph::{circular_distance, edge_level_partition, quotient_graph, twin_relation, Graph, VertexPartition};
pub use scheme::{
    algebraic_invariant, schemes_isomorphic, schemes_isomorphic_with_limit, verify_coloring, CoherentConfiguration,
    SchemeEquivalence, Verdict, Violation, DEFAULT_EQUIVALENCE_RANK_LIMIT, DEFAULT_ISO_LIMIT,
};
