use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected: vertex {unreachable} is not reachable from vertex 0")]
    Disconnected { unreachable: Vertex },
    #[error("center set of a ball must be nonempty")]
    EmptyCenter,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("induced cycle length {k} outside the supported range 3..={cap}")]
    CycleLength { k: usize, cap: usize },
    #[error("vertex set {0:?} is not a clique")]
    NotASimplex(Vec<Vertex>),
    #[error("vertex set is not convex")]
    NotConvex,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("projection of {0:?} onto the convex set is empty")]
    EmptyProjection(Vec<Vertex>),
    #[error("sequence is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("map is not a graph homomorphism: edge {0}-{1} is sent to a non-edge")]
    NotAHomomorphism(Vertex, Vertex),
    #[error("graph is not dismantlable")]
    NotDismantlable,
    #[error("graph is not weakly bridged")]
    NotWeaklyBridged,
    #[error("graph is not bridged")]
    NotBridged,
    #[error("permutation is not an automorphism of the carrier graph")]
    NotAnAutomorphism,
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("generator failed: {0}")]
    Generator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
