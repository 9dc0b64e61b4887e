//! Minimal undirected simple-graph representation shared by every other module.
//!
//! Vertices are dense 0-based indices; edges are stored as canonically ordered
//! `(min, max)` pairs, sorted and deduplicated, so iteration order (and every
//! serialized artifact derived from it) is deterministic. Symbolic vertex
//! names such as `v0`, `v'3` or `u2` live in an optional role map and carry no
//! structural meaning.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense 0-based vertex index into an owning [`Graph`].
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid edge ({u}, {v}) in a graph on {num_vertices} vertices")]
    InvalidEdge {
        u: VertexId,
        v: VertexId,
        num_vertices: usize,
    },
    #[error("vertex {v} out of range for a graph on {num_vertices} vertices")]
    InvalidVertex { v: VertexId, num_vertices: usize },
    #[error("role attached to vertex {vertex}, but the graph has {num_vertices} vertices")]
    RoleOutOfRange {
        vertex: VertexId,
        num_vertices: usize,
    },
    #[error("role name {role:?} assigned to more than one vertex")]
    DuplicateRole { role: String },
}

/// A single invariant violation reported by [`Graph::validate`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("self-loop at {vertex}")]
    SelfLoop { vertex: VertexId },
    #[error("edge ({u}, {v}) has an out-of-range endpoint")]
    EndpointOutOfRange { u: VertexId, v: VertexId },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("role attached to out-of-range vertex {vertex}")]
    RoleOutOfRange { vertex: VertexId },
    #[error("role name {role:?} assigned to more than one vertex")]
    DuplicateRole { role: String },
}

/// Undirected simple graph: a vertex count, a set of unordered edges, and
/// optional per-vertex role names.
///
/// Values are immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
    roles: BTreeMap<VertexId, String>,
}

/// Wire form of [`Graph`]: `{"vertices": n, "edges": [[u, v], ...], "roles": {...}?}`.
///
/// Edges are emitted in canonical sorted order; deserialization re-validates,
/// so a malformed file cannot produce an invalid `Graph`.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    roles: BTreeMap<VertexId, String>,
}

impl TryFrom<GraphFile> for Graph {
    type Error = GraphError;

    fn try_from(file: GraphFile) -> Result<Self, GraphError> {
        Graph::with_roles(file.vertices, file.edges, file.roles)
    }
}

impl From<Graph> for GraphFile {
    fn from(g: Graph) -> Self {
        GraphFile {
            vertices: g.num_vertices,
            edges: g.edges,
            roles: g.roles,
        }
    }
}

impl Graph {
    /// Builds a validated graph from an edge list. The list is deduplicated
    /// into a set; each edge must join two distinct in-range vertices.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        Self::with_roles(num_vertices, edges, BTreeMap::new())
    }

    /// Same as [`Graph::new`], with role names attached to some vertices.
    /// Role names must be unique and attach only to in-range vertices.
    pub fn with_roles(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        roles: BTreeMap<VertexId, String>,
    ) -> Result<Self, GraphError> {
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= num_vertices || v >= num_vertices {
                return Err(GraphError::InvalidEdge { u, v, num_vertices });
            }
            edge_set.insert((u.min(v), u.max(v)));
        }
        for &vertex in roles.keys() {
            if vertex >= num_vertices {
                return Err(GraphError::RoleOutOfRange {
                    vertex,
                    num_vertices,
                });
            }
        }
        let mut seen = BTreeSet::new();
        for role in roles.values() {
            if !seen.insert(role.as_str()) {
                return Err(GraphError::DuplicateRole { role: role.clone() });
            }
        }
        Ok(Graph {
            num_vertices,
            edges: edge_set.into_iter().collect(),
            roles,
        })
    }

    /// Builds a graph without validation or canonicalization, for loading
    /// suspect data that [`Graph::validate`] will then report on. Everything
    /// else in this crate assumes graphs that validate cleanly.
    pub fn new_unchecked(
        num_vertices: usize,
        edges: Vec<(VertexId, VertexId)>,
        roles: BTreeMap<VertexId, String>,
    ) -> Self {
        Graph {
            num_vertices,
            edges,
            roles,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(min, max)` order, sorted ascending.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.num_vertices
    }

    pub fn role(&self, v: VertexId) -> Option<&str> {
        self.roles.get(&v).map(String::as_str)
    }

    pub fn roles(&self) -> &BTreeMap<VertexId, String> {
        &self.roles
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        if v >= self.num_vertices {
            return Err(GraphError::InvalidVertex {
                v,
                num_vertices: self.num_vertices,
            });
        }
        Ok(self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
    }

    /// Degrees of all vertices, sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees = vec![0usize; self.num_vertices];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        degrees.sort_unstable();
        degrees
    }

    /// Reports every simple-graph invariant violation; an empty list means
    /// the graph is a valid simple graph with well-formed roles.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut seen_edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u >= self.num_vertices || v >= self.num_vertices {
                violations.push(Violation::EndpointOutOfRange { u, v });
                continue;
            }
            if u == v {
                violations.push(Violation::SelfLoop { vertex: u });
                continue;
            }
            if !seen_edges.insert((u.min(v), u.max(v))) {
                violations.push(Violation::DuplicateEdge { u, v });
            }
        }
        for &vertex in self.roles.keys() {
            if vertex >= self.num_vertices {
                violations.push(Violation::RoleOutOfRange { vertex });
            }
        }
        let mut seen_roles = BTreeSet::new();
        for role in self.roles.values() {
            if !seen_roles.insert(role.as_str()) {
                violations.push(Violation::DuplicateRole { role: role.clone() });
            }
        }
        violations
    }
}
