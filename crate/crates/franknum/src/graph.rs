//! Core graph data model: simple undirected graphs with stable edge
//! identifiers, internal multigraphs, and edge orientations.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

/// Dense vertex index in `0..vertex_count`.
pub type VertexId = usize;
/// Stable edge index assigned in parse/construction order.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {vertex}")]
    Loop { vertex: VertexId },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("operation needs at least 2 vertices, got {vertex_count}")]
    TooFewVertices { vertex_count: usize },
}

/// Simple undirected graph. Edges are stored as `(u, v)` with `u < v` and are
/// indexed by their position, which downstream flows, orientations, and
/// certificates treat as the stable [`EdgeId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `u < v`. Rejects loops,
    /// duplicate pairs, and out-of-range endpoints.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            normalized.push((u, v));
        }
        Ok(Self { vertex_count, edges: normalized })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Endpoints of edge `e` as the stored `(u, v)` pair with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Per-vertex incidence lists of `(edge, other endpoint)`, ordered by
    /// ascending [`EdgeId`]. Most algorithms here rely on that order for
    /// deterministic tie-breaking.
    pub fn incidence(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((e, v));
            inc[v].push((e, u));
        }
        inc
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

/// Undirected multigraph; duplicate pairs are permitted, loops are not.
/// When built by [`double`], `parent` maps every multigraph edge back to the
/// originating [`Graph`] edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    parent: Option<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        parent: Option<Vec<EdgeId>>,
    ) -> Result<Self, GraphError> {
        for &(a, b) in &edges {
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            let hi = a.max(b);
            if hi >= vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: hi, vertex_count });
            }
        }
        if let Some(p) = &parent {
            assert_eq!(p.len(), edges.len(), "parent map must be total");
        }
        Ok(Self { vertex_count, edges, parent })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Originating graph edge of multigraph edge `e`, when a parent map exists.
    pub fn parent_of(&self, e: EdgeId) -> Option<EdgeId> {
        self.parent.as_ref().map(|p| p[e])
    }

    pub fn incidence(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((e, v));
            inc[v].push((e, u));
        }
        inc
    }
}

/// Replaces every edge of `g` by two parallel copies. Copies of graph edge
/// `e` get multigraph ids `2e` and `2e + 1`, so the parent map is `id / 2`.
pub fn double(g: &Graph) -> Multigraph {
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut parent = Vec::with_capacity(2 * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, v));
        edges.push((u, v));
        parent.push(e);
        parent.push(e);
    }
    Multigraph {
        vertex_count: g.vertex_count(),
        edges,
        parent: Some(parent),
    }
}

/// An orientation of a carrier graph: `forward[e]` means edge `e = (u, v)`
/// becomes the arc `u -> v`, otherwise `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    pub fn new(forward: Vec<bool>) -> Self {
        Self { forward }
    }

    pub fn arc_count(&self) -> usize {
        self.forward.len()
    }

    /// The arc of edge `e` as an ordered `(tail, head)` pair.
    pub fn arc(&self, g: &Graph, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = g.endpoints(e);
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Outgoing adjacency lists `tail -> [(edge, head)]`, edge-id ordered.
    pub fn out_adjacency(&self, g: &Graph) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); g.vertex_count()];
        for e in 0..g.edge_count() {
            let (tail, head) = self.arc(g, e);
            adj[tail].push((e, head));
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loop() {
        assert_eq!(
            Graph::new(2, [(0, 0)]).unwrap_err(),
            GraphError::Loop { vertex: 0 }
        );
    }

    #[test]
    fn rejects_duplicate_even_reversed() {
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, [(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 5, vertex_count: 2 }
        );
    }

    #[test]
    fn normalizes_edge_order() {
        let g = Graph::new(3, [(2, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn double_triangle_has_three_parallel_classes() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = double(&g);
        assert_eq!(m.edge_count(), 6);
        for e in 0..6 {
            assert_eq!(m.parent_of(e), Some(e / 2));
            assert_eq!(m.endpoints(e), g.endpoints(e / 2));
        }
    }

    #[test]
    fn double_single_edge() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let m = double(&g);
        assert_eq!(m.edges(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn incidence_is_edge_id_ordered() {
        let g = k4();
        let inc = g.incidence();
        assert_eq!(inc[0], vec![(0, 1), (1, 2), (3, 3)]);
        assert!(inc.iter().all(|l| l.windows(2).all(|w| w[0].0 < w[1].0)));
    }

    #[test]
    fn orientation_arcs() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let o = Orientation::new(vec![true, false]);
        assert_eq!(o.arc(&g, 0), (0, 1));
        assert_eq!(o.arc(&g, 1), (2, 1));
    }
}
