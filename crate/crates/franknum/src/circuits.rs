//! Circuit decompositions of the three coordinate subgraphs and the
//! reference orientations they induce.
//!
//! Coordinate `i` of a valid flow selects an even subgraph, so its edge set
//! splits into edge-disjoint circuits. Each circuit is oriented along its
//! traversal; together these give the reference orientation of coordinate
//! `i`. The peeling is deterministic: walks start at the lowest vertex with
//! an unused support edge and always continue along the lowest unused
//! incident edge id, closing at the first return to the start vertex.

use crate::graph::{EdgeId, Graph, VertexId};
use crate::nzflow::GroupFlow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("vertex {vertex} has odd degree in the selected edge set")]
    OddDegree { vertex: VertexId },
}

/// A closed walk without repeated edges. Each step records the edge and
/// whether it was traversed from its lower to its higher endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub steps: Vec<(EdgeId, bool)>,
}

/// One coordinate's circuit partition plus the per-edge direction it fixes.
/// `arc_dir[e]` is None for edges outside the support, otherwise the
/// traversal direction of the circuit containing `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordOrientation {
    pub circuits: Vec<Circuit>,
    pub arc_dir: Vec<Option<bool>>,
}

/// Reference orientations of the three coordinate subgraphs. An edge can
/// belong to up to three coordinates, with independent directions in each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitOrientation {
    pub coords: [CoordOrientation; 3],
}

impl CircuitOrientation {
    /// The orientation of coordinate `i`, with `i` in `1..=3`.
    pub fn coord(&self, i: usize) -> &CoordOrientation {
        assert!((1..=3).contains(&i), "coordinates are numbered 1 to 3");
        &self.coords[i - 1]
    }
}

/// Edges whose flow value has coordinate `coord` set, with `coord` in
/// `1..=3`. Callers must pass a flow indexing `g`'s edges.
pub fn coordinate_subgraph(g: &Graph, f: &GroupFlow, coord: usize) -> Vec<EdgeId> {
    assert!((1..=3).contains(&coord), "coordinates are numbered 1 to 3");
    assert_eq!(f.values.len(), g.edge_count(), "flow must index the graph's edges");
    (0..g.edge_count()).filter(|&e| f.bit(e, coord - 1)).collect()
}

/// Splits an even edge set into edge-disjoint circuits. Fails on the lowest
/// vertex of odd degree if the set is not even.
pub fn decompose_circuits(g: &Graph, edges: &[EdgeId]) -> Result<Vec<Circuit>, CircuitError> {
    let n = g.vertex_count();
    let mut support = edges.to_vec();
    support.sort_unstable();
    debug_assert!(support.windows(2).all(|w| w[0] != w[1]), "edge set has duplicates");

    let mut inc: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); n];
    for &e in &support {
        let (u, v) = g.endpoints(e);
        inc[u].push((e, v));
        inc[v].push((e, u));
    }
    if let Some(vertex) = (0..n).find(|&v| inc[v].len() % 2 == 1) {
        return Err(CircuitError::OddDegree { vertex });
    }

    let mut used = vec![false; g.edge_count()];
    // per-vertex scan position; used edges never become unused, so the
    // pointer only moves forward
    let mut cursor = vec![0usize; n];
    let next_unused = |inc: &[Vec<(EdgeId, VertexId)>],
                       cursor: &mut [usize],
                       used: &[bool],
                       v: VertexId| {
        while let Some(&(e, w)) = inc[v].get(cursor[v]) {
            if used[e] {
                cursor[v] += 1;
            } else {
                return Some((e, w));
            }
        }
        None
    };

    let mut circuits = Vec::new();
    for start in 0..n {
        while next_unused(&inc, &mut cursor, &used, start).is_some() {
            let mut steps = Vec::new();
            let mut cur = start;
            loop {
                let (e, w) = next_unused(&inc, &mut cursor, &used, cur)
                    .expect("even degrees guarantee an exit before the walk closes");
                used[e] = true;
                steps.push((e, cur == g.endpoints(e).0));
                cur = w;
                if cur == start {
                    break;
                }
            }
            circuits.push(Circuit { steps });
        }
    }
    Ok(circuits)
}

/// Decomposes all three coordinate subgraphs of `f` and records each edge's
/// direction per coordinate. On a flow that passes verification the odd
/// degree error cannot occur.
pub fn build_reference_orientations(
    g: &Graph,
    f: &GroupFlow,
) -> Result<CircuitOrientation, CircuitError> {
    let mut coords = Vec::with_capacity(3);
    for i in 1..=3 {
        let support = coordinate_subgraph(g, f, i);
        let circuits = decompose_circuits(g, &support)?;
        let mut arc_dir = vec![None; g.edge_count()];
        for circuit in &circuits {
            for &(e, forward) in &circuit.steps {
                arc_dir[e] = Some(forward);
            }
        }
        coords.push(CoordOrientation { circuits, arc_dir });
    }
    Ok(CircuitOrientation { coords: coords.try_into().expect("three coordinates") })
}
