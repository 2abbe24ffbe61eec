//! Certificate assembly and validation.
//!
//! A certificate for a graph is a family of at most five strongly connected
//! orientations plus, for every edge, the index of an orientation in which
//! that edge's arc is deletable (removal keeps the digraph strongly
//! connected). Building runs the flow pipeline under the five standard
//! schedules and witnesses each edge by its value-1 occurrences; validation
//! re-tests everything directly from the definition and is independent of
//! how the certificate was produced.

use crate::circuits::build_reference_orientations;
use crate::graph::{EdgeId, Graph, GraphError, Orientation};
use crate::nzflow::{jaeger_flow, FlowError};
use crate::superpose::{standard_schedules, superpose, IntFlow, SuperposeError, ValueSchedule};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("graph is not 3-edge-connected: lambda = {lambda}, cut edges {cut:?}")]
    NotThreeEdgeConnected { lambda: usize, cut: Vec<EdgeId> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("schedule {name} is inadmissible")]
    InadmissibleSchedule { name: String },
    #[error("edge {edge} carries value 1 under no schedule; it cannot be witnessed")]
    UnwitnessedEdge { edge: EdgeId },
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl From<FlowError> for CertifyError {
    fn from(e: FlowError) -> Self {
        match e {
            FlowError::NotThreeEdgeConnected { lambda, cut } => {
                CertifyError::NotThreeEdgeConnected { lambda, cut }
            }
            FlowError::Graph(g) => CertifyError::Graph(g),
            other => CertifyError::Internal(other.to_string()),
        }
    }
}

/// Schedule and flow values behind one orientation of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceEntry {
    pub schedule: [u32; 3],
    pub reversed: [bool; 3],
    pub values: Vec<u32>,
}

/// At most five strongly connected orientations with a per-edge witness
/// index. `witness[e]` names an orientation in which edge `e` is deletable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub m: usize,
    pub orientations: Vec<Orientation>,
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Vec<ProvenanceEntry>>,
}

/// Outcome of validating a certificate against a graph. `pass` requires the
/// shapes to line up, every orientation to be strongly connected, every
/// edge's witnessed arc to be deletable, and at most five orientations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub shape_ok: bool,
    pub orientations_strong: Vec<bool>,
    pub witness_valid: Vec<bool>,
    pub size_ok: bool,
    pub pass: bool,
}

/// True iff every vertex reaches and is reached by vertex 0 along the arcs
/// of `o`. Graphs on at most one vertex count as strongly connected.
pub fn is_strongly_connected(g: &Graph, o: &Orientation) -> bool {
    reaches_all(g, o, None, false) && reaches_all(g, o, None, true)
}

fn reaches_all(g: &Graph, o: &Orientation, skip: Option<EdgeId>, backward: bool) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        if Some(e) == skip {
            continue;
        }
        let (tail, head) = o.arc(g, e);
        if backward {
            adj[head].push(tail);
        } else {
            adj[tail].push(head);
        }
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut count = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

fn deletable(g: &Graph, o: &Orientation, e: EdgeId) -> bool {
    reaches_all(g, o, Some(e), false) && reaches_all(g, o, Some(e), true)
}

/// Arcs whose single removal keeps the digraph strongly connected, by
/// direct per-arc re-test.
pub fn deletable_edges(g: &Graph, o: &Orientation) -> Result<Vec<EdgeId>, CertifyError> {
    if !is_strongly_connected(g, o) {
        return Err(CertifyError::NotStronglyConnected);
    }
    Ok((0..g.edge_count()).filter(|&e| deletable(g, o, e)).collect())
}

/// Knobs for [`build_certificate_with`]. Defaults: the five standard
/// schedules with the shrink pass enabled.
#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub shrink: bool,
    pub schedules: Vec<ValueSchedule>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self { shrink: true, schedules: standard_schedules().to_vec() }
    }
}

pub fn build_certificate(g: &Graph) -> Result<Certificate, CertifyError> {
    build_certificate_with(g, &BuildOptions::default())
}

/// Runs flow construction, circuit decomposition, and superposition under
/// `opts.schedules`; witnesses each edge by the lowest-index schedule giving
/// it value 1. With `opts.shrink`, orientations whose witnessed edges are
/// all deletable elsewhere are then dropped one at a time (lowest index
/// first), re-witnessing by direct deletability.
pub fn build_certificate_with(g: &Graph, opts: &BuildOptions) -> Result<Certificate, CertifyError> {
    let flow = jaeger_flow(g)?;
    let co = build_reference_orientations(g, &flow)
        .map_err(|e| CertifyError::Internal(format!("verified flow failed to decompose: {e}")))?;

    let mut flows: Vec<IntFlow> = Vec::with_capacity(opts.schedules.len());
    for s in &opts.schedules {
        match superpose(g, &co, s) {
            Ok(f) => flows.push(f),
            Err(SuperposeError::Inadmissible { name, .. }) => {
                return Err(CertifyError::InadmissibleSchedule { name })
            }
            Err(e @ SuperposeError::UncoveredEdge { .. }) => {
                return Err(CertifyError::Internal(format!(
                    "superposition of a verified flow failed: {e}"
                )))
            }
        }
    }

    let mut witness = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        match flows.iter().position(|f| f.values[e] == 1) {
            Some(j) => witness.push(j),
            None => return Err(CertifyError::UnwitnessedEdge { edge: e }),
        }
    }

    for (j, f) in flows.iter().enumerate() {
        if !is_strongly_connected(g, &f.orientation) {
            return Err(CertifyError::Internal(format!(
                "orientation {j} of a positive flow is not strongly connected"
            )));
        }
    }

    let mut kept: Vec<usize> = (0..flows.len()).collect();
    if opts.shrink {
        let deletable_sets: Vec<Vec<bool>> = flows
            .iter()
            .map(|f| {
                let mut mark = vec![false; g.edge_count()];
                for e in deletable_edges(g, &f.orientation).expect("checked above") {
                    mark[e] = true;
                }
                mark
            })
            .collect();
        loop {
            let mut dropped = false;
            for pos in 0..kept.len() {
                let j = kept[pos];
                let rescuable = |e: EdgeId| {
                    kept.iter().any(|&j2| j2 != j && deletable_sets[j2][e])
                };
                let assigned: Vec<EdgeId> =
                    (0..g.edge_count()).filter(|&e| witness[e] == j).collect();
                if assigned.iter().all(|&e| rescuable(e)) {
                    for e in assigned {
                        witness[e] = *kept
                            .iter()
                            .find(|&&j2| j2 != j && deletable_sets[j2][e])
                            .expect("rescuable was just checked");
                    }
                    kept.remove(pos);
                    dropped = true;
                    break;
                }
            }
            if !dropped {
                break;
            }
        }
    }

    let index_of: Vec<Option<usize>> = {
        let mut map = vec![None; flows.len()];
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new);
        }
        map
    };
    let orientations: Vec<Orientation> =
        kept.iter().map(|&j| flows[j].orientation.clone()).collect();
    let witness: Vec<usize> = witness
        .into_iter()
        .map(|j| index_of[j].expect("witnesses only point at kept orientations"))
        .collect();
    let provenance: Vec<ProvenanceEntry> = kept
        .iter()
        .map(|&j| ProvenanceEntry {
            schedule: opts.schedules[j].values,
            reversed: opts.schedules[j].reversed,
            values: flows[j].values.clone(),
        })
        .collect();

    let certificate = Certificate {
        n: g.vertex_count(),
        m: g.edge_count(),
        orientations,
        witness,
        provenance: Some(provenance),
    };
    debug_assert!(validate_certificate(g, &certificate).pass);
    Ok(certificate)
}

/// Re-tests a certificate from the definition alone: shape, strong
/// connectivity of every orientation, per-edge witness deletability, and
/// the size bound. All failures land in the report, never in an error.
pub fn validate_certificate(g: &Graph, c: &Certificate) -> Report {
    let m = g.edge_count();
    let shape_ok = c.n == g.vertex_count()
        && c.m == m
        && c.witness.len() == m
        && c.orientations.iter().all(|o| o.forward.len() == m);
    if !shape_ok {
        return Report {
            shape_ok,
            orientations_strong: Vec::new(),
            witness_valid: Vec::new(),
            size_ok: c.orientations.len() <= 5,
            pass: false,
        };
    }
    let orientations_strong: Vec<bool> =
        c.orientations.iter().map(|o| is_strongly_connected(g, o)).collect();
    let witness_valid: Vec<bool> = (0..m)
        .map(|e| {
            c.witness[e] < c.orientations.len() && deletable(g, &c.orientations[c.witness[e]], e)
        })
        .collect();
    let size_ok = c.orientations.len() <= 5;
    let pass = orientations_strong.iter().all(|&b| b)
        && witness_valid.iter().all(|&b| b)
        && size_ok;
    Report { shape_ok, orientations_strong, witness_valid, size_ok, pass }
}
