//! Exact Frank numbers at small scale, plus corpus generation.
//!
//! The oracle enumerates every orientation of the edge set, keeps the
//! strongly connected ones, records each one's deletable edge set as a
//! bitmask, and finds the minimum number of masks covering all edges by
//! exact branch-and-bound set cover. Everything is bounded and
//! deterministic; this is the ground truth the constructive pipeline is
//! judged against.

use crate::certify::{deletable_edges, is_strongly_connected};
use crate::connectivity::{edge_connectivity, min_edge_cut};
use crate::graph::{EdgeId, Graph, GraphError, Orientation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_EDGE_BOUND: usize = 16;
pub const DEFAULT_K_MAX: usize = 7;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("graph has {edges} edges, above the enumeration bound {bound}")]
    TooManyEdges { edges: usize, bound: usize },
    #[error("graph is not 3-edge-connected: lambda = {lambda}, cut edges {cut:?}")]
    NotThreeEdgeConnected { lambda: usize, cut: Vec<EdgeId> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no {k_max} strongly connected orientations cover every edge")]
    NoCoverWithin { k_max: usize },
    #[error("cubic graphs need even order, got {n}")]
    OddOrder { n: usize },
    #[error("cubic graphs need at least 4 vertices, got {n}")]
    OrderTooSmall { n: usize },
    #[error("no simple 3-edge-connected pairing found in {attempts} attempts")]
    BudgetExhausted { attempts: usize },
}

/// Deletable edge sets of strongly connected orientations, deduplicated and
/// pruned to maximal elements under inclusion. Bit `e` of a mask marks edge
/// `e` deletable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletableProfile {
    pub masks: Vec<u32>,
}

/// All strongly connected orientations, in ascending order of the reversal
/// bitmask (bit `e` set means edge `e` runs from its higher endpoint).
pub fn enumerate_strong_orientations(
    g: &Graph,
    edge_bound: usize,
) -> Result<Vec<Orientation>, OracleError> {
    let m = g.edge_count();
    if m > edge_bound {
        return Err(OracleError::TooManyEdges { edges: m, bound: edge_bound });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        let o = Orientation { forward: (0..m).map(|e| mask >> e & 1 == 0).collect() };
        if is_strongly_connected(g, &o) {
            out.push(o);
        }
    }
    Ok(out)
}

impl DeletableProfile {
    /// Profiles `g`'s strongly connected orientations; also returns how many
    /// there were before deduplication.
    pub fn build(g: &Graph, edge_bound: usize) -> Result<(Self, usize), OracleError> {
        let orientations = enumerate_strong_orientations(g, edge_bound)?;
        let count = orientations.len();
        let mut masks: Vec<u32> = orientations
            .iter()
            .map(|o| {
                deletable_edges(g, o)
                    .expect("enumerated orientations are strongly connected")
                    .into_iter()
                    .fold(0u32, |acc, e| acc | 1 << e)
            })
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&a| !masks.iter().any(|&b| b != a && b & a == a))
            .collect();
        Ok((Self { masks: maximal }, count))
    }
}

/// Minimum number of masks whose union is `universe`, or None if `k_max`
/// masks never suffice. Exact: branches on the lowest uncovered edge.
pub fn exact_min_cover(masks: &[u32], universe: u32, k_max: usize) -> Option<usize> {
    if universe == 0 {
        return Some(0);
    }
    (1..=k_max).find(|&k| cover_within(masks, universe, 0, k))
}

fn cover_within(masks: &[u32], universe: u32, covered: u32, budget: usize) -> bool {
    let uncovered = universe & !covered;
    if uncovered == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let e = uncovered.trailing_zeros();
    masks
        .iter()
        .filter(|&&mask| mask >> e & 1 == 1)
        .any(|&mask| cover_within(masks, universe, covered | mask, budget - 1))
}

/// Counts reported alongside the exact Frank number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub frank_number: usize,
    pub sc_orientations: usize,
    pub distinct_maximal_masks: usize,
}

/// Exact Frank number of a 3-edge-connected graph with at most `edge_bound`
/// edges, by exhaustive enumeration and exact set cover up to `k_max`.
pub fn exact_frank_number(
    g: &Graph,
    k_max: usize,
    edge_bound: usize,
) -> Result<ExactResult, OracleError> {
    let m = g.edge_count();
    if m > edge_bound {
        return Err(OracleError::TooManyEdges { edges: m, bound: edge_bound });
    }
    let lambda = edge_connectivity(g)?;
    if lambda < 3 {
        return Err(OracleError::NotThreeEdgeConnected { lambda, cut: min_edge_cut(g)? });
    }
    let (profile, sc_orientations) = DeletableProfile::build(g, edge_bound)?;
    let universe = if m == 0 { 0 } else { u32::MAX >> (32 - m) };
    let frank_number = exact_min_cover(&profile.masks, universe, k_max)
        .ok_or(OracleError::NoCoverWithin { k_max })?;
    Ok(ExactResult {
        frank_number,
        sc_orientations,
        distinct_maximal_masks: profile.masks.len(),
    })
}

pub fn frank_number(g: &Graph, k_max: usize) -> Result<usize, OracleError> {
    exact_frank_number(g, k_max, DEFAULT_EDGE_BOUND).map(|r| r.frank_number)
}

/// Random simple cubic 3-edge-connected graph on `n` vertices by the
/// pairing model: three points per vertex, a uniformly shuffled perfect
/// matching on points, rejection until the result is simple with edge
/// connectivity 3. Deterministic per (n, seed).
pub fn random_cubic_3ec(n: usize, seed: u64) -> Result<Graph, OracleError> {
    if n % 2 == 1 {
        return Err(OracleError::OddOrder { n });
    }
    if n < 4 {
        return Err(OracleError::OrderTooSmall { n });
    }
    const ATTEMPTS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).collect();
    for _ in 0..ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut simple = true;
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0] / 3, pair[1] / 3);
            if u == v {
                simple = false;
                break;
            }
            let e = (u.min(v), u.max(v));
            if edges.contains(&e) {
                simple = false;
                break;
            }
            edges.push(e);
        }
        if !simple {
            continue;
        }
        edges.sort_unstable();
        let g = Graph::new(n, edges).expect("pairs were checked simple");
        if edge_connectivity(&g).expect("n >= 4") == 3 {
            return Ok(g);
        }
    }
    Err(OracleError::BudgetExhausted { attempts: ATTEMPTS })
}
