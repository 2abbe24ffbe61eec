//! Nowhere-zero flows over the eight-element group of 3-bit vectors.
//!
//! The constructive route doubles the input graph, packs three edge-disjoint
//! spanning trees there, projects them back, and sets coordinate `i` of the
//! flow to the GF(2) sum of fundamental cycles of all edges outside projected
//! tree `i`. An independent exhaustive search over cycle-space triples serves
//! as the oracle for the same object.

use crate::connectivity::{edge_connectivity, min_edge_cut};
use crate::graph::{double, EdgeId, Graph, GraphError, Multigraph, VertexId};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FlowError {
    #[error("graph is not 3-edge-connected: lambda = {lambda}, cut edges {cut:?}")]
    NotThreeEdgeConnected { lambda: usize, cut: Vec<EdgeId> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no packing of {k} edge-disjoint spanning trees: partition into {} classes has {cross} cross edges, needs {required}", partition.len())]
    NoPacking {
        k: usize,
        partition: Vec<Vec<VertexId>>,
        cross: usize,
        required: usize,
    },
    #[error("flow indexes {flow_edges} edges but the graph has {graph_edges}")]
    IndexMismatch { flow_edges: usize, graph_edges: usize },
    #[error("cycle space dimension {dimension} exceeds the search bound {bound}")]
    DimensionExceeded { dimension: usize, bound: usize },
    #[error("edge {edge} lies on no cycle; the edge set cannot be covered")]
    UncoverableEdge { edge: EdgeId },
    #[error("exhausted the cycle-space search without finding a 3-element cover")]
    NoCover,
}

/// Per-edge values of a Z2 x Z2 x Z2 flow, stored as 3-bit vectors.
/// Bit `i` (0-based) is coordinate `i + 1`. Valid flows carry values in
/// `1..=7` and satisfy per-vertex, per-coordinate parity; use
/// [`verify_group_flow`] to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFlow {
    pub values: Vec<u8>,
}

impl GroupFlow {
    pub fn bit(&self, e: EdgeId, coord: usize) -> bool {
        debug_assert!(coord < 3);
        self.values[e] >> coord & 1 == 1
    }
}

/// True iff `f` is nowhere-zero on `g` and every vertex sees an even number
/// of 1s in each coordinate.
pub fn verify_group_flow(g: &Graph, f: &GroupFlow) -> Result<bool, FlowError> {
    if f.values.len() != g.edge_count() {
        return Err(FlowError::IndexMismatch {
            flow_edges: f.values.len(),
            graph_edges: g.edge_count(),
        });
    }
    if f.values.iter().any(|&v| v == 0 || v > 7) {
        return Ok(false);
    }
    let mut parity = vec![0u8; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        parity[u] ^= f.values[e];
        parity[v] ^= f.values[e];
    }
    Ok(parity.iter().all(|&p| p == 0))
}

/// Edge-disjoint spanning trees of a multigraph, as sorted edge-id sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePacking {
    pub trees: Vec<Vec<EdgeId>>,
}

/// Packs `k` pairwise edge-disjoint spanning trees by matroid-union style
/// augmentation: edges are offered in ascending id order; an edge that fits
/// no forest directly triggers a breadth-first exchange search over forest
/// cycles. When no packing exists the error carries a vertex partition with
/// fewer than `k (|P| - 1)` cross edges, which certifies impossibility.
pub fn pack_spanning_trees(m: &Multigraph, k: usize) -> Result<TreePacking, FlowError> {
    assert!(k >= 1);
    let mut packer = Packer::new(m, k);
    for e in 0..m.edge_count() {
        packer.offer(e);
    }
    packer.finish()
}

struct Packer<'a> {
    m: &'a Multigraph,
    k: usize,
    /// adj[forest][vertex] = (edge, other endpoint)
    adj: Vec<Vec<Vec<(EdgeId, VertexId)>>>,
    forest_of: Vec<Option<usize>>,
    /// classes merged from the labeled spans of edges that could not be placed
    witness: UnionFind,
}

impl<'a> Packer<'a> {
    fn new(m: &'a Multigraph, k: usize) -> Self {
        Self {
            m,
            k,
            adj: vec![vec![Vec::new(); m.vertex_count()]; k],
            forest_of: vec![None; m.edge_count()],
            witness: UnionFind::new(m.vertex_count()),
        }
    }

    fn insert(&mut self, forest: usize, e: EdgeId) {
        let (u, v) = self.m.endpoints(e);
        self.adj[forest][u].push((e, v));
        self.adj[forest][v].push((e, u));
        self.forest_of[e] = Some(forest);
    }

    fn remove(&mut self, forest: usize, e: EdgeId) {
        let (u, v) = self.m.endpoints(e);
        self.adj[forest][u].retain(|&(f, _)| f != e);
        self.adj[forest][v].retain(|&(f, _)| f != e);
        self.forest_of[e] = None;
    }

    /// Unique forest path between `u` and `v` as edge ids, or None when they
    /// lie in different components (so an edge `uv` is insertable).
    fn forest_path(&self, forest: usize, u: VertexId, v: VertexId) -> Option<Vec<EdgeId>> {
        let mut pred: Vec<Option<(EdgeId, VertexId)>> = vec![None; self.m.vertex_count()];
        let mut queue = VecDeque::from([u]);
        pred[u] = Some((usize::MAX, u));
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &(e, y) in &self.adj[forest][x] {
                if pred[y].is_none() {
                    pred[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        pred[v]?;
        let mut path = Vec::new();
        let mut x = v;
        while x != u {
            let (e, p) = pred[x].unwrap();
            path.push(e);
            x = p;
        }
        path.reverse();
        Some(path)
    }

    /// Tries to grow the forest family by `e0`, exchanging existing forest
    /// edges if needed. On failure, merges the labeled span into the witness
    /// partition.
    fn offer(&mut self, e0: EdgeId) {
        let mut pred: Vec<Option<EdgeId>> = vec![None; self.m.edge_count()];
        let mut labeled = vec![e0];
        let mut queue = VecDeque::from([e0]);
        pred[e0] = Some(usize::MAX);
        while let Some(f) = queue.pop_front() {
            let (u, v) = self.m.endpoints(f);
            for i in 0..self.k {
                if self.forest_of[f] == Some(i) {
                    continue;
                }
                match self.forest_path(i, u, v) {
                    None => {
                        self.unwind(f, i, &pred, e0);
                        return;
                    }
                    Some(path) => {
                        for e in path {
                            if pred[e].is_none() {
                                pred[e] = Some(f);
                                labeled.push(e);
                                queue.push_back(e);
                            }
                        }
                    }
                }
            }
        }
        // stalled: within the span of the labeled edges every forest is
        // already a spanning tree, so e0 is redundant there
        for e in labeled {
            let (u, v) = self.m.endpoints(e);
            self.witness.union(u, v);
        }
    }

    fn unwind(&mut self, last: EdgeId, forest: usize, pred: &[Option<EdgeId>], root: EdgeId) {
        let mut cur = last;
        let mut target = forest;
        while cur != root {
            let source = self.forest_of[cur].expect("labeled edges live in a forest");
            self.remove(source, cur);
            self.insert(target, cur);
            target = source;
            cur = pred[cur].expect("labeled edge has a predecessor");
        }
        self.insert(target, root);
    }

    fn finish(self) -> Result<TreePacking, FlowError> {
        let n = self.m.vertex_count();
        let spanning = (0..self.k).all(|i| {
            self.adj[i].iter().map(|l| l.len()).sum::<usize>() == 2 * n.saturating_sub(1)
                && forest_connected(&self.adj[i], n)
        });
        if spanning {
            let mut trees = vec![Vec::new(); self.k];
            for (e, f) in self.forest_of.iter().enumerate() {
                if let Some(i) = f {
                    trees[*i].push(e);
                }
            }
            return Ok(TreePacking { trees });
        }

        let mut classes: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
        let mut witness = self.witness;
        for v in 0..n {
            classes.entry(witness.find(v)).or_default().push(v);
        }
        let partition: Vec<Vec<VertexId>> = classes.into_values().collect();
        let cross = self
            .m
            .edges()
            .iter()
            .filter(|&&(u, v)| witness.find(u) != witness.find(v))
            .count();
        let required = self.k * (partition.len() - 1);
        debug_assert!(cross < required, "witness partition must violate the packing bound");
        Err(FlowError::NoPacking { k: self.k, partition, cross, required })
    }
}

fn forest_connected(adj: &[Vec<(EdgeId, VertexId)>], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(_, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The constructed flow together with the three projected spanning trees it
/// came from; the trees are what the coordinate supports are defined against.
#[derive(Debug, Clone)]
pub struct JaegerConstruction {
    pub trees: [Vec<EdgeId>; 3],
    pub flow: GroupFlow,
}

/// Builds a nowhere-zero Z2^3 flow on a 3-edge-connected graph. See the
/// module docs for the construction; [`jaeger_flow_parts`] also exposes the
/// projected trees.
pub fn jaeger_flow(g: &Graph) -> Result<GroupFlow, FlowError> {
    jaeger_flow_parts(g).map(|p| p.flow)
}

pub fn jaeger_flow_parts(g: &Graph) -> Result<JaegerConstruction, FlowError> {
    let lambda = edge_connectivity(g)?;
    if lambda < 3 {
        return Err(FlowError::NotThreeEdgeConnected { lambda, cut: min_edge_cut(g)? });
    }

    // The doubled graph is 2*lambda >= 6 edge-connected, so three disjoint
    // spanning trees exist there.
    let doubled = double(g);
    let packing = pack_spanning_trees(&doubled, 3)?;

    let mut trees: [Vec<EdgeId>; 3] = Default::default();
    for (i, tree) in packing.trees.iter().enumerate() {
        let mut projected: Vec<EdgeId> = tree
            .iter()
            .map(|&me| doubled.parent_of(me).expect("doubled graph has a parent map"))
            .collect();
        projected.sort_unstable();
        projected.dedup();
        assert_eq!(
            projected.len(),
            g.vertex_count() - 1,
            "a forest cannot hold both copies of an edge"
        );
        trees[i] = projected;
    }

    let mut values = vec![0u8; g.edge_count()];
    for (i, tree) in trees.iter().enumerate() {
        add_fundamental_cycle_sum(g, tree, i as u8, &mut values);
    }
    let flow = GroupFlow { values };
    debug_assert_eq!(verify_group_flow(g, &flow).ok(), Some(true));
    Ok(JaegerConstruction { trees, flow })
}

/// Toggles bit `coord` along the fundamental cycle of every edge outside
/// `tree`. The sum of those cycles is an even subgraph containing every
/// non-tree edge.
fn add_fundamental_cycle_sum(g: &Graph, tree: &[EdgeId], coord: u8, values: &mut [u8]) {
    let mut in_tree = vec![false; g.edge_count()];
    for &e in tree {
        in_tree[e] = true;
    }
    let forest = RootedForest::build(g, tree);
    for (e, _) in in_tree.iter().enumerate().filter(|(_, &t)| !t) {
        forest.toggle_cycle(g, e, coord, values);
    }
}

/// A spanning forest with parent pointers and depths, rooted at the lowest
/// vertex of each component.
struct RootedForest {
    parent: Vec<Option<(EdgeId, VertexId)>>,
    depth: Vec<usize>,
}

impl RootedForest {
    fn build(g: &Graph, tree: &[EdgeId]) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &e in tree {
            let (u, v) = g.endpoints(e);
            adj[u].push((e, v));
            adj[v].push((e, u));
        }
        let mut parent: Vec<Option<(EdgeId, VertexId)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((e, v));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { parent, depth }
    }

    /// Toggles bit `coord` of `values` on the fundamental cycle of the
    /// non-tree edge `e`: the edge itself plus the tree path between its
    /// endpoints (walked to their lowest common ancestor).
    fn toggle_cycle(&self, g: &Graph, e: EdgeId, coord: u8, values: &mut [u8]) {
        values[e] ^= 1 << coord;
        let (mut a, mut b) = g.endpoints(e);
        while self.depth[a] > self.depth[b] {
            let (pe, pv) = self.parent[a].unwrap();
            values[pe] ^= 1 << coord;
            a = pv;
        }
        while self.depth[b] > self.depth[a] {
            let (pe, pv) = self.parent[b].unwrap();
            values[pe] ^= 1 << coord;
            b = pv;
        }
        while a != b {
            let (pea, pva) = self.parent[a].unwrap();
            let (peb, pvb) = self.parent[b].unwrap();
            values[pea] ^= 1 << coord;
            values[peb] ^= 1 << coord;
            a = pva;
            b = pvb;
        }
    }
}

pub const DEFAULT_DIMENSION_BOUND: usize = 10;

/// Independent flow oracle: exhaustively searches triples of GF(2)
/// cycle-space elements (spanned by a fundamental-cycle basis) whose supports
/// jointly cover every edge. The first cover in ascending lexicographic
/// coefficient order wins, so results are reproducible.
pub fn cover_search_flow(g: &Graph, dimension_bound: usize) -> Result<GroupFlow, FlowError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let words = m.div_ceil(64).max(1);

    // spanning forest, lowest edge id first
    let inc = g.incidence();
    let mut in_tree = vec![false; m];
    let mut seen = vec![false; n];
    let mut components = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &inc[v] {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let dimension = m + components - n;
    if dimension > dimension_bound {
        return Err(FlowError::DimensionExceeded { dimension, bound: dimension_bound });
    }

    // fundamental cycle of each non-tree edge, as an edge bitmask
    let tree: Vec<EdgeId> = (0..m).filter(|&e| in_tree[e]).collect();
    let forest = RootedForest::build(g, &tree);
    let mut basis: Vec<Vec<u64>> = Vec::with_capacity(dimension);
    for (e, _) in in_tree.iter().enumerate().filter(|(_, &t)| !t) {
        let mut cycle = vec![0u8; m];
        forest.toggle_cycle(g, e, 0, &mut cycle);
        let mut mask = vec![0u64; words];
        for (i, &bit) in cycle.iter().enumerate() {
            if bit == 1 {
                mask[i / 64] |= 1 << (i % 64);
            }
        }
        basis.push(mask);
    }

    // a bridge lies in no cycle, hence outside the union of the basis
    let mut union = vec![0u64; words];
    for b in &basis {
        for (w, x) in union.iter_mut().zip(b) {
            *w |= x;
        }
    }
    let full = full_mask(m, words);
    if let Some(e) = first_missing(&union, &full) {
        return Err(FlowError::UncoverableEdge { edge: e });
    }

    // all 2^dimension span elements, indexed by coefficient mask
    let count = 1usize << dimension;
    let mut elements = vec![vec![0u64; words]; count];
    for c in 1..count {
        let low = c.trailing_zeros() as usize;
        let rest = c & (c - 1);
        let (head, tail) = elements.split_at_mut(c);
        for w in 0..words {
            tail[0][w] = head[rest][w] ^ basis[low][w];
        }
    }

    for c1 in 0..count {
        for c2 in c1..count {
            let mut partial = vec![0u64; words];
            for w in 0..words {
                partial[w] = elements[c1][w] | elements[c2][w];
            }
            for c3 in c2..count {
                if (0..words).all(|w| partial[w] | elements[c3][w] == full[w]) {
                    let mut values = vec![0u8; m];
                    for (e, value) in values.iter_mut().enumerate() {
                        let w = e / 64;
                        let b = 1u64 << (e % 64);
                        *value = (elements[c1][w] & b != 0) as u8
                            | ((elements[c2][w] & b != 0) as u8) << 1
                            | ((elements[c3][w] & b != 0) as u8) << 2;
                    }
                    let flow = GroupFlow { values };
                    debug_assert_eq!(verify_group_flow(g, &flow).ok(), Some(true));
                    return Ok(flow);
                }
            }
        }
    }
    Err(FlowError::NoCover)
}

fn full_mask(m: usize, words: usize) -> Vec<u64> {
    let mut full = vec![0u64; words];
    for (i, w) in full.iter_mut().enumerate() {
        let lo = i * 64;
        let hi = (lo + 64).min(m);
        if hi > lo {
            *w = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
    }
    full
}

fn first_missing(mask: &[u64], full: &[u64]) -> Option<usize> {
    for (i, (&m, &f)) in mask.iter().zip(full).enumerate() {
        let missing = !m & f;
        if missing != 0 {
            return Some(i * 64 + missing.trailing_zeros() as usize);
        }
    }
    None
}
