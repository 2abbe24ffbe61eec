//! Global edge connectivity via repeated unit-capacity maximum flows
//! (Menger): fix source 0 and take the minimum s-t flow over all other
//! targets. The same machinery extracts a minimum cut witness.

use crate::graph::{EdgeId, Graph, GraphError, Multigraph, VertexId};

/// Exact global edge connectivity lambda(G). Zero for disconnected graphs.
pub fn edge_connectivity(g: &Graph) -> Result<usize, GraphError> {
    connectivity_impl(g.vertex_count(), g.edges()).map(|(lambda, _)| lambda)
}

/// Edge connectivity of a multigraph; parallel edges each count.
pub fn multigraph_edge_connectivity(m: &Multigraph) -> Result<usize, GraphError> {
    connectivity_impl(m.vertex_count(), m.edges()).map(|(lambda, _)| lambda)
}

/// Edge ids of one minimum cut: removing them disconnects the graph and no
/// smaller edge set does.
pub fn min_edge_cut(g: &Graph) -> Result<Vec<EdgeId>, GraphError> {
    connectivity_impl(g.vertex_count(), g.edges()).map(|(_, cut)| cut)
}

fn connectivity_impl(
    n: usize,
    edges: &[(VertexId, VertexId)],
) -> Result<(usize, Vec<EdgeId>), GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices { vertex_count: n });
    }
    let mut best = usize::MAX;
    let mut best_cut = Vec::new();
    for t in 1..n {
        let (value, cut) = unit_max_flow(n, edges, 0, t, best);
        if value < best {
            best = value;
            best_cut = cut;
            if best == 0 {
                break;
            }
        }
    }
    Ok((best, best_cut))
}

/// Edmonds-Karp on the undirected unit-capacity network: each edge becomes a
/// forward and a backward arc of capacity 1. Stops early once `limit`
/// augmenting paths have been found, since callers only need the minimum.
/// Returns the flow value and, when below `limit`, the source-side cut edges.
fn unit_max_flow(
    n: usize,
    edges: &[(VertexId, VertexId)],
    s: VertexId,
    t: VertexId,
    limit: usize,
) -> (usize, Vec<EdgeId>) {
    // residual[2e] is capacity u->v, residual[2e+1] is v->u
    let mut residual = vec![1i8; 2 * edges.len()];
    let mut inc = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        inc[u].push((2 * e, v));
        inc[v].push((2 * e + 1, u));
    }

    let mut value = 0usize;
    let mut pred: Vec<Option<usize>> = vec![None; n];
    while value < limit {
        pred.fill(None);
        pred[s] = Some(usize::MAX);
        let mut queue = std::collections::VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            for &(arc, w) in &inc[v] {
                if pred[w].is_none() && residual[arc] > 0 {
                    pred[w] = Some(arc);
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if pred[t].is_none() {
            break;
        }
        let mut v = t;
        while v != s {
            let arc = pred[v].unwrap();
            residual[arc] -= 1;
            residual[arc ^ 1] += 1;
            let (u0, v0) = edges[arc / 2];
            v = if arc.is_multiple_of(2) { u0 } else { v0 };
        }
        value += 1;
    }

    if value >= limit {
        return (value, Vec::new());
    }

    // source side of the cut = residual-reachable set
    let mut reach = vec![false; n];
    reach[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &(arc, w) in &inc[v] {
            if !reach[w] && residual[arc] > 0 {
                reach[w] = true;
                stack.push(w);
            }
        }
    }
    let cut = edges
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| reach[u] != reach[v])
        .map(|(e, _)| e)
        .collect();
    (value, cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::double;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, edges).unwrap()
    }

    fn petersen() -> Graph {
        Graph::new(
            10,
            [
                (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
                (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
            ],
        )
        .unwrap()
    }

    /// Brute-force oracle: smallest k such that removing some k-subset of
    /// edges disconnects the graph.
    fn brute_connectivity(g: &Graph) -> usize {
        let m = g.edge_count();
        assert!(m <= 20, "brute oracle is for small graphs");
        let mut best = m;
        for mask in 0u32..1 << m {
            let k = mask.count_ones() as usize;
            if k >= best {
                continue;
            }
            let removed = (0..m).filter(|e| mask >> e & 1 == 1).collect();
            if !connected_without(g, &removed) {
                best = k;
            }
        }
        best
    }

    fn connected_without(g: &Graph, removed: &std::collections::HashSet<EdgeId>) -> bool {
        let n = g.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let inc = g.incidence();
        while let Some(v) = stack.pop() {
            for &(e, w) in &inc[v] {
                if !removed.contains(&e) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(edge_connectivity(&complete(4)).unwrap(), 3);
        assert_eq!(edge_connectivity(&complete(5)).unwrap(), 4);
    }

    #[test]
    fn petersen_is_three_edge_connected() {
        let g = petersen();
        assert_eq!(edge_connectivity(&g).unwrap(), 3);
        // derived check: no 2-subset disconnects, some 3-subset does
        let m = g.edge_count();
        for a in 0..m {
            for b in a + 1..m {
                assert!(connected_without(&g, &[a, b].into_iter().collect()));
            }
        }
        let mut found = false;
        'outer: for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    if !connected_without(&g, &[a, b, c].into_iter().collect()) {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn path_and_disconnected() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_connectivity(&path).unwrap(), 1);
        let disc = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&disc).unwrap(), 0);
        assert_eq!(min_edge_cut(&disc).unwrap(), Vec::<EdgeId>::new());
    }

    #[test]
    fn too_few_vertices() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(
            edge_connectivity(&g).unwrap_err(),
            GraphError::TooFewVertices { vertex_count: 1 }
        );
    }

    #[test]
    fn min_cut_disconnects_and_is_minimum() {
        for g in [complete(4), petersen(), Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()] {
            let lambda = edge_connectivity(&g).unwrap();
            let cut = min_edge_cut(&g).unwrap();
            assert_eq!(cut.len(), lambda);
            assert!(!connected_without(&g, &cut.iter().copied().collect()));
        }
    }

    #[test]
    fn doubling_doubles_connectivity() {
        for g in [
            complete(4),
            complete(5),
            petersen(),
            Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
            Graph::new(3, [(0, 1), (1, 2)]).unwrap(),
        ] {
            let lambda = edge_connectivity(&g).unwrap();
            assert_eq!(
                multigraph_edge_connectivity(&double(&g)).unwrap(),
                2 * lambda
            );
        }
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let graphs = vec![
            Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
            Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
            complete(4),
            Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
            Graph::new(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap(),
            Graph::new(4, [(0, 1), (1, 2)]).unwrap(),
        ];
        for g in graphs {
            assert!(g.edge_count() <= 12);
            assert_eq!(
                edge_connectivity(&g).unwrap(),
                brute_connectivity(&g),
                "mismatch on {:?}",
                g
            );
        }
    }
}
