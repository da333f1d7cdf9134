//! Connectivity and bipartiteness certificates.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::traversal::components;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("connectivity bound {k} needs more than {k} vertices, graph has {n}")]
    TooFewVertices { k: usize, n: usize },
    #[error("connectivity bound must be at least 1")]
    ZeroBound,
}

/// True iff the graph has at most one component. The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).iter().all(|&c| c == 0)
}

/// True iff removing fewer than `k` vertices never disconnects `g`.
///
/// Pick a vertex `v`. Any minimum separator either misses `v`, and then
/// separates `v` from some non-neighbor, or contains `v`, and then separates
/// two non-adjacent neighbors of `v`. Each candidate pair is checked for `k`
/// internally vertex-disjoint paths with a unit-capacity flow on the
/// vertex-split graph.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<bool, StructureError> {
    let n = g.order();
    if k == 0 {
        return Err(StructureError::ZeroBound);
    }
    if n <= k {
        return Err(StructureError::TooFewVertices { k, n });
    }
    if !is_connected(g) {
        return Ok(false);
    }
    if (0..n).any(|v| g.degree(v) < k) {
        return Ok(false);
    }
    let v = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut flow = SplitFlow::new(g);
    for w in 0..n {
        if w != v && !g.has_edge(v, w) && flow.disjoint_paths(v, w, k) < k {
            return Ok(false);
        }
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) && flow.disjoint_paths(x, y, k) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Unit-capacity flow network where vertex `x` becomes `2x -> 2x+1`.
struct SplitFlow<'g> {
    g: &'g Graph,
    /// Residual capacity of each arc, keyed by arc index.
    cap: Vec<u8>,
    /// `(head, reverse arc)` for each arc; arcs of node `u` are `first[u]..first[u+1]`.
    arcs: Vec<(usize, usize)>,
    first: Vec<usize>,
    initial: Vec<u8>,
}

impl<'g> SplitFlow<'g> {
    fn new(g: &'g Graph) -> Self {
        let nodes = 2 * g.order();
        let mut out: Vec<Vec<(usize, u8)>> = vec![Vec::new(); nodes];
        // (tail, index in out[tail]) pairs so reverse arcs can be linked after flattening.
        let mut pairs = Vec::new();
        let mut add = |out: &mut Vec<Vec<(usize, u8)>>, a: usize, b: usize, c: u8| {
            out[a].push((b, c));
            out[b].push((a, 0));
            pairs.push(((a, out[a].len() - 1), (b, out[b].len() - 1)));
        };
        for x in 0..g.order() {
            add(&mut out, 2 * x, 2 * x + 1, 1);
        }
        for (a, b) in g.edges() {
            add(&mut out, 2 * a + 1, 2 * b, 1);
            add(&mut out, 2 * b + 1, 2 * a, 1);
        }
        let mut first = vec![0; nodes + 1];
        for u in 0..nodes {
            first[u + 1] = first[u] + out[u].len();
        }
        let mut arcs = vec![(0, 0); first[nodes]];
        let mut initial = vec![0; first[nodes]];
        for u in 0..nodes {
            for (i, &(head, c)) in out[u].iter().enumerate() {
                arcs[first[u] + i].0 = head;
                initial[first[u] + i] = c;
            }
        }
        for ((a, i), (b, j)) in pairs {
            let (p, q) = (first[a] + i, first[b] + j);
            arcs[p].1 = q;
            arcs[q].1 = p;
        }
        SplitFlow {
            g,
            cap: initial.clone(),
            arcs,
            first,
            initial,
        }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, counting no further than `limit`.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.initial);
        let (source, sink) = (2 * s + 1, 2 * t);
        let nodes = 2 * self.g.order();
        let mut pred = vec![usize::MAX; nodes];
        let mut found = 0;
        while found < limit {
            pred.fill(usize::MAX);
            pred[source] = usize::MAX - 1;
            let mut queue = VecDeque::from([source]);
            'bfs: while let Some(u) = queue.pop_front() {
                for a in self.first[u]..self.first[u + 1] {
                    let (v, _) = self.arcs[a];
                    if self.cap[a] > 0 && pred[v] == usize::MAX {
                        pred[v] = a;
                        if v == sink {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != source {
                let a = pred[v];
                let rev = self.arcs[a].1;
                self.cap[a] -= 1;
                self.cap[rev] += 1;
                v = self.arcs[rev].0;
            }
            found += 1;
        }
        found
    }
}

/// Result of a 2-coloring attempt, with a checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper coloring with colors 0 and 1.
    Coloring(Vec<u8>),
    /// A cycle of odd length.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Bipartition::OddCycle(tree_cycle(&parent, &depth, x, y));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

/// Cycle formed by the edge `xy` and the BFS-tree paths to their common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::is_valid_cycle;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    #[test]
    fn connectivity_basics() {
        assert!(is_connected(&Graph::empty(0)));
        assert!(is_connected(&cycle(5)));
        assert!(!is_connected(&cycle(3).disjoint_union(&cycle(3))));
    }

    #[test]
    fn vertex_connectivity_small() {
        assert_eq!(vertex_connectivity_at_least(&path(5), 2), Ok(false));
        assert_eq!(vertex_connectivity_at_least(&path(5), 1), Ok(true));
        assert_eq!(vertex_connectivity_at_least(&cycle(6), 2), Ok(true));
        assert_eq!(vertex_connectivity_at_least(&cycle(6), 3), Ok(false));
        assert_eq!(vertex_connectivity_at_least(&complete(4), 3), Ok(true));
        assert_eq!(vertex_connectivity_at_least(&complete_bipartite(3, 3), 3), Ok(true));
        assert_eq!(
            vertex_connectivity_at_least(&complete(3), 3),
            Err(StructureError::TooFewVertices { k: 3, n: 3 })
        );
        assert_eq!(
            vertex_connectivity_at_least(&complete(3), 0),
            Err(StructureError::ZeroBound)
        );
    }

    #[test]
    fn two_triangles_joined_by_a_bridge_vertex() {
        // 0-1-2 triangle, 2-3-4 triangle sharing vertex 2.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(vertex_connectivity_at_least(&g, 2), Ok(false));
    }

    #[test]
    fn bipartite_witnesses() {
        match is_bipartite(&cycle(8)) {
            Bipartition::Coloring(c) => {
                assert!(cycle(8).edges().all(|(a, b)| c[a] != c[b]));
            }
            other => panic!("C8 is bipartite, got {other:?}"),
        }
        for n in [3, 5, 9] {
            let g = cycle(n);
            match is_bipartite(&g) {
                Bipartition::OddCycle(c) => {
                    assert!(c.len() % 2 == 1);
                    assert!(is_valid_cycle(&g, &c));
                }
                other => panic!("odd cycle misclassified: {other:?}"),
            }
        }
    }
}
