//! Breadth-first search helpers.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Unweighted shortest-path distances from `source`; `None` marks vertices
/// that cannot be reached.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    assert!(source < g.order(), "source {source} out of range");
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Distance between two vertices, `None` if they lie in different components.
pub fn distance(g: &Graph, a: usize, b: usize) -> Option<usize> {
    bfs_distances(g, a)[b]
}

/// Component index for every vertex; components are numbered by smallest vertex.
pub fn components(g: &Graph) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.order()];
    let mut next = 0;
    let mut stack = Vec::new();
    for s in 0..g.order() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}
