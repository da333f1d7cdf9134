//! Brute-force reference implementations shared by the integration tests.
//! None of these call into the library beyond `Graph` accessors.

#![allow(dead_code)]

use itertools::Itertools;
use pow2free::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Cycles of length `len` counted by trying every vertex subset and every
/// ordering of it. Each cycle is seen twice (two directions) from its
/// smallest vertex.
pub fn naive_cycle_count(g: &Graph, len: usize) -> u64 {
    let mut total = 0u64;
    for subset in (0..g.order()).combinations(len) {
        let start = subset[0];
        for rest in subset[1..].iter().copied().permutations(len - 1) {
            let mut prev = start;
            let mut ok = true;
            for &v in &rest {
                if !g.has_edge(prev, v) {
                    ok = false;
                    break;
                }
                prev = v;
            }
            if ok && g.has_edge(prev, start) {
                total += 1;
            }
        }
    }
    total / 2
}

fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn to_graph(adj: &[Vec<bool>]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|a| (a + 1..n).filter(move |&b| adj[a][b]).map(move |b| (a, b)));
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled connected cubic graph on `n` vertices, passed to `visit`
/// as an adjacency matrix. The smallest vertex with missing degree picks all
/// its remaining partners at once, so each labeled graph appears once.
pub fn for_each_labeled_cubic(n: usize, visit: &mut impl FnMut(&[Vec<bool>])) {
    fn go(adj: &mut Vec<Vec<bool>>, deg: &mut Vec<usize>, visit: &mut impl FnMut(&[Vec<bool>])) {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| deg[v] < 3) else {
            if connected(adj) {
                visit(adj);
            }
            return;
        };
        let need = 3 - deg[v];
        let candidates: Vec<usize> = (v + 1..n).filter(|&w| deg[w] < 3 && !adj[v][w]).collect();
        for pick in candidates.into_iter().combinations(need) {
            for &w in &pick {
                adj[v][w] = true;
                adj[w][v] = true;
                deg[w] += 1;
            }
            deg[v] = 3;
            go(adj, deg, visit);
            deg[v] = 3 - need;
            for &w in &pick {
                adj[v][w] = false;
                adj[w][v] = false;
                deg[w] -= 1;
            }
        }
    }
    go(&mut vec![vec![false; n]; n], &mut vec![0; n], visit);
}

pub fn labeled_cubic_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for_each_labeled_cubic(n, &mut |adj| out.push(to_graph(adj)));
    out
}

pub fn count_labeled_cubic(n: usize) -> u64 {
    let mut count = 0;
    for_each_labeled_cubic(n, &mut |_| count += 1);
    count
}

/// Number of bijections `g -> h` preserving adjacency, stopping at `limit`.
fn count_isomorphisms(g: &Graph, h: &Graph, limit: u64) -> u64 {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>, limit: u64) -> u64 {
        let v = map.len();
        if v == g.order() {
            return 1;
        }
        let mut found = 0;
        for t in 0..h.order() {
            if used[t] || g.degree(v) != h.degree(t) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], t)) {
                continue;
            }
            map.push(t);
            used[t] = true;
            found += go(g, h, map, used, limit - found);
            used[t] = false;
            map.pop();
            if found >= limit {
                break;
            }
        }
        found
    }
    if g.order() != h.order() || g.size() != h.size() {
        return 0;
    }
    go(g, h, &mut Vec::new(), &mut vec![false; h.order()], limit)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    count_isomorphisms(g, h, 1) > 0
}

pub fn automorphism_count(g: &Graph) -> u64 {
    count_isomorphisms(g, g, u64::MAX)
}

/// Splits `graphs` into isomorphism classes by pairwise backtracking.
pub fn isomorphism_classes(graphs: &[Graph]) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| brute_isomorphic(r, g)) {
            reps.push(g.clone());
        }
    }
    reps
}

/// Vertex connectivity by trying every vertex subset, smallest first.
/// Complete graphs get `n - 1`.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    for k in 0..n.saturating_sub(1) {
        for removed in (0..n).combinations(k) {
            let keep: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
            let adj: Vec<Vec<bool>> = keep
                .iter()
                .map(|&a| keep.iter().map(|&b| g.has_edge(a, b)).collect())
                .collect();
            if !connected(&adj) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random simple cubic graph on even `n >= 4` by rejection-sampled pairing.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edges(n, edges) {
            return g;
        }
    }
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
