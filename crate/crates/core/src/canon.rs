//! Canonical labeling for small graphs.
//!
//! Individualization-refinement without automorphism pruning: vertices are
//! first split by a local invariant, the ordered partition is refined to an
//! equitable one, a vertex of the first smallest
//! non-singleton cell is individualized, and the search branches over every
//! choice. Each discrete leaf yields a relabeled graph; the canonical form is
//! the smallest graph6 string among them. Every step depends only on the
//! partition structure, so the set of leaf graphs is the same for isomorphic
//! inputs. Meant for orders up to about 30.

use crate::format::encode_graph6;
use crate::graph::Graph;

/// Labeling-invariant byte string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_labeling(g).1.into_bytes()
}

/// A canonical relabeling `perm` (vertex `v` becomes `perm[v]`) together
/// with the graph6 string of the relabeled graph.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, String) {
    let n = g.order();
    let mut search = Search {
        g,
        best: None,
        count: vec![0; n],
    };
    let start = refine(g, initial_cells(g), &mut search.count);
    search.descend(start);
    let (code, order) = search.best.unwrap_or_default();
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (perm, code)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

type Partition = Vec<Vec<usize>>;

struct Search<'g> {
    g: &'g Graph,
    best: Option<(String, Vec<usize>)>,
    count: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition) {
        let target = part
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&part);
            return;
        };
        for &v in &part[t] {
            let mut next = Vec::with_capacity(part.len() + 1);
            next.extend_from_slice(&part[..t]);
            next.push(vec![v]);
            next.push(part[t].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&part[t + 1..]);
            let next = refine(self.g, next, &mut self.count);
            self.descend(next);
        }
    }

    fn leaf(&mut self, part: &Partition) {
        let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
        let mut perm = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let code = encode_graph6(&self.g.relabel(&perm));
        if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
            self.best = Some((code, order));
        }
    }
}

/// Cells of equal `(degree, triangles, 4-cycles, second neighborhood size)`,
/// ordered by that key.
fn initial_cells(g: &Graph) -> Partition {
    let key = |v: usize| {
        let nbrs = g.neighbors(v);
        let mut triangles = 0;
        let mut squares = 0;
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                triangles += usize::from(g.has_edge(a, b));
                squares += g.neighbors(a).iter().filter(|&&c| c != v && g.has_edge(b, c)).count();
            }
        }
        let mut second: Vec<usize> = nbrs
            .iter()
            .flat_map(|&a| g.neighbors(a).iter().copied())
            .filter(|&c| c != v && !g.has_edge(v, c))
            .collect();
        second.sort_unstable();
        second.dedup();
        (nbrs.len(), triangles, squares, second.len())
    };
    let mut keyed: Vec<_> = (0..g.order()).map(|v| (key(v), v)).collect();
    keyed.sort_unstable();
    keyed
        .chunk_by(|a, b| a.0 == b.0)
        .map(|chunk| chunk.iter().map(|&(_, v)| v).collect())
        .collect()
}

/// Splits cells by neighbor counts into each cell until the partition is
/// equitable. New fragments are ordered by count, keeping the result
/// independent of vertex names.
fn refine(g: &Graph, mut part: Partition, count: &mut [usize]) -> Partition {
    'outer: loop {
        for s in 0..part.len() {
            count.fill(0);
            for &v in &part[s] {
                for &w in g.neighbors(v) {
                    count[w] += 1;
                }
            }
            let mut split = false;
            let mut next = Vec::with_capacity(part.len());
            for cell in &part {
                if cell.len() > 1 && cell.iter().any(|&v| count[v] != count[cell[0]]) {
                    let mut cell = cell.clone();
                    cell.sort_by_key(|&v| count[v]);
                    for chunk in cell.chunk_by(|&a, &b| count[a] == count[b]) {
                        next.push(chunk.to_vec());
                    }
                    split = true;
                } else {
                    next.push(cell.clone());
                }
            }
            if split {
                part = next;
                continue 'outer;
            }
        }
        return part;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    fn prism(k: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
            edges.push((k + i, k + (i + 1) % k));
            edges.push((i, k + i));
        }
        Graph::from_edges(2 * k, edges).unwrap()
    }

    #[test]
    fn k4_vs_c4() {
        assert!(!are_isomorphic(&complete(4), &cycle(4)));
    }

    #[test]
    fn order_six_cubic_graphs_differ() {
        assert!(!are_isomorphic(&complete_bipartite(3, 3), &prism(3)));
    }

    #[test]
    fn relabeled_copies_match() {
        let g = prism(5);
        let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = prism(4);
        let (perm, code) = canonical_labeling(&g);
        assert_eq!(encode_graph6(&g.relabel(&perm)), code);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(canonical_form(&Graph::empty(0)), b"?".to_vec());
    }
}
