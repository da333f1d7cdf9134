//! Combinatorial embeddings (rotation systems), face tracing and genus.
//!
//! A rotation lists, for each vertex, its neighbors in clockwise order around
//! the vertex in a drawing. Since graphs are simple, a neighbor identifies
//! the incident edge. A dart is an edge with a direction, written `(tail,
//! head)`.
//!
//! Faces are traced with the rule: after the dart `(x, y)` comes `(y, z)`
//! where `z` follows `x` in the rotation at `y`.

use thiserror::Error;

use crate::graph::Graph;
use crate::traversal::components;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {0} is not a cyclic order of its incident edges")]
    InconsistentRotation(usize),
    #[error("rotation covers {rotation} vertices but the graph has {graph}")]
    OrderMismatch { rotation: usize, graph: usize },
    #[error("genus is only defined here for connected graphs")]
    Disconnected,
    #[error("embedding search space of {0} rotations is too large")]
    SearchTooLarge(u128),
}

/// Per-vertex clockwise cyclic order of neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates `order` against `g`.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<RotationSystem, EmbeddingError> {
        let rot = RotationSystem { order };
        rot.check(g)?;
        Ok(rot)
    }

    /// Rotation that lists every vertex's neighbors in increasing order.
    pub fn sorted(g: &Graph) -> RotationSystem {
        RotationSystem {
            order: (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub(crate) fn from_parts(order: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem { order }
    }

    /// Checks that the rotation at each vertex is a permutation of its neighbors in `g`.
    pub fn check(&self, g: &Graph) -> Result<(), EmbeddingError> {
        if self.order.len() != g.order() {
            return Err(EmbeddingError::OrderMismatch {
                rotation: self.order.len(),
                graph: g.order(),
            });
        }
        for (v, rot) in self.order.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(EmbeddingError::InconsistentRotation(v));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order.len()
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// The same embedding seen in a mirror: every rotation reversed.
    pub fn mirror(&self) -> RotationSystem {
        RotationSystem {
            order: self
                .order
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Neighbor that follows `after` in the rotation at `v`.
    pub fn successor(&self, v: usize, after: usize) -> usize {
        let rot = &self.order[v];
        let i = rot
            .iter()
            .position(|&w| w == after)
            .unwrap_or_else(|| panic!("{after} is not a neighbor of {v}"));
        rot[(i + 1) % rot.len()]
    }
}

/// A face as the closed sequence of darts along its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in traversal order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(x, _)| x)
    }
}

/// Traces every face of the embedding. Each dart lies on exactly one face.
/// Faces are listed in order of their first dart `(v, w)`, with `v` ascending
/// and `w` in rotation order.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<Vec<Face>, EmbeddingError> {
    rot.check(g)?;
    let mut offset = Vec::with_capacity(g.order() + 1);
    offset.push(0);
    for v in 0..g.order() {
        offset.push(offset[v] + g.degree(v));
    }
    // Darts leaving x are numbered offset[x].. in neighbor order.
    let dart = |x: usize, y: usize| offset[x] + g.neighbors(x).binary_search(&y).unwrap();
    let mut seen = vec![false; offset[g.order()]];
    let mut faces = Vec::new();
    for v in 0..g.order() {
        for &w in rot.at(v) {
            if seen[dart(v, w)] {
                continue;
            }
            let mut darts = Vec::new();
            let (mut x, mut y) = (v, w);
            while !seen[dart(x, y)] {
                seen[dart(x, y)] = true;
                darts.push((x, y));
                let z = rot.successor(y, x);
                (x, y) = (y, z);
            }
            // The successor map is a permutation of darts, so the walk closes on its start.
            debug_assert_eq!((x, y), (v, w));
            faces.push(Face { darts });
        }
    }
    Ok(faces)
}

/// Orientable genus of the embedding of a connected graph, from
/// `n - |E| + F = 2 - 2·genus`.
pub fn genus(g: &Graph, rot: &RotationSystem) -> Result<usize, EmbeddingError> {
    let faces = trace_faces(g, rot)?;
    if g.order() == 0 || components(g).iter().any(|&c| c != 0) {
        return Err(EmbeddingError::Disconnected);
    }
    // A lone vertex has one face and no darts.
    let f = faces.len().max(1) as i64;
    let euler = g.order() as i64 - g.size() as i64 + f;
    debug_assert!(euler <= 2 && (2 - euler) % 2 == 0);
    Ok(((2 - euler) / 2) as usize)
}

/// Histogram of face lengths: `(length, count)` in increasing length.
pub fn face_length_census(faces: &[Face]) -> Vec<(usize, usize)> {
    let mut census = std::collections::BTreeMap::new();
    for f in faces {
        *census.entry(f.len()).or_insert(0) += 1;
    }
    census.into_iter().collect()
}

const PLANAR_SEARCH_CAP: u128 = 1 << 24;

/// Finds a genus-0 rotation of a small connected graph by trying every
/// rotation system (the rotation at the first vertex with degree above two is
/// fixed, which only removes mirror images).
///
/// Returns `Ok(None)` when the graph has no planar embedding.
pub fn find_planar_rotation(g: &Graph) -> Result<Option<RotationSystem>, EmbeddingError> {
    let choices: Vec<Vec<Vec<usize>>> = (0..g.order())
        .map(|v| cyclic_orders(g.neighbors(v)))
        .collect();
    let mut fixed = false;
    let choices: Vec<Vec<Vec<usize>>> = choices
        .into_iter()
        .map(|mut c| {
            if !fixed && c.len() > 1 {
                fixed = true;
                c.truncate(1);
            }
            c
        })
        .collect();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > PLANAR_SEARCH_CAP {
        return Err(EmbeddingError::SearchTooLarge(total));
    }
    let mut index = vec![0usize; g.order()];
    loop {
        let rot = RotationSystem {
            order: index
                .iter()
                .zip(&choices)
                .map(|(&i, c)| c[i].clone())
                .collect(),
        };
        if genus(g, &rot)? == 0 {
            return Ok(Some(rot));
        }
        // Mixed-radix increment.
        let mut v = 0;
        loop {
            if v == index.len() {
                return Ok(None);
            }
            index[v] += 1;
            if index[v] < choices[v].len() {
                break;
            }
            index[v] = 0;
            v += 1;
        }
    }
}

/// All cyclic orders of `items`, each starting with `items[0]`.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    fn permute(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            permute(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    match items.split_first() {
        None => out.push(Vec::new()),
        Some((&first, rest)) => permute(&mut vec![first], &mut rest.to_vec(), &mut out),
    }
    out
}
