//! Exact-length simple cycle search.
//!
//! Every cycle is discovered exactly once: from its smallest vertex (the
//! root), walking only through larger vertices, in the direction whose second
//! vertex is smaller than its last. A partial path is abandoned as soon as the
//! BFS distance from its end back to the root, measured inside the vertices
//! still usable, exceeds the remaining length budget.
//!
//! Roots are independent subproblems and are searched in parallel; counts are
//! summed, so results do not depend on the number of threads.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::structure::is_bipartite;

/// Longest cycle length the engine accepts.
pub const MAX_CYCLE_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle length {0} is below 3")]
    TooShort(usize),
    #[error("cycle length {0} exceeds the cap of {MAX_CYCLE_LENGTH}")]
    AboveCap(usize),
    #[error("power-of-two exponent bound {0} is out of range 2..=6")]
    ExponentOutOfRange(u32),
}

fn check_length(len: usize) -> Result<(), CycleError> {
    if len < 3 {
        Err(CycleError::TooShort(len))
    } else if len > MAX_CYCLE_LENGTH {
        Err(CycleError::AboveCap(len))
    } else {
        Ok(())
    }
}

/// Tuning knobs for [`CycleEngine`]. None of them change results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Prune partial paths by distance back to the root.
    pub pruning: bool,
    /// Answer odd-length queries on bipartite graphs without searching.
    pub bipartite_shortcut: bool,
    /// Worker threads; `None` uses the global rayon pool and `Some(1)` runs
    /// on the calling thread.
    pub threads: Option<usize>,
}

impl SearchOptions {
    /// Defaults, but searching on the calling thread only.
    pub fn sequential() -> Self {
        SearchOptions {
            threads: Some(1),
            ..SearchOptions::default()
        }
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            pruning: true,
            bipartite_shortcut: true,
            threads: None,
        }
    }
}

/// Number of simple cycles of each length `3..=lmax`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleSpectrum {
    counts: Vec<u64>,
}

impl CycleSpectrum {
    fn zero(lmax: usize) -> CycleSpectrum {
        CycleSpectrum {
            counts: vec![0; lmax + 1],
        }
    }

    pub fn from_counts(lmax: usize, counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut s = CycleSpectrum::zero(lmax);
        for (len, c) in counts {
            assert!((3..=lmax).contains(&len), "length {len} outside 3..={lmax}");
            s.counts[len] = c;
        }
        s
    }

    pub fn lmax(&self) -> usize {
        self.counts.len() - 1
    }

    /// Count at `len`; zero for lengths outside `3..=lmax`.
    pub fn count(&self, len: usize) -> u64 {
        if len < 3 {
            0
        } else {
            self.counts.get(len).copied().unwrap_or(0)
        }
    }

    /// `(length, count)` for every length in `3..=lmax`, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        (3..self.counts.len()).map(|l| (l, self.counts[l]))
    }

    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.iter().collect()
    }

    /// Total number of cycles of length at most `lmax`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    fn add(mut self, other: CycleSpectrum) -> CycleSpectrum {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }
}

/// Formats as `{3:1, 4:0, 5:6}`.
impl fmt::Display for CycleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (len, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{len}:{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for CycleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of a power-of-two cycle check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pow2Verdict {
    /// No cycle of length `2^m` for any `2 <= m <= k`.
    Free,
    /// Smallest offending exponent and a cycle of length `2^exponent`.
    Offending { exponent: u32, cycle: Vec<usize> },
}

impl Pow2Verdict {
    pub fn is_free(&self) -> bool {
        matches!(self, Pow2Verdict::Free)
    }
}

const INF: u32 = u32::MAX / 4;

/// Compressed adjacency used by the search kernel.
struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(g: &Graph) -> Csr {
        let mut offsets = Vec::with_capacity(g.order() + 1);
        let mut targets = Vec::with_capacity(2 * g.size());
        offsets.push(0);
        for v in 0..g.order() {
            targets.extend(g.neighbors(v).iter().map(|&w| w as u32));
            offsets.push(targets.len() as u32);
        }
        Csr { offsets, targets }
    }

    #[inline]
    fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    fn order(&self) -> usize {
        self.offsets.len() - 1
    }
}

/// Receives cycles found by the kernel. Returning `true` stops the search.
trait Visit {
    fn cycle(&mut self, path: &[usize]) -> bool;
}

struct Counter(CycleSpectrum);

impl Visit for Counter {
    #[inline]
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.0.counts[path.len()] += 1;
        false
    }
}

struct FirstWitness(Option<Vec<usize>>);

impl Visit for FirstWitness {
    fn cycle(&mut self, path: &[usize]) -> bool {
        self.0 = Some(path.to_vec());
        true
    }
}

struct Callback<F>(F);

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Visit for Callback<F> {
    fn cycle(&mut self, path: &[usize]) -> bool {
        (self.0)(path).is_break()
    }
}

/// Search state for one root.
struct RootSearch<'a> {
    csr: &'a Csr,
    root: usize,
    /// Maximum cycle length; with `exact`, the only length reported.
    limit: u32,
    exact: bool,
    /// Edges needed to get back to the root; `INF` when impossible.
    dist: Vec<u32>,
    /// Neighbors of the root that may close a cycle started along the current first edge.
    closing: Vec<bool>,
    visited: Vec<bool>,
    path: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'a> RootSearch<'a> {
    fn new(csr: &'a Csr, root: usize, limit: u32, exact: bool) -> Self {
        let n = csr.order();
        RootSearch {
            csr,
            root,
            limit,
            exact,
            dist: vec![INF; n],
            closing: vec![false; n],
            visited: vec![false; n],
            path: Vec::with_capacity(limit as usize + 1),
            queue: VecDeque::new(),
        }
    }

    /// Runs every cycle rooted here through `visit`; `true` if the visitor stopped.
    fn run<V: Visit>(&mut self, pruning: bool, visit: &mut V) -> bool {
        let root = self.root;
        let nbrs = self.csr.neighbors(root);
        let larger: Vec<usize> = nbrs
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| w > root)
            .collect();
        // Neighbor lists are sorted, so the last vertex of the cycle must come
        // later in `larger` than the second one.
        for (i, &second) in larger.iter().enumerate() {
            let targets = &larger[i + 1..];
            if targets.is_empty() {
                break;
            }
            for &t in targets {
                self.closing[t] = true;
            }
            if pruning {
                self.distances_back(second, targets);
            }
            self.visited[root] = true;
            self.visited[second] = true;
            self.path.clear();
            self.path.extend([root, second]);
            let stopped = if pruning {
                self.extend::<V, true>(second, 1, visit)
            } else {
                self.extend::<V, false>(second, 1, visit)
            };
            self.visited[root] = false;
            self.visited[second] = false;
            for &t in targets {
                self.closing[t] = false;
            }
            if stopped {
                return true;
            }
        }
        false
    }

    /// BFS from the closing neighbors over vertices larger than the root,
    /// avoiding `second`; stores `1 + distance` (the closing edge included).
    fn distances_back(&mut self, second: usize, targets: &[usize]) {
        self.dist.fill(INF);
        self.queue.clear();
        for &t in targets {
            self.dist[t] = 1;
            self.queue.push_back(t);
        }
        while let Some(x) = self.queue.pop_front() {
            let d = self.dist[x] + 1;
            if d > self.limit {
                break;
            }
            for &y in self.csr.neighbors(x) {
                let y = y as usize;
                if y > self.root && y != second && self.dist[y] == INF {
                    self.dist[y] = d;
                    self.queue.push_back(y);
                }
            }
        }
    }

    /// `x` is the last vertex of the path, reached after `depth` edges.
    fn extend<V: Visit, const PRUNE: bool>(&mut self, x: usize, depth: u32, visit: &mut V) -> bool {
        if self.closing[x] && (!self.exact || depth + 1 == self.limit) && visit.cycle(&self.path) {
            return true;
        }
        if depth + 2 > self.limit {
            return false;
        }
        let csr = self.csr;
        for &y in csr.neighbors(x) {
            let y = y as usize;
            if PRUNE {
                if depth + 1 + self.dist[y] > self.limit || self.visited[y] {
                    continue;
                }
            } else if y <= self.root || self.visited[y] {
                continue;
            }
            self.visited[y] = true;
            self.path.push(y);
            let stopped = self.extend::<V, PRUNE>(y, depth + 1, visit);
            self.path.pop();
            self.visited[y] = false;
            if stopped {
                return true;
            }
        }
        false
    }
}

/// Cycle queries against one graph.
pub struct CycleEngine<'g> {
    graph: &'g Graph,
    csr: Csr,
    options: SearchOptions,
    bipartite: Option<bool>,
}

impl<'g> CycleEngine<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_options(graph, SearchOptions::default())
    }

    pub fn with_options(graph: &'g Graph, options: SearchOptions) -> Self {
        let bipartite = options
            .bipartite_shortcut
            .then(|| is_bipartite(graph).is_bipartite());
        CycleEngine {
            graph,
            csr: Csr::new(graph),
            options,
            bipartite,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn install<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.options.threads {
            Some(1) | None => job(),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .expect("thread pool")
                .install(job),
        }
    }

    fn odd_on_bipartite(&self, len: usize) -> bool {
        len % 2 == 1 && self.bipartite == Some(true)
    }

    /// A cycle with exactly `len` edges, if one exists. Among all such cycles
    /// the one returned is the first found from the smallest possible root.
    pub fn find_cycle(&self, len: usize) -> Result<Option<Vec<usize>>, CycleError> {
        check_length(len)?;
        if self.odd_on_bipartite(len) {
            return Ok(None);
        }
        let pruning = self.options.pruning;
        let csr = &self.csr;
        let from_root = |root| {
            let mut search = RootSearch::new(csr, root, len as u32, true);
            let mut witness = FirstWitness(None);
            search.run(pruning, &mut witness);
            witness.0
        };
        if self.options.threads == Some(1) {
            return Ok((0..csr.order()).find_map(from_root));
        }
        Ok(self.install(|| (0..csr.order()).into_par_iter().find_map_first(from_root)))
    }

    pub fn has_cycle_of_length(&self, len: usize) -> Result<bool, CycleError> {
        Ok(self.find_cycle(len)?.is_some())
    }

    /// Number of cycles with exactly `len` edges.
    pub fn count_cycles(&self, len: usize) -> Result<u64, CycleError> {
        check_length(len)?;
        if self.odd_on_bipartite(len) {
            return Ok(0);
        }
        Ok(self.run_counts(len, true).count(len))
    }

    /// Exact cycle counts for every length `3..=lmax`.
    pub fn spectrum(&self, lmax: usize) -> Result<CycleSpectrum, CycleError> {
        check_length(lmax)?;
        Ok(self.run_counts(lmax, false))
    }

    fn run_counts(&self, limit: usize, exact: bool) -> CycleSpectrum {
        let pruning = self.options.pruning;
        let csr = &self.csr;
        let from_root = |root| {
            let mut search = RootSearch::new(csr, root, limit as u32, exact);
            let mut counter = Counter(CycleSpectrum::zero(limit));
            search.run(pruning, &mut counter);
            counter.0
        };
        if self.options.threads == Some(1) {
            return (0..csr.order())
                .map(from_root)
                .fold(CycleSpectrum::zero(limit), CycleSpectrum::add);
        }
        self.install(|| {
            (0..csr.order())
                .into_par_iter()
                .map(from_root)
                .reduce(|| CycleSpectrum::zero(limit), CycleSpectrum::add)
        })
    }

    /// Streams every cycle of exactly `len` edges, in canonical form (smallest
    /// vertex first, second vertex smaller than last), to `visit`. Runs on the
    /// calling thread; returning `ControlFlow::Break` stops the search.
    pub fn for_each_cycle<F>(&self, len: usize, visit: F) -> Result<(), CycleError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        check_length(len)?;
        if self.odd_on_bipartite(len) {
            return Ok(());
        }
        let mut cb = Callback(visit);
        for root in 0..self.csr.order() {
            let mut search = RootSearch::new(&self.csr, root, len as u32, true);
            if search.run(self.options.pruning, &mut cb) {
                break;
            }
        }
        Ok(())
    }

    /// Checks for cycles of length `2^m`, `2 <= m <= k`, smallest `m` first.
    pub fn pow2_verdict(&self, k: u32) -> Result<Pow2Verdict, CycleError> {
        if !(2..=6).contains(&k) {
            return Err(CycleError::ExponentOutOfRange(k));
        }
        for m in 2..=k {
            if let Some(cycle) = self.find_cycle(1 << m)? {
                return Ok(Pow2Verdict::Offending { exponent: m, cycle });
            }
        }
        Ok(Pow2Verdict::Free)
    }
}

pub fn has_cycle_of_length(g: &Graph, len: usize) -> Result<bool, CycleError> {
    CycleEngine::new(g).has_cycle_of_length(len)
}

pub fn find_cycle_of_length(g: &Graph, len: usize) -> Result<Option<Vec<usize>>, CycleError> {
    CycleEngine::new(g).find_cycle(len)
}

pub fn count_cycles_by_length(g: &Graph, lmax: usize) -> Result<CycleSpectrum, CycleError> {
    CycleEngine::new(g).spectrum(lmax)
}

/// True iff `g` has no cycle of length `2^m` for `2 <= m <= k`.
pub fn is_pow2_cycle_free(g: &Graph, k: u32) -> Result<Pow2Verdict, CycleError> {
    CycleEngine::new(g).pow2_verdict(k)
}

/// Length of a shortest cycle, `None` for forests.
///
/// One BFS per vertex: a non-tree edge `xy` met from source `s` closes a
/// closed walk of length `d(x) + d(y) + 1` containing a cycle no longer than
/// that, and a shortest cycle is found exactly from any of its vertices.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Checks that `cycle` is a simple closed walk in `g` with at least three vertices.
pub fn is_valid_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    if n < 3 || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}
