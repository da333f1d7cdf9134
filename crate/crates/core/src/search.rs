//! Exhaustive generation of small connected cubic graphs and the smallest
//! power-of-two-cycle-free search over them.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_form;
use crate::cycles::{CycleEngine, SearchOptions};
use crate::format::parse_graph6;
use crate::graph::Graph;

/// Largest order [`generate_cubic_graphs`] accepts.
pub const MAX_GENERATED_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no cubic graph has odd order {0}")]
    OddOrder(usize),
    #[error("order {0} outside the supported range 4..={MAX_GENERATED_ORDER}")]
    OrderOutOfRange(usize),
    #[error("exponent bound {0} is below 2")]
    ExponentTooSmall(u32),
}

/// One graph per isomorphism class of connected cubic graphs on `n`
/// vertices, each in canonical labeling, sorted by graph6 string.
///
/// ```
/// use pow2free::search::generate_cubic_graphs;
/// assert_eq!(generate_cubic_graphs(6).unwrap().len(), 2);
/// ```
pub fn generate_cubic_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    if n % 2 == 1 {
        return Err(SearchError::OddOrder(n));
    }
    if !(4..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange(n));
    }
    let mut prefixes = Vec::new();
    Builder::new(n).fill(0, SPLIT_DEPTH.min(n), &mut |b| prefixes.push(b.clone()));
    let forms: BTreeSet<Vec<u8>> = prefixes
        .into_par_iter()
        .map(|mut b| {
            let mut local = BTreeSet::new();
            let start = SPLIT_DEPTH.min(n);
            b.fill(start, n, &mut |leaf| {
                local.insert(canonical_form(&leaf.to_graph()));
            });
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(forms
        .into_iter()
        .map(|f| parse_graph6(std::str::from_utf8(&f).unwrap()).expect("canonical form is graph6"))
        .collect())
}

/// Vertices completed sequentially before work is split across threads.
const SPLIT_DEPTH: usize = 3;

/// Labeled cubic graph under construction in breadth-first order.
///
/// Vertices are completed in label order. While completing `v`, its new
/// neighbors are either already-introduced vertices above `v` or fresh
/// labels taken in order. Every connected cubic graph has such a labeling
/// (label its breadth-first search order), and every leaf is connected since
/// each vertex is introduced by a smaller one.
#[derive(Clone)]
struct Builder {
    n: usize,
    adj: Vec<[usize; 3]>,
    deg: Vec<usize>,
    next_new: usize,
}

impl Builder {
    fn new(n: usize) -> Builder {
        Builder {
            n,
            adj: vec![[usize::MAX; 3]; n],
            deg: vec![0; n],
            next_new: 1,
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a][self.deg[a]] = b;
        self.deg[a] += 1;
        self.adj[b][self.deg[b]] = a;
        self.deg[b] += 1;
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        debug_assert_eq!(self.adj[a][self.deg[a]], b);
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][..self.deg[a]].contains(&b)
    }

    fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
        Graph::from_edges(self.n, edges).expect("builder keeps the graph simple")
    }

    /// Completes vertices `v..stop`, calling `leaf` on each state reached.
    fn fill(&mut self, v: usize, stop: usize, leaf: &mut impl FnMut(&Builder)) {
        if v == stop {
            if v < self.n || self.next_new == self.n {
                leaf(self);
            }
            return;
        }
        if v >= self.next_new {
            return;
        }
        let need = 3 - self.deg[v];
        let old: Vec<usize> = (v + 1..self.next_new)
            .filter(|&w| self.deg[w] < 3 && !self.adjacent(v, w))
            .collect();
        for fresh in 0..=need.min(self.n - self.next_new) {
            let take = need - fresh;
            if take > old.len() {
                continue;
            }
            let first_new = self.next_new;
            for i in 0..fresh {
                self.link(v, first_new + i);
            }
            self.next_new += fresh;
            for_each_combination(old.len(), take, &mut |pick| {
                for &i in pick {
                    self.link(v, old[i]);
                }
                self.fill(v + 1, stop, leaf);
                for &i in pick.iter().rev() {
                    self.unlink(v, old[i]);
                }
            });
            self.next_new -= fresh;
            for i in (0..fresh).rev() {
                self.unlink(v, first_new + i);
            }
        }
    }
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// True when `g` has no cycle of length `2^m` for `2 <= m <= k`.
///
/// Lengths above the order of `g` are skipped.
pub fn passes(g: &Graph, k: u32) -> bool {
    let engine = CycleEngine::with_options(g, SearchOptions::sequential());
    (2..=k.min(6))
        .map(|m| 1usize << m)
        .take_while(|&len| len <= g.order())
        .all(|len| !engine.has_cycle_of_length(len).expect("length within cap"))
}

/// Scan of one order in a [`SearchReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSummary {
    pub order: usize,
    pub graphs: usize,
    pub passing: usize,
    /// graph6 strings of passing graphs, sorted.
    pub witnesses: Vec<String>,
}

/// Outcome of [`find_min_pow2_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub k: u32,
    pub nmax: usize,
    /// Orders scanned, ascending; the last one holds the witnesses if any.
    pub orders: Vec<OrderSummary>,
}

impl SearchReport {
    /// Smallest order with a passing graph, if one was found.
    pub fn min_order(&self) -> Option<usize> {
        self.orders.iter().find(|o| o.passing > 0).map(|o| o.order)
    }

    pub fn witnesses(&self) -> &[String] {
        self.orders
            .iter()
            .find(|o| o.passing > 0)
            .map_or(&[], |o| &o.witnesses)
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.orders {
            writeln!(
                f,
                "n={}: {} connected cubic graphs, {} pass k={}",
                o.order, o.graphs, o.passing, self.k
            )?;
        }
        match self.min_order() {
            Some(n) => {
                writeln!(f, "f({})={}, {} witnesses", self.k, n, self.witnesses().len())?;
                for w in self.witnesses() {
                    writeln!(f, "{w}")?;
                }
                Ok(())
            }
            None => writeln!(f, "no witness <= {}", self.nmax),
        }
    }
}

/// Scans even orders `4..=nmax` and stops at the first one with a cubic
/// graph free of `2^m`-cycles for all `2 <= m <= k`.
///
/// ```
/// use pow2free::search::find_min_pow2_free;
/// let report = find_min_pow2_free(2, 10).unwrap();
/// assert_eq!(report.min_order(), Some(10));
/// assert_eq!(report.witnesses().len(), 3);
/// ```
pub fn find_min_pow2_free(k: u32, nmax: usize) -> Result<SearchReport, SearchError> {
    if k < 2 {
        return Err(SearchError::ExponentTooSmall(k));
    }
    if nmax % 2 == 1 {
        return Err(SearchError::OddOrder(nmax));
    }
    if !(4..=MAX_GENERATED_ORDER).contains(&nmax) {
        return Err(SearchError::OrderOutOfRange(nmax));
    }
    let mut orders = Vec::new();
    for n in (4..=nmax).step_by(2) {
        let graphs = generate_cubic_graphs(n)?;
        let witnesses: Vec<String> = graphs
            .par_iter()
            .filter(|g| passes(g, k))
            .map(crate::format::encode_graph6)
            .collect();
        let mut witnesses = witnesses;
        witnesses.sort();
        let found = !witnesses.is_empty();
        orders.push(OrderSummary {
            order: n,
            graphs: graphs.len(),
            passing: witnesses.len(),
            witnesses,
        });
        if found {
            break;
        }
    }
    Ok(SearchReport { k, nmax, orders })
}
