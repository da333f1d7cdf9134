//! Named constructions, each with a documented labeling and a list of
//! machine-checkable claims.
//!
//! | name            | order | built as                                             |
//! |-----------------|-------|------------------------------------------------------|
//! | `petersen`      | 10    | Kneser graph on 2-subsets of {1..5}                  |
//! | `icosahedron`   | 12    | explicit, with planar rotation                       |
//! | `c60`           | 60    | truncated icosahedron, edges classed single/double   |
//! | `tutte-coxeter` | 30    | Hamiltonian cycle plus LCF chords                    |
//! | `g12`           | 12    | Petersen with one vertex replaced by a triangle      |
//! | `g420`          | 420   | `c60` with H7 everywhere, `u` on the double bond     |
//! | `g78`           | 78    | `g12` with H7 at eleven vertices                     |
//! | `g450`          | 450   | `tutte-coxeter` with H15 everywhere, `u` on the chord |
//! | `markstrom24`   | 24    | K4 with H7 at three vertices and K3 at the fourth    |

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::are_isomorphic;
use crate::cycles::{girth, CycleEngine, CycleSpectrum, SearchOptions};
use crate::embedding::{face_length_census, genus, trace_faces, RotationSystem};
use crate::graph::{complete, Graph};
use crate::replacement::{
    h15, h7, inflate, GadgetKind, InflationPlan, PlanEntry,
};
use crate::structure::{is_bipartite, is_connected, vertex_connectivity_at_least};

/// Edge classes used by the claims.
pub mod class {
    pub const SINGLE_BOND: &str = "single";
    pub const DOUBLE_BOND: &str = "double";
    pub const HAMILTONIAN: &str = "hamiltonian";
    pub const CHORD: &str = "chord";
}

/// A graph from the atlas together with its provenance and claims.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
    /// Class name for each edge `(min, max)` that has one.
    pub edge_classes: BTreeMap<(usize, usize), &'static str>,
    /// Human-readable vertex names, when the construction publishes them.
    pub labels: Option<Vec<String>>,
    /// The inflation plan the graph was built from, if any.
    pub plan: Option<InflationPlan>,
    pub claims: Vec<Claim>,
}

impl NamedGraph {
    fn new(name: &'static str, graph: Graph) -> NamedGraph {
        NamedGraph {
            name,
            graph,
            rotation: None,
            edge_classes: BTreeMap::new(),
            labels: None,
            plan: None,
            claims: Vec::new(),
        }
    }

    pub fn edges_of_class(&self, class: &str) -> Vec<(usize, usize)> {
        self.edge_classes
            .iter()
            .filter(|(_, &c)| c == class)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Runs every claim, in order.
    pub fn verify(&self) -> Vec<ClaimOutcome> {
        self.claims.iter().map(|c| c.check(self)).collect()
    }
}

/// A checkable statement about a [`NamedGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Order(usize),
    Size(usize),
    Regular(usize),
    Connected,
    VertexConnectivityAtLeast(usize),
    Girth(usize),
    Bipartite,
    /// Genus of the stored rotation system.
    Genus(usize),
    /// Face count per face length of the stored rotation system.
    FaceLengths(Vec<(usize, usize)>),
    /// Exact cycle counts for lengths `3..=lmax`.
    Spectrum(CycleSpectrum),
    NoCycleOfLength(usize),
    EdgeClassCount(&'static str, usize),
    OneEdgeOfClassPerVertex(&'static str),
    /// Every edge of the class borders two faces of the given length.
    ClassBordersFaces(&'static str, usize),
    /// Every 8-cycle uses two consecutive edges of the class.
    EightCyclesUseConsecutive(&'static str),
    /// Replacing any single vertex of the Petersen graph by a triangle gives
    /// the same graph up to isomorphism.
    TriangleReplacementsIsomorphic,
    IsomorphicTo(&'static str, Graph),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Order(n) => write!(f, "order {n}"),
            Claim::Size(m) => write!(f, "{m} edges"),
            Claim::Regular(3) => write!(f, "cubic"),
            Claim::Regular(d) => write!(f, "{d}-regular"),
            Claim::Connected => write!(f, "connected"),
            Claim::VertexConnectivityAtLeast(k) => write!(f, "{k}-connected"),
            Claim::Girth(g) => write!(f, "girth {g}"),
            Claim::Bipartite => write!(f, "bipartite"),
            Claim::Genus(g) => write!(f, "embedding genus {g}"),
            Claim::FaceLengths(census) => {
                let total: usize = census.iter().map(|&(_, c)| c).sum();
                write!(f, "{total} faces:")?;
                for (len, c) in census {
                    write!(f, " {c}x{len}")?;
                }
                Ok(())
            }
            Claim::Spectrum(s) => write!(f, "cycle spectrum up to {} = {s}", s.lmax()),
            Claim::NoCycleOfLength(len) => write!(f, "no {len}-cycle"),
            Claim::EdgeClassCount(class, n) => write!(f, "{n} {class} edges"),
            Claim::OneEdgeOfClassPerVertex(class) => {
                write!(f, "each vertex on exactly one {class} edge")
            }
            Claim::ClassBordersFaces(class, len) => {
                write!(f, "every {class} edge borders two {len}-faces")
            }
            Claim::EightCyclesUseConsecutive(class) => {
                write!(f, "every 8-cycle has two consecutive {class} edges")
            }
            Claim::TriangleReplacementsIsomorphic => {
                write!(f, "all 10 triangle replacements of Petersen are isomorphic")
            }
            Claim::IsomorphicTo(name, _) => write!(f, "isomorphic to {name}"),
        }
    }
}

/// Result of checking one claim.
#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub claim: String,
    pub passed: bool,
    /// What was observed, when it differs from or adds to the claim text.
    pub detail: String,
    pub elapsed: Duration,
}

impl Claim {
    pub fn check(&self, ng: &NamedGraph) -> ClaimOutcome {
        let start = Instant::now();
        let (passed, detail) = self.evaluate(ng);
        ClaimOutcome {
            claim: self.to_string(),
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }

    fn evaluate(&self, ng: &NamedGraph) -> (bool, String) {
        let g = &ng.graph;
        let observed = |ok: bool, what: String| (ok, what);
        match self {
            Claim::Order(n) => observed(g.order() == *n, format!("order {}", g.order())),
            Claim::Size(m) => observed(g.size() == *m, format!("{} edges", g.size())),
            Claim::Regular(d) => {
                let seq = g.degree_sequence();
                observed(g.is_regular(*d), format!("degrees {}..={}", seq[0], seq[seq.len() - 1]))
            }
            Claim::Connected => observed(is_connected(g), String::new()),
            Claim::VertexConnectivityAtLeast(k) => match vertex_connectivity_at_least(g, *k) {
                Ok(ok) => observed(ok, String::new()),
                Err(e) => observed(false, e.to_string()),
            },
            Claim::Girth(want) => {
                let got = girth(g);
                observed(got == Some(*want), format!("girth {got:?}"))
            }
            Claim::Bipartite => observed(is_bipartite(g).is_bipartite(), String::new()),
            Claim::Genus(want) => match &ng.rotation {
                None => observed(false, "no rotation system".into()),
                Some(rot) => match genus(g, rot) {
                    Ok(got) => observed(got == *want, format!("genus {got}")),
                    Err(e) => observed(false, e.to_string()),
                },
            },
            Claim::FaceLengths(want) => match &ng.rotation {
                None => observed(false, "no rotation system".into()),
                Some(rot) => match trace_faces(g, rot) {
                    Ok(faces) => {
                        let got = face_length_census(&faces);
                        observed(got == *want, format!("{got:?}"))
                    }
                    Err(e) => observed(false, e.to_string()),
                },
            },
            Claim::Spectrum(want) => match CycleEngine::new(g).spectrum(want.lmax()) {
                Ok(got) => observed(got == *want, format!("{got}")),
                Err(e) => observed(false, e.to_string()),
            },
            Claim::NoCycleOfLength(len) => match CycleEngine::new(g).find_cycle(*len) {
                Ok(None) => observed(true, String::new()),
                Ok(Some(c)) => observed(false, format!("found {c:?}")),
                Err(e) => observed(false, e.to_string()),
            },
            Claim::EdgeClassCount(class, n) => {
                let got = ng.edges_of_class(class).len();
                observed(got == *n, format!("{got} {class} edges"))
            }
            Claim::OneEdgeOfClassPerVertex(class) => {
                let mut count = vec![0usize; g.order()];
                for (a, b) in ng.edges_of_class(class) {
                    count[a] += 1;
                    count[b] += 1;
                }
                let bad = count.iter().position(|&c| c != 1);
                observed(bad.is_none(), bad.map_or(String::new(), |v| format!("vertex {v} has {}", count[v])))
            }
            Claim::ClassBordersFaces(class, len) => match &ng.rotation {
                None => observed(false, "no rotation system".into()),
                Some(rot) => {
                    let faces = trace_faces(g, rot).expect("rotation matches graph");
                    let mut face_len = BTreeMap::new();
                    for f in &faces {
                        for &d in &f.darts {
                            face_len.insert(d, f.len());
                        }
                    }
                    let bad = ng
                        .edges_of_class(class)
                        .into_iter()
                        .find(|&(a, b)| face_len[&(a, b)] != *len || face_len[&(b, a)] != *len);
                    observed(bad.is_none(), bad.map_or(String::new(), |e| format!("edge {e:?}")))
                }
            },
            Claim::EightCyclesUseConsecutive(class) => {
                let mut total = 0usize;
                let mut bad = None;
                CycleEngine::new(g)
                    .for_each_cycle(8, |c| {
                        total += 1;
                        let in_class = |i: usize| {
                            let (a, b) = (c[i], c[(i + 1) % 8]);
                            ng.edge_classes.get(&(a.min(b), a.max(b))) == Some(class)
                        };
                        if !(0..8).any(|i| in_class(i) && in_class((i + 1) % 8)) {
                            bad = Some(c.to_vec());
                            return std::ops::ControlFlow::Break(());
                        }
                        std::ops::ControlFlow::Continue(())
                    })
                    .expect("length in range");
                match bad {
                    None => observed(total > 0, format!("{total} 8-cycles checked")),
                    Some(c) => observed(false, format!("counterexample {c:?}")),
                }
            }
            Claim::TriangleReplacementsIsomorphic => {
                let outs = triangle_replacements();
                let ok = outs.iter().all(|h| are_isomorphic(&outs[0], h));
                observed(ok, format!("{} replacements compared", outs.len()))
            }
            Claim::IsomorphicTo(_, h) => observed(are_isomorphic(g, h), String::new()),
        }
    }
}

/// Petersen graph as the Kneser graph K(5,2): vertex `i` is the `i`-th
/// 2-subset of {1,...,5} in lexicographic order, adjacent when disjoint.
pub fn petersen() -> NamedGraph {
    let pairs: Vec<(u8, u8)> = (1..=5u8)
        .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    let mut ng = NamedGraph::new("petersen", Graph::from_edges(10, edges).unwrap());
    ng.labels = Some(pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect());
    ng.claims = vec![
        Claim::Order(10),
        Claim::Regular(3),
        Claim::Girth(5),
        Claim::NoCycleOfLength(4),
        Claim::VertexConnectivityAtLeast(3),
    ];
    ng
}

/// Labels of the drawn Petersen graph and of [`g12`]: outer 9-cycle
/// `O0..O8`, then the center `C` (Petersen) or triangle `T0, T1, T2` (G12).
pub mod drawn {
    pub const OUTER: [usize; 9] = [0, 1, 2, 3, 4, 5, 6, 7, 8];
    pub const CENTER: usize = 9;
    pub const T0: usize = 9;
    pub const T1: usize = 10;
    pub const T2: usize = 11;
}

/// Petersen graph as drawn around a center vertex: the outer cycle
/// `O0..O8` (vertices 0..8), spokes from the center (vertex 9) to `O0`,
/// `O3`, `O6`, and chords `O1-O5`, `O2-O7`, `O4-O8`.
pub fn petersen_drawn() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
    edges.extend([(9, 0), (9, 3), (9, 6), (1, 5), (2, 7), (4, 8)]);
    Graph::from_edges(10, edges).unwrap()
}

/// The regular icosahedron with a planar rotation.
///
/// Vertex 0 is adjacent to the ring 1..5, vertex 11 to the ring 6..10; ring
/// vertex `i` is joined to `5+i` and `5+(i mod 5)+1`. The rotation follows a
/// drawing with 0 in the middle, both rings numbered clockwise, and 11 on
/// the outside.
pub fn icosahedron() -> NamedGraph {
    let next = |i: usize| i % 5 + 1;
    let prev = |i: usize| (i + 3) % 5 + 1;
    let mut edges = Vec::new();
    for i in 1..=5 {
        edges.extend([(0, i), (i, next(i)), (11, 5 + i), (5 + i, 5 + next(i))]);
        edges.extend([(i, 5 + i), (i, 5 + next(i))]);
    }
    let graph = Graph::from_edges(12, edges).unwrap();
    let mut order = vec![Vec::new(); 12];
    order[0] = (1..=5).collect();
    for i in 1..=5 {
        order[i] = vec![5 + i, 5 + next(i), next(i), 0, prev(i)];
        order[5 + i] = vec![11, 5 + next(i), i, prev(i), 5 + prev(i)];
    }
    order[11] = (6..=10).rev().collect();
    let rotation = RotationSystem::new(&graph, order).expect("icosahedron rotation");
    let mut ng = NamedGraph::new("icosahedron", graph);
    ng.rotation = Some(rotation);
    ng.claims = vec![
        Claim::Order(12),
        Claim::Size(30),
        Claim::Regular(5),
        Claim::Genus(0),
        Claim::FaceLengths(vec![(3, 20)]),
    ];
    ng
}

/// Truncates an embedded graph.
///
/// Each vertex `x` of degree `d` becomes a `d`-cycle, one vertex per
/// incident edge, ordered by the rotation at `x`; new vertices are numbered
/// by `x` then by rotation position. Each original edge survives as an edge
/// between the two new vertices it touches. Cycle edges get class
/// `"single"`, surviving original edges `"double"`.
///
/// Returns `None` when `ng` has no rotation.
pub fn truncate(ng: &NamedGraph) -> Option<NamedGraph> {
    let rot = ng.rotation.as_ref()?;
    let g = &ng.graph;
    let mut offset = vec![0; g.order() + 1];
    for v in 0..g.order() {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let id = |x: usize, y: usize| offset[x] + rot.at(x).iter().position(|&z| z == y).unwrap();
    let n = offset[g.order()];
    let mut classes = BTreeMap::new();
    let mut order = vec![Vec::new(); n];
    for x in 0..g.order() {
        let d = g.degree(x);
        for (i, &y) in rot.at(x).iter().enumerate() {
            let me = offset[x] + i;
            let cw = offset[x] + (i + 1) % d;
            let ccw = offset[x] + (i + d - 1) % d;
            classes.insert((me.min(cw), me.max(cw)), class::SINGLE_BOND);
            let across = id(y, x);
            classes.insert((me.min(across), me.max(across)), class::DOUBLE_BOND);
            order[me] = vec![across, cw, ccw];
        }
    }
    let graph = Graph::from_edges(n, classes.keys().copied()).expect("truncation is simple");
    let rotation = RotationSystem::new(&graph, order).expect("truncation rotation");
    let mut out = NamedGraph::new("truncation", graph);
    out.rotation = Some(rotation);
    out.edge_classes = classes;
    Some(out)
}

/// The buckyball: truncated icosahedron with bond classes. Double bonds are
/// the surviving icosahedron edges.
pub fn c60() -> NamedGraph {
    let mut ng = truncate(&icosahedron()).expect("icosahedron is embedded");
    ng.name = "c60";
    ng.claims = vec![
        Claim::Order(60),
        Claim::Size(90),
        Claim::Regular(3),
        Claim::Connected,
        Claim::VertexConnectivityAtLeast(3),
        Claim::Spectrum(CycleSpectrum::from_counts(8, [(5, 12), (6, 20)])),
        Claim::Genus(0),
        Claim::FaceLengths(vec![(5, 12), (6, 20)]),
        Claim::EdgeClassCount(class::DOUBLE_BOND, 30),
        Claim::EdgeClassCount(class::SINGLE_BOND, 60),
        Claim::OneEdgeOfClassPerVertex(class::DOUBLE_BOND),
        Claim::ClassBordersFaces(class::DOUBLE_BOND, 6),
    ];
    ng
}

/// LCF shifts of the Tutte-Coxeter graph, repeated five times around the
/// Hamiltonian cycle.
pub const TUTTE_COXETER_LCF: [i64; 6] = [-13, -9, 7, -7, 9, 13];

/// The Tutte-Coxeter graph (Tutte 8-cage): Hamiltonian cycle `0..29` plus
/// chords `i -> i + TUTTE_COXETER_LCF[i mod 6] (mod 30)`.
pub fn tutte_coxeter() -> NamedGraph {
    let mut classes = BTreeMap::new();
    for i in 0..30usize {
        let j = (i + 1) % 30;
        classes.insert((i.min(j), i.max(j)), class::HAMILTONIAN);
    }
    for i in 0..30usize {
        let j = (i as i64 + TUTTE_COXETER_LCF[i % 6]).rem_euclid(30) as usize;
        classes.insert((i.min(j), i.max(j)), class::CHORD);
    }
    let graph = Graph::from_edges(30, classes.keys().copied()).expect("LCF graph is simple");
    let mut ng = NamedGraph::new("tutte-coxeter", graph);
    ng.edge_classes = classes;
    ng.claims = vec![
        Claim::Order(30),
        Claim::Size(45),
        Claim::Regular(3),
        Claim::Girth(8),
        Claim::Bipartite,
        Claim::EdgeClassCount(class::CHORD, 15),
        Claim::OneEdgeOfClassPerVertex(class::CHORD),
        Claim::EightCyclesUseConsecutive(class::HAMILTONIAN),
    ];
    ng
}

/// Replaces vertex `x` of the Kneser Petersen graph by a triangle, for each `x`.
pub fn triangle_replacements() -> Vec<Graph> {
    let base = petersen().graph;
    (0..base.order())
        .map(|x| {
            let entries = (0..base.order())
                .map(|v| {
                    let kind = if v == x { GadgetKind::K3 } else { GadgetKind::Identity };
                    PlanEntry::new(kind, base.neighbors(v)[0])
                })
                .collect();
            inflate(&InflationPlan::new(base.clone(), entries).unwrap()).graph
        })
        .collect()
}

fn g12_labels() -> Vec<String> {
    (0..9)
        .map(|i| format!("O{i}"))
        .chain((0..3).map(|i| format!("T{i}")))
        .collect()
}

/// Petersen with its center replaced by a triangle, in the drawn labeling:
/// `O0..O8` are 0..8 and `T0, T1, T2` are 9, 10, 11 with spokes `T0-O0`,
/// `T1-O3`, `T2-O6`.
pub fn g12() -> NamedGraph {
    let base = petersen_drawn();
    let entries = (0..10)
        .map(|v| {
            if v == drawn::CENTER {
                PlanEntry::new(GadgetKind::K3, 0)
            } else {
                PlanEntry::new(GadgetKind::Identity, base.neighbors(v)[0])
            }
        })
        .collect();
    let plan = InflationPlan::new(base, entries).unwrap();
    let mut ng = NamedGraph::new("g12", inflate(&plan).graph);
    ng.labels = Some(g12_labels());
    ng.plan = Some(plan);
    ng.claims = vec![
        Claim::Order(12),
        Claim::Regular(3),
        Claim::Connected,
        Claim::Spectrum(CycleSpectrum::from_counts(6, [(3, 1), (5, 6), (6, 10)])),
        Claim::TriangleReplacementsIsomorphic,
        Claim::IsomorphicTo("kneser triangle replacement", triangle_replacements().remove(0)),
    ];
    ng
}

/// The C60 inflation plan: H7 at every vertex, `u` on the double bond.
pub fn g420_plan() -> InflationPlan {
    let c = c60();
    let doubles = c.edges_of_class(class::DOUBLE_BOND);
    let mut u_of = vec![usize::MAX; c.graph.order()];
    for (a, b) in doubles {
        u_of[a] = b;
        u_of[b] = a;
    }
    InflationPlan::uniform(c.graph.clone(), GadgetKind::H7, |v| u_of[v])
        .unwrap()
        .with_rotation(c.rotation.clone().unwrap())
        .unwrap()
}

pub fn g420() -> NamedGraph {
    let plan = g420_plan();
    let inf = inflate(&plan);
    let mut ng = NamedGraph::new("g420", inf.graph);
    ng.rotation = inf.rotation;
    ng.plan = Some(plan);
    let per_copy = CycleEngine::new(h7().graph()).spectrum(7).unwrap();
    ng.claims = vec![
        Claim::Order(420),
        Claim::Size(630),
        Claim::Regular(3),
        Claim::Connected,
        Claim::VertexConnectivityAtLeast(3),
        Claim::Genus(0),
        Claim::NoCycleOfLength(4),
        Claim::NoCycleOfLength(8),
        Claim::NoCycleOfLength(16),
        Claim::Spectrum(CycleSpectrum::from_counts(
            17,
            per_copy.iter().map(|(len, c)| (len, 60 * c)),
        )),
    ];
    ng
}

/// Vertex of [`g12`] that stays unreplaced in [`g78`].
pub const G78_UNREPLACED: usize = drawn::T0;

/// Shipped G78 plan (one line per G12 vertex: `vertex gadget u-neighbor`).
pub const G78_PLAN: &str = include_str!("../plans/g78.plan");

pub fn g78_plan() -> InflationPlan {
    InflationPlan::parse(g12().graph, G78_PLAN).expect("shipped g78 plan")
}

pub fn g78() -> NamedGraph {
    let plan = g78_plan();
    let mut ng = NamedGraph::new("g78", inflate(&plan).graph);
    ng.plan = Some(plan);
    ng.claims = vec![
        Claim::Order(78),
        Claim::Regular(3),
        Claim::Connected,
        Claim::NoCycleOfLength(4),
        Claim::NoCycleOfLength(8),
        Claim::NoCycleOfLength(16),
    ];
    ng
}

/// Every assignment of `u`-edges to the eleven H7 copies of G78 (identity at
/// [`G78_UNREPLACED`]) whose inflation has no 4-, 8- or 16-cycle, in
/// lexicographic order of the `u`-neighbor lists.
pub fn g78_search() -> Vec<InflationPlan> {
    let base = g12().graph;
    let replaced: Vec<usize> = (0..base.order()).filter(|&v| v != G78_UNREPLACED).collect();
    let total = 3usize.pow(replaced.len() as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut entries: Vec<PlanEntry> = (0..base.order())
                .map(|v| PlanEntry::new(GadgetKind::Identity, base.neighbors(v)[0]))
                .collect();
            // Most significant digit first, so `code` order is lexicographic.
            let mut rest = code;
            for &v in replaced.iter().rev() {
                entries[v] = PlanEntry::new(GadgetKind::H7, base.neighbors(v)[rest % 3]);
                rest /= 3;
            }
            let plan = InflationPlan::new(base.clone(), entries).unwrap();
            let g = inflate(&plan).graph;
            let engine = CycleEngine::with_options(&g, SearchOptions::sequential());
            engine.pow2_verdict(4).unwrap().is_free().then_some(plan)
        })
        .collect()
}

/// Order-450 graph: H15 at every Tutte-Coxeter vertex, `u` on the chord.
pub fn g450_plan() -> InflationPlan {
    let tc = tutte_coxeter();
    let mut u_of = vec![usize::MAX; tc.graph.order()];
    for (a, b) in tc.edges_of_class(class::CHORD) {
        u_of[a] = b;
        u_of[b] = a;
    }
    InflationPlan::uniform(tc.graph, GadgetKind::H15, |v| u_of[v]).unwrap()
}

pub fn g450() -> NamedGraph {
    let plan = g450_plan();
    let mut ng = NamedGraph::new("g450", inflate(&plan).graph);
    ng.plan = Some(plan);
    ng.claims = vec![
        Claim::Order(450),
        Claim::Size(675),
        Claim::Regular(3),
        Claim::Connected,
        Claim::NoCycleOfLength(4),
        Claim::NoCycleOfLength(8),
        Claim::NoCycleOfLength(16),
        Claim::NoCycleOfLength(32),
    ];
    ng
}

/// K4 vertex carrying the triangle in [`markstrom24`].
pub const MARKSTROM_TRIANGLE_VERTEX: usize = 3;

/// Shipped plan for [`markstrom24`] on K4.
pub const MARKSTROM24_PLAN: &str = include_str!("../plans/markstrom24.plan");

/// Lexicographically first `u`-assignment for H7 at K4 vertices 0, 1, 2 and
/// a triangle at vertex 3 that avoids 4- and 8-cycles, if any.
pub fn markstrom24_search() -> Option<InflationPlan> {
    let base = complete(4);
    for code in 0..27usize {
        let digits = [code / 9, code / 3 % 3, code % 3];
        let mut entries = Vec::new();
        for v in 0..4 {
            let nbrs = base.neighbors(v);
            entries.push(if v == MARKSTROM_TRIANGLE_VERTEX {
                PlanEntry::new(GadgetKind::K3, nbrs[0])
            } else {
                PlanEntry::new(GadgetKind::H7, nbrs[digits[v]])
            });
        }
        let plan = InflationPlan::new(base.clone(), entries).unwrap();
        let g = inflate(&plan).graph;
        if CycleEngine::new(&g).pow2_verdict(3).unwrap().is_free() {
            return Some(plan);
        }
    }
    None
}

pub fn markstrom24() -> NamedGraph {
    let plan = InflationPlan::parse(complete(4), MARKSTROM24_PLAN).expect("shipped plan");
    let mut ng = NamedGraph::new("markstrom24", inflate(&plan).graph);
    ng.plan = Some(plan);
    ng.claims = vec![
        Claim::Order(24),
        Claim::Regular(3),
        Claim::Connected,
        Claim::NoCycleOfLength(4),
        Claim::NoCycleOfLength(8),
    ];
    ng
}

/// H7 as a named graph, with its attachment distances as claims.
pub fn h7_named() -> NamedGraph {
    let mut ng = NamedGraph::new("h7", h7().graph().clone());
    ng.labels = Some(["v", "a", "b", "w", "p", "q", "u"].map(String::from).to_vec());
    ng.claims = vec![
        Claim::Order(7),
        Claim::Size(9),
        Claim::Spectrum(CycleSpectrum::from_counts(7, [(3, 2), (5, 1), (6, 2), (7, 1)])),
    ];
    ng
}

pub fn h15_named() -> NamedGraph {
    let mut ng = NamedGraph::new("h15", h15().graph().clone());
    ng.claims = vec![
        Claim::Order(15),
        Claim::Size(21),
        Claim::NoCycleOfLength(4),
        Claim::NoCycleOfLength(8),
    ];
    ng
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 11] = [
    "h7",
    "h15",
    "petersen",
    "g12",
    "icosahedron",
    "c60",
    "tutte-coxeter",
    "g420",
    "g78",
    "g450",
    "markstrom24",
];

pub fn by_name(name: &str) -> Option<NamedGraph> {
    Some(match name {
        "h7" => h7_named(),
        "h15" => h15_named(),
        "petersen" => petersen(),
        "g12" => g12(),
        "icosahedron" => icosahedron(),
        "c60" => c60(),
        "tutte-coxeter" => tutte_coxeter(),
        "g420" => g420(),
        "g78" => g78(),
        "g450" => g450(),
        "markstrom24" => markstrom24(),
        _ => return None,
    })
}
