//! Vertex inflation: replacing each vertex of a cubic graph by a gadget.
//!
//! A gadget is a small graph with three attachment vertices playing the roles
//! `u`, `v` and `w`. Inflating a base vertex `x` replaces it by a copy of its
//! gadget, and each base edge `xy` becomes an edge between the attachment
//! assigned to `y` in the copy at `x` and the attachment assigned to `x` in
//! the copy at `y`.
//!
//! Which incident edge gets role `u` is part of the plan. Of the two
//! remaining edges, role `v` goes to the one whose other endpoint is smaller.
//! Both shipped gadgets with distinct `v` and `w` have an automorphism
//! swapping them, so that convention never changes the result up to
//! isomorphism.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::cycles::{is_valid_cycle, CycleEngine};
use crate::embedding::{find_planar_rotation, RotationSystem};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflationError {
    #[error("base graph is not cubic: vertex {0} has degree {1}")]
    NotCubic(usize, usize),
    #[error("plan has {entries} entries for a base of order {order}")]
    EntryCount { entries: usize, order: usize },
    #[error("u-edge {vertex}-{neighbor} is not an edge of the base graph")]
    UEdgeNotIncident { vertex: usize, neighbor: usize },
    #[error("base rotation does not match the base graph")]
    BadRotation,
    #[error("not a cycle of the inflated graph")]
    InvalidCycle,
    #[error("plan line {line}: {message}")]
    PlanSyntax { line: usize, message: String },
}

/// Attachment roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    U,
    V,
    W,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::U, Role::V, Role::W];

    fn index(self) -> usize {
        self as usize
    }
}

/// A replacement graph with three attachment vertices.
#[derive(Debug, Clone)]
pub struct Gadget {
    name: String,
    graph: Graph,
    attach: [usize; 3],
    /// Planar rotation of the gadget plus one extra vertex (index
    /// `graph.order()`) joined to the three attachments.
    closure: Option<(Graph, RotationSystem)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("attachment vertices must be distinct")]
    RepeatedAttachment,
    #[error("vertex {0} has degree {1}, expected {2}")]
    BadDegree(usize, usize, usize),
    #[error("gadget contains a cycle of length {0}")]
    PowerOfTwoCycle(usize),
    #[error("attachment vertex {0} is out of range")]
    AttachmentOutOfRange(usize),
}

impl Gadget {
    /// Validates degrees (attachments 2, everything else 3) and the absence
    /// of power-of-two cycles, then computes a planar embedding of the
    /// closure when one exists.
    pub fn new(name: &str, graph: Graph, attach: [usize; 3]) -> Result<Gadget, GadgetError> {
        if let Some(&a) = attach.iter().find(|&&a| a >= graph.order()) {
            return Err(GadgetError::AttachmentOutOfRange(a));
        }
        if attach[0] == attach[1] || attach[1] == attach[2] || attach[0] == attach[2] {
            return Err(GadgetError::RepeatedAttachment);
        }
        for v in 0..graph.order() {
            let want = if attach.contains(&v) { 2 } else { 3 };
            if graph.degree(v) != want {
                return Err(GadgetError::BadDegree(v, graph.degree(v), want));
            }
        }
        let engine = CycleEngine::new(&graph);
        let mut len = 4;
        while len <= graph.order() {
            if engine.has_cycle_of_length(len).expect("length in range") {
                return Err(GadgetError::PowerOfTwoCycle(len));
            }
            len *= 2;
        }
        let n = graph.order();
        let closure_edges = graph.edges().chain(attach.iter().map(|&a| (a, n)));
        let closure = Graph::from_edges(n + 1, closure_edges).expect("closure is simple");
        let closure = find_planar_rotation(&closure)
            .ok()
            .flatten()
            .map(|rot| (closure, rot));
        Ok(Gadget {
            name: name.to_string(),
            graph,
            attach,
            closure,
        })
    }

    /// A single vertex serving all three roles: "not replaced".
    pub fn identity() -> Gadget {
        Gadget {
            name: "identity".into(),
            graph: Graph::empty(1),
            attach: [0, 0, 0],
            closure: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn attachment(&self, role: Role) -> usize {
        self.attach[role.index()]
    }

    pub fn is_identity(&self) -> bool {
        self.attach[0] == self.attach[1]
    }

    /// The gadget plus a hub vertex adjacent to the attachments, with a planar rotation.
    pub fn closure(&self) -> Option<&(Graph, RotationSystem)> {
        self.closure.as_ref()
    }
}

/// Shipped gadgets, addressable by name in plan files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    Identity,
    K3,
    H7,
    H15,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Identity => "identity",
            GadgetKind::K3 => "k3",
            GadgetKind::H7 => "h7",
            GadgetKind::H15 => "h15",
        }
    }

    pub fn from_name(name: &str) -> Option<GadgetKind> {
        [GadgetKind::Identity, GadgetKind::K3, GadgetKind::H7, GadgetKind::H15]
            .into_iter()
            .find(|k| k.name() == name)
    }

    pub fn gadget(self) -> &'static Gadget {
        match self {
            GadgetKind::Identity => identity_gadget(),
            GadgetKind::K3 => k3_gadget(),
            GadgetKind::H7 => h7(),
            GadgetKind::H15 => h15(),
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn identity_gadget() -> &'static Gadget {
    static G: OnceLock<Gadget> = OnceLock::new();
    G.get_or_init(Gadget::identity)
}

/// Triangle; every vertex is an attachment (`u = 0`, `v = 1`, `w = 2`).
pub fn k3_gadget() -> &'static Gadget {
    static G: OnceLock<Gadget> = OnceLock::new();
    G.get_or_init(|| {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        Gadget::new("k3", g, [0, 1, 2]).expect("valid gadget")
    })
}

/// Vertex names of [`h7`].
pub mod h7_labels {
    pub const V: usize = 0;
    pub const A: usize = 1;
    pub const B: usize = 2;
    pub const W: usize = 3;
    pub const P: usize = 4;
    pub const Q: usize = 5;
    pub const U: usize = 6;
}

fn h7_edges() -> [(usize, usize); 9] {
    use h7_labels::*;
    [
        (V, A),
        (A, B),
        (B, W),
        (V, P),
        (A, P),
        (P, U),
        (U, Q),
        (Q, B),
        (W, Q),
    ]
}

/// Seven vertices: a path `v-a-b-w`, triangles `v-a-p` and `b-w-q`, and the
/// apex `u` joined to `p` and `q`. Labels are in [`h7_labels`].
pub fn h7() -> &'static Gadget {
    static G: OnceLock<Gadget> = OnceLock::new();
    G.get_or_init(|| {
        use h7_labels::*;
        let g = Graph::from_edges(7, h7_edges()).unwrap();
        Gadget::new("h7", g, [U, V, W]).expect("valid gadget")
    })
}

/// Two copies of [`h7`] (vertices `0..7` and `7..14`, each with the
/// [`h7_labels`] layout) whose `v` vertices are joined, and whose `w`
/// vertices are both joined to a new vertex 14. Vertex 14 is the `u`
/// attachment; the two former apexes are `v` (vertex 6) and `w` (vertex 13).
pub fn h15() -> &'static Gadget {
    static G: OnceLock<Gadget> = OnceLock::new();
    G.get_or_init(|| {
        use h7_labels::*;
        let copy = |shift: usize| h7_edges().into_iter().map(move |(a, b)| (a + shift, b + shift));
        let edges = copy(0)
            .chain(copy(7))
            .chain([(V, V + 7), (W, 14), (W + 7, 14)]);
        let g = Graph::from_edges(15, edges).unwrap();
        Gadget::new("h15", g, [14, U, U + 7]).expect("valid gadget")
    })
}

/// One base vertex's entry in an [`InflationPlan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlanEntry {
    pub gadget: GadgetKind,
    /// Base neighbor whose edge receives role `u`.
    pub u_neighbor: usize,
    /// Exchange the `v` and `w` roles relative to the default convention.
    pub swap_vw: bool,
}

impl PlanEntry {
    pub fn new(gadget: GadgetKind, u_neighbor: usize) -> PlanEntry {
        PlanEntry {
            gadget,
            u_neighbor,
            swap_vw: false,
        }
    }
}

/// A cubic base graph with one entry per vertex, and optionally an
/// embedding of the base to compose with the gadget embeddings.
#[derive(Debug, Clone)]
pub struct InflationPlan {
    base: Graph,
    entries: Vec<PlanEntry>,
    rotation: Option<RotationSystem>,
}

impl InflationPlan {
    pub fn new(base: Graph, entries: Vec<PlanEntry>) -> Result<InflationPlan, InflationError> {
        if let Some(v) = (0..base.order()).find(|&v| base.degree(v) != 3) {
            return Err(InflationError::NotCubic(v, base.degree(v)));
        }
        if entries.len() != base.order() {
            return Err(InflationError::EntryCount {
                entries: entries.len(),
                order: base.order(),
            });
        }
        for (v, e) in entries.iter().enumerate() {
            if !base.has_edge(v, e.u_neighbor) {
                return Err(InflationError::UEdgeNotIncident {
                    vertex: v,
                    neighbor: e.u_neighbor,
                });
            }
        }
        Ok(InflationPlan {
            base,
            entries,
            rotation: None,
        })
    }

    /// Plan using `gadget` everywhere, with `u` on the edge chosen by `u_of`.
    pub fn uniform(
        base: Graph,
        gadget: GadgetKind,
        u_of: impl Fn(usize) -> usize,
    ) -> Result<InflationPlan, InflationError> {
        let entries = (0..base.order())
            .map(|v| PlanEntry::new(gadget, u_of(v)))
            .collect();
        InflationPlan::new(base, entries)
    }

    pub fn with_rotation(mut self, rotation: RotationSystem) -> Result<Self, InflationError> {
        rotation
            .check(&self.base)
            .map_err(|_| InflationError::BadRotation)?;
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn entries(&self) -> &[PlanEntry] {
        &self.entries
    }

    /// Base neighbor of `x` whose edge carries `role`.
    pub fn neighbor_for(&self, x: usize, role: Role) -> usize {
        self.roles(x)[role.index()]
    }

    /// Neighbors of `x` carrying roles `u`, `v`, `w`.
    fn roles(&self, x: usize) -> [usize; 3] {
        let e = self.entries[x];
        let mut rest = self.base.neighbors(x).iter().copied().filter(|&y| y != e.u_neighbor);
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        if e.swap_vw {
            [e.u_neighbor, b, a]
        } else {
            [e.u_neighbor, a, b]
        }
    }

    fn role_of(&self, x: usize, y: usize) -> Role {
        let r = self.roles(x);
        Role::ALL[r.iter().position(|&z| z == y).expect("neighbor")]
    }

    /// Writes the plan as lines `vertex gadget u-neighbor`.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .enumerate()
            .map(|(v, e)| format!("{v} {} {}\n", e.gadget, e.u_neighbor))
            .collect()
    }

    /// Reads lines `vertex gadget u-neighbor` for the given base. Blank lines
    /// and `#` comments are ignored; every base vertex must appear once.
    pub fn parse(base: Graph, text: &str) -> Result<InflationPlan, InflationError> {
        let syntax = |line: usize, message: String| InflationError::PlanSyntax { line, message };
        let mut entries: Vec<Option<PlanEntry>> = vec![None; base.order()];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let [v, name, u] = tokens[..] else {
                return Err(syntax(line, format!("expected 3 fields, found {}", tokens.len())));
            };
            let v: usize = v
                .parse()
                .map_err(|_| syntax(line, format!("bad vertex `{v}`")))?;
            let gadget = GadgetKind::from_name(name)
                .ok_or_else(|| syntax(line, format!("unknown gadget `{name}`")))?;
            let u: usize = u
                .parse()
                .map_err(|_| syntax(line, format!("bad u-neighbor `{u}`")))?;
            let slot = entries
                .get_mut(v)
                .ok_or_else(|| syntax(line, format!("vertex {v} out of range")))?;
            if slot.is_some() {
                return Err(syntax(line, format!("vertex {v} listed twice")));
            }
            *slot = Some(PlanEntry::new(gadget, u));
        }
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(v, e)| e.ok_or_else(|| syntax(0, format!("vertex {v} missing"))))
            .collect::<Result<Vec<_>, _>>()?;
        InflationPlan::new(base, entries)
    }
}

/// Output of [`inflate`].
#[derive(Debug, Clone)]
pub struct Inflation {
    pub graph: Graph,
    /// Base vertex each inflated vertex came from.
    pub projection: Vec<usize>,
    /// First inflated vertex of each base vertex's gadget copy.
    pub offsets: Vec<usize>,
    /// Composed embedding, when the plan had a base rotation and every
    /// gadget in use has a planar closure.
    pub rotation: Option<RotationSystem>,
}

/// Builds the inflated graph. Gadget copies are laid out in base-vertex
/// order: the copy for base vertex `x` occupies `offsets[x]..offsets[x+1]`
/// with the gadget's own labeling.
pub fn inflate(plan: &InflationPlan) -> Inflation {
    let base = &plan.base;
    let mut offsets = Vec::with_capacity(base.order() + 1);
    offsets.push(0);
    for e in &plan.entries {
        offsets.push(offsets.last().unwrap() + e.gadget.gadget().order());
    }
    let total = offsets[base.order()];
    let port = |x: usize, y: usize| {
        let g = plan.entries[x].gadget.gadget();
        offsets[x] + g.attachment(plan.role_of(x, y))
    };
    let mut projection = Vec::with_capacity(total);
    let mut edges = Vec::with_capacity(3 * total / 2);
    for (x, e) in plan.entries.iter().enumerate() {
        let g = e.gadget.gadget();
        projection.extend(std::iter::repeat_n(x, g.order()));
        edges.extend(g.graph().edges().map(|(a, b)| (a + offsets[x], b + offsets[x])));
    }
    edges.extend(base.edges().map(|(x, y)| (port(x, y), port(y, x))));
    let graph = Graph::from_edges(total, edges).expect("inflation of a simple graph is simple");
    let rotation = plan
        .rotation
        .as_ref()
        .and_then(|rot| compose_rotation(plan, rot, &offsets, &port));
    offsets.pop();
    Inflation {
        graph,
        projection,
        offsets,
        rotation,
    }
}

/// Splices each gadget's planar closure into the base rotation. The hub of
/// the closure stands for the outside of the copy, so its cyclic order of
/// roles must be the reverse of the base rotation's; otherwise the mirror
/// closure is used.
fn compose_rotation(
    plan: &InflationPlan,
    base_rot: &RotationSystem,
    offsets: &[usize],
    port: &dyn Fn(usize, usize) -> usize,
) -> Option<RotationSystem> {
    let total = offsets[plan.base.order()];
    let mut order = vec![Vec::new(); total];
    for x in 0..plan.base.order() {
        let gadget = plan.entries[x].gadget.gadget();
        let off = offsets[x];
        if gadget.is_identity() {
            order[off] = base_rot.at(x).iter().map(|&y| port(y, x)).collect();
            continue;
        }
        let (closure, rot) = gadget.closure()?;
        let hub = gadget.order();
        let role_at_attachment = |a: usize| {
            Role::ALL
                .into_iter()
                .find(|&r| gadget.attachment(r) == a)
                .unwrap()
        };
        let base_roles: Vec<Role> = base_rot.at(x).iter().map(|&y| plan.role_of(x, y)).collect();
        let hub_roles: Vec<Role> = rot.at(hub).iter().map(|&a| role_at_attachment(a)).collect();
        let reversed: Vec<Role> = base_roles.iter().rev().copied().collect();
        let rot = if same_cyclic_order(&hub_roles, &reversed) {
            rot.clone()
        } else {
            rot.mirror()
        };
        debug_assert_eq!(closure.order(), hub + 1);
        for i in 0..hub {
            order[off + i] = rot
                .at(i)
                .iter()
                .map(|&j| {
                    if j == hub {
                        port(plan.neighbor_for(x, role_at_attachment(i)), x)
                    } else {
                        off + j
                    }
                })
                .collect();
        }
    }
    Some(RotationSystem::from_parts(order))
}

fn same_cyclic_order<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Image of an inflated-graph cycle under the projection to the base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleProjection {
    /// Base vertices visited, consecutive repeats collapsed (cyclically).
    pub walk: Vec<usize>,
    /// The cycle stays inside one gadget copy.
    pub degenerate: bool,
    /// The walk is a simple cycle of the base graph.
    pub simple: bool,
    /// Cycle edges inside gadget copies.
    pub internal_edges: usize,
    /// Cycle edges between copies.
    pub external_edges: usize,
}

impl CycleProjection {
    /// Gadget copies the cycle passes through, in walk order.
    pub fn copies(&self) -> &[usize] {
        &self.walk
    }
}

pub fn project_cycle(inflation: &Inflation, cycle: &[usize]) -> Result<CycleProjection, InflationError> {
    if !is_valid_cycle(&inflation.graph, cycle) {
        return Err(InflationError::InvalidCycle);
    }
    let image: Vec<usize> = cycle.iter().map(|&v| inflation.projection[v]).collect();
    let n = image.len();
    let external_edges = (0..n).filter(|&i| image[i] != image[(i + 1) % n]).count();
    let mut walk: Vec<usize> = Vec::new();
    for &b in &image {
        if walk.last() != Some(&b) {
            walk.push(b);
        }
    }
    while walk.len() > 1 && walk.first() == walk.last() {
        walk.pop();
    }
    let degenerate = walk.len() == 1;
    let mut distinct = walk.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let simple = !degenerate && walk.len() >= 3 && distinct.len() == walk.len();
    Ok(CycleProjection {
        walk,
        degenerate,
        simple,
        internal_edges: n - external_edges,
        external_edges,
    })
}
