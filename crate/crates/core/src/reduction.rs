//! Vertex-to-triangle gadget reductions from cubic bipartite graphs.
//!
//! Each source vertex becomes a triangle on layers 1, 2, 3. For `u_i` with
//! 1-factor partners `v_j` (first factor), `v_k` (second) and `v_l` (third):
//!
//! * [`Variant::DiameterThree`]: `u_i^1 ~ v_j^1, v_k^1, v_l^1, v_j^2, v_l^2` and
//!   `u_i^2 ~ v_j^2, v_k^2, v_l^2, v_k^1, v_l^1`. Maximum degree 7, every
//!   neighbourhood of diameter at most 3.
//! * [`Variant::Isometric`]: `u_i^1` and `u_i^2` both join all six of
//!   `v_{j,k,l}^{1,2}`. Maximum degree 8, locally isometric.
//!
//! Layer-3 vertices keep degree 2, so every Hamiltonian cycle of the output
//! runs through each triangle as `x^1 x^3 x^2`; reading the layer-3 vertices
//! in order recovers a Hamiltonian cycle of the source.
//!
//! Ids: `u_i^a` is `3(i − 1) + (a − 1)` and `v_i^a` is `3p + 3(i − 1) + (a − 1)`,
//! where `u_1 .. u_p` and `v_1 .. v_p` list each side in increasing source id.
//! Planarity of the input is not required or checked.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cycles::{hamiltonian_cycle, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph, VertexSet};
use crate::iso::canonical_form;
use crate::local::local_diameter_bound;

/// Largest output order for which [`verify_reduction_instance`] runs the
/// Hamiltonicity checks.
pub const MAX_HAMILTONICITY_ORDER: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// Maximum degree 7, local diameter bound 3 (CLI name `g1`).
    #[serde(rename = "g1")]
    DiameterThree,
    /// Maximum degree 8, locally isometric (CLI name `g2`).
    #[serde(rename = "g2")]
    Isometric,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::DiameterThree, Variant::Isometric];

    pub fn id(self) -> &'static str {
        match self {
            Variant::DiameterThree => "g1",
            Variant::Isometric => "g2",
        }
    }

    pub fn max_degree(self) -> usize {
        match self {
            Variant::DiameterThree => 7,
            Variant::Isometric => 8,
        }
    }

    pub fn local_bound(self) -> usize {
        match self {
            Variant::DiameterThree => 3,
            Variant::Isometric => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g1" => Ok(Variant::DiameterThree),
            "g2" => Ok(Variant::Isometric),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Three disjoint perfect matchings covering the edges, each stored as
/// `(u, v)` pairs with `u` on the first side, sorted by `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneFactorization {
    pub factors: [Vec<(usize, usize)>; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    U,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GadgetLabel {
    pub side: Side,
    /// 1-based position on its side.
    pub index: usize,
    /// 1, 2 or 3.
    pub layer: usize,
}

#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub variant: Variant,
    pub graph: Graph,
    /// Label of each output vertex, indexed by id.
    pub labels: Vec<GadgetLabel>,
    pub factorization: OneFactorization,
    pub source: Graph,
    /// Source ids of `u_1 .. u_p` and `v_1 .. v_p`.
    pub u_side: Vec<usize>,
    pub v_side: Vec<usize>,
}

impl ReducedInstance {
    pub fn p(&self) -> usize {
        self.u_side.len()
    }

    pub fn id_of(&self, label: GadgetLabel) -> usize {
        let base = match label.side {
            Side::U => 0,
            Side::V => 3 * self.p(),
        };
        base + 3 * (label.index - 1) + (label.layer - 1)
    }

    /// Output id of source vertex `x` on `layer`.
    fn gadget(&self, x: usize, layer: usize) -> usize {
        let (side, pos) = match self.u_side.iter().position(|&u| u == x) {
            Some(i) => (Side::U, i),
            None => (Side::V, self.v_side.iter().position(|&v| v == x).expect("source vertex")),
        };
        self.id_of(GadgetLabel { side, index: pos + 1, layer })
    }

    /// Source vertex that output vertex `id` replaces.
    fn source_of(&self, id: usize) -> usize {
        let l = self.labels[id];
        match l.side {
            Side::U => self.u_side[l.index - 1],
            Side::V => self.v_side[l.index - 1],
        }
    }

    /// One line per output vertex: `side index layer id`.
    pub fn label_map_text(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(id, l)| format!("{:?} {} {} {}\n", l.side, l.index, l.layer, id))
            .collect()
    }
}

fn check_parts(g: &Graph, parts: (VertexSet, VertexSet)) -> Result<()> {
    let (a, b) = parts;
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.intersection(b).is_empty() || a.union(b) != g.vertex_set() {
        return Err(Error::Precondition("parts must partition the vertex set".into()));
    }
    if a.len() != b.len() {
        return Err(Error::Precondition("parts must have equal size".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::Precondition(format!("vertex {v} has degree {}, expected 3", g.degree(v))));
    }
    for v in a {
        if !g.neighbors(v).is_subset(b) {
            return Err(Error::Precondition(format!("vertex {v} has a neighbour on its own side")));
        }
    }
    Ok(())
}

/// Perfect matching from `left` into the columns of `adj` by augmenting
/// paths, trying neighbours in ascending order.
fn perfect_matching(left: &[usize], adj: &[u64]) -> Option<Vec<(usize, usize)>> {
    fn augment(u: usize, adj: &[u64], seen: &mut u64, owner: &mut [Option<usize>]) -> bool {
        for v in VertexSet::from_bits(adj[u] & !*seen) {
            *seen |= 1 << v;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; adj.len()];
    for &u in left {
        let mut seen = 0;
        if !augment(u, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut m: Vec<(usize, usize)> = owner.iter().enumerate().filter_map(|(v, o)| o.map(|u| (u, v))).collect();
    m.sort_unstable();
    Some(m)
}

pub fn one_factorization(g: &Graph, parts: (VertexSet, VertexSet)) -> Result<OneFactorization> {
    check_parts(g, parts)?;
    let left: Vec<usize> = parts.0.iter().collect();
    let mut adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v).bits()).collect();
    let mut factors: [Vec<(usize, usize)>; 3] = Default::default();
    for f in factors.iter_mut() {
        *f = perfect_matching(&left, &adj)
            .ok_or_else(|| Error::Invariant("regular bipartite graph without a perfect matching".into()))?;
        for &(u, v) in f.iter() {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }
    Ok(OneFactorization { factors })
}

pub fn gadget_transform(g: &Graph, parts: (VertexSet, VertexSet), variant: Variant) -> Result<ReducedInstance> {
    let factorization = one_factorization(g, parts)?;
    let u_side: Vec<usize> = parts.0.iter().collect();
    let v_side: Vec<usize> = parts.1.iter().collect();
    let p = u_side.len();
    let mut labels = Vec::with_capacity(6 * p);
    for side in [Side::U, Side::V] {
        for index in 1..=p {
            for layer in 1..=3 {
                labels.push(GadgetLabel { side, index, layer });
            }
        }
    }
    let mut inst = ReducedInstance {
        variant,
        graph: Graph::empty(0),
        labels,
        factorization,
        source: g.clone(),
        u_side,
        v_side,
    };
    let mut edges = Vec::with_capacity(if variant == Variant::DiameterThree { 16 * p } else { 18 * p });
    for &x in inst.u_side.iter().chain(&inst.v_side) {
        let (a, b, c) = (inst.gadget(x, 1), inst.gadget(x, 2), inst.gadget(x, 3));
        edges.extend([(a, b), (a, c), (b, c)]);
    }
    let partner = |f: usize, u: usize| -> usize {
        inst.factorization.factors[f].iter().find(|&&(a, _)| a == u).expect("perfect matching").1
    };
    for &u in &inst.u_side {
        let (j, k, l) = (partner(0, u), partner(1, u), partner(2, u));
        let (u1, u2) = (inst.gadget(u, 1), inst.gadget(u, 2));
        let v = |x: usize, layer: usize| inst.gadget(x, layer);
        match variant {
            Variant::DiameterThree => {
                for t in [v(j, 1), v(k, 1), v(l, 1), v(j, 2), v(l, 2)] {
                    edges.push((u1, t));
                }
                for t in [v(j, 2), v(k, 2), v(l, 2), v(k, 1), v(l, 1)] {
                    edges.push((u2, t));
                }
            }
            Variant::Isometric => {
                for x in [j, k, l] {
                    for layer in [1, 2] {
                        edges.push((u1, v(x, layer)));
                        edges.push((u2, v(x, layer)));
                    }
                }
            }
        }
    }
    inst.graph = Graph::new(6 * p, &edges)?;
    Ok(inst)
}

/// Replace each source vertex by its triangle: `u^2 u^3 u^1` for `U`
/// vertices and `v^1 v^3 v^2` for `V` vertices, starting from a `U` vertex.
pub fn lift_cycle(c: &Cycle, inst: &ReducedInstance) -> Result<Cycle> {
    if c.len() != inst.source.order() || !c.lies_in(&inst.source) {
        return Err(Error::Precondition("expected a Hamiltonian cycle of the source".into()));
    }
    let mut seq: Vec<usize> = c.vertices().to_vec();
    let first_u = seq.iter().position(|x| inst.u_side.contains(x)).expect("cycle meets U");
    seq.rotate_left(first_u);
    let mut out = Vec::with_capacity(3 * seq.len());
    for &x in &seq {
        let layers = if inst.u_side.contains(&x) { [2, 3, 1] } else { [1, 3, 2] };
        out.extend(layers.map(|a| inst.gadget(x, a)));
    }
    Cycle::new(&inst.graph, out).map_err(|e| Error::Invariant(format!("lifted cycle is invalid: {e}")))
}

/// Read the layer-3 vertices of a Hamiltonian cycle of the output in order.
pub fn project_cycle(c: &Cycle, inst: &ReducedInstance) -> Result<Cycle> {
    if c.len() != inst.graph.order() || !c.lies_in(&inst.graph) {
        return Err(Error::Precondition("expected a Hamiltonian cycle of the reduced graph".into()));
    }
    let seq: Vec<usize> = c
        .vertices()
        .iter()
        .filter(|&&id| inst.labels[id].layer == 3)
        .map(|&id| inst.source_of(id))
        .collect();
    Cycle::new(&inst.source, seq).map_err(|e| Error::Invariant(format!("projected cycle is invalid: {e}")))
}

/// Whether `⟨N(x)⟩` has a spanning subgraph that is `K_{1,5}` with one edge
/// subdivided: a centre `c` adjacent to all but one vertex `b`, which is
/// adjacent to some other neighbour of `c`.
fn has_spanning_subdivided_star(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    nx.len() == 7
        && nx.iter().any(|c| {
            let rest = nx.without(c);
            rest.iter().any(|b| {
                let others = rest.without(b);
                others.is_subset(g.neighbors(c)) && !g.neighbors(b).intersection(others).is_empty()
            })
        })
}

fn has_spanning_star(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    nx.len() == 8 && nx.iter().any(|c| nx.without(c).is_subset(g.neighbors(c)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantCheck {
    pub variant: Variant,
    pub order: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub min_k: Diameter,
    pub degree_ok: bool,
    pub local_bound_ok: bool,
    pub layer3_degree_ok: bool,
    pub star_ok: bool,
    /// The Hamiltonicity fields are absent when the output exceeds the budget.
    pub ham_source: Option<bool>,
    pub ham_reduced: Option<bool>,
    pub equivalence_ok: Option<bool>,
    /// A source Hamiltonian cycle lifted to a valid cycle of the output.
    pub lift_ok: Option<bool>,
    /// A solver cycle of the output projected to a valid cycle of the source.
    pub project_ok: Option<bool>,
}

impl VariantCheck {
    /// All structural checks passed and, where run, Hamiltonicity agreed.
    pub fn all_ok(&self) -> bool {
        self.degree_ok
            && self.local_bound_ok
            && self.layer3_degree_ok
            && self.star_ok
            && self.equivalence_ok != Some(false)
            && self.lift_ok != Some(false)
            && self.project_ok != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub source_order: usize,
    pub hamiltonicity_checked: bool,
    pub variants: Vec<VariantCheck>,
}

impl ReductionReport {
    pub fn all_ok(&self) -> bool {
        self.variants.iter().all(VariantCheck::all_ok)
    }
}

pub fn check_instance(inst: &ReducedInstance, source_cycle: Option<&Option<Cycle>>) -> Result<VariantCheck> {
    let g = &inst.graph;
    let variant = inst.variant;
    let min_k = local_diameter_bound(g);
    let layer3 = g.vertices().filter(|&v| inst.labels[v].layer == 3);
    let layer3_degree_ok = layer3.clone().all(|v| g.degree(v) == 2);
    let star_ok = g.vertices().filter(|&v| inst.labels[v].layer != 3).all(|v| match variant {
        Variant::DiameterThree => has_spanning_subdivided_star(g, v),
        Variant::Isometric => has_spanning_star(g, v),
    });
    let local_bound_ok = match variant {
        Variant::DiameterThree => min_k.at_most(3),
        Variant::Isometric => min_k == Diameter::Finite(2),
    };
    let mut check = VariantCheck {
        variant,
        order: g.order(),
        edge_count: g.edge_count(),
        max_degree: g.max_degree(),
        min_k,
        degree_ok: g.max_degree() == variant.max_degree() && g.order() == 3 * inst.source.order(),
        local_bound_ok,
        layer3_degree_ok,
        star_ok,
        ham_source: None,
        ham_reduced: None,
        equivalence_ok: None,
        lift_ok: None,
        project_ok: None,
    };
    if let Some(source_cycle) = source_cycle {
        let reduced_cycle = hamiltonian_cycle(g);
        check.ham_source = Some(source_cycle.is_some());
        check.ham_reduced = Some(reduced_cycle.is_some());
        check.equivalence_ok = Some(source_cycle.is_some() == reduced_cycle.is_some());
        check.lift_ok = source_cycle.as_ref().map(|c| lift_cycle(c, inst).is_ok());
        check.project_ok = reduced_cycle.as_ref().map(|c| project_cycle(c, inst).is_ok());
    }
    Ok(check)
}

/// Build both variants and check their structure and, within budget,
/// Hamiltonicity equivalence in both directions.
pub fn verify_reduction_instance(g: &Graph, parts: (VertexSet, VertexSet)) -> Result<ReductionReport> {
    let hamiltonicity_checked = 3 * g.order() <= MAX_HAMILTONICITY_ORDER;
    let source_cycle = hamiltonicity_checked.then(|| hamiltonian_cycle(g));
    let mut variants = Vec::new();
    for variant in Variant::ALL {
        let inst = gadget_transform(g, parts, variant)?;
        variants.push(check_instance(&inst, source_cycle.as_ref())?);
    }
    Ok(ReductionReport { source_order: g.order(), hamiltonicity_checked, variants })
}

/// Bipartition of a graph, for inputs given without one.
pub fn parts_of(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    g.bipartition().ok_or_else(|| Error::Precondition("graph is not bipartite".into()))
}

/// All cubic bipartite graphs on `n` vertices up to isomorphism, connected or
/// not, ordered by certificate. Built from 3-regular biadjacency matrices
/// with rows in nondecreasing order.
pub fn cubic_bipartite_graphs(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 || !(6..=14).contains(&n) {
        return Err(Error::InvalidParameters(format!("cubic bipartite corpus covers even 6 ≤ n ≤ 14, got {n}")));
    }
    let p = n / 2;
    let rows: Vec<u64> = (0..1u64 << p).filter(|r| r.count_ones() == 3).collect();
    let mut found = std::collections::BTreeMap::new();
    fn go(
        p: usize,
        rows: &[u64],
        from: usize,
        chosen: &mut Vec<u64>,
        col: &mut [u8],
        found: &mut std::collections::BTreeMap<crate::iso::Certificate, Graph>,
    ) {
        if chosen.len() == p {
            let mut edges = Vec::new();
            for (i, r) in chosen.iter().enumerate() {
                for j in VertexSet::from_bits(*r) {
                    edges.push((i, p + j));
                }
            }
            let g = Graph::new(2 * p, &edges).expect("small graph");
            let (cert, _) = canonical_form(&g);
            found.entry(cert).or_insert_with_key(|c| c.to_graph());
            return;
        }
        // Every column still short of 3 needs enough rows left to fill it.
        let left = (p - chosen.len()) as u8;
        if col.iter().any(|&c| c + left < 3) {
            return;
        }
        for (idx, &r) in rows.iter().enumerate().skip(from) {
            if VertexSet::from_bits(r).iter().any(|j| col[j] == 3) {
                continue;
            }
            for j in VertexSet::from_bits(r) {
                col[j] += 1;
            }
            chosen.push(r);
            go(p, rows, idx, chosen, col, found);
            chosen.pop();
            for j in VertexSet::from_bits(r) {
                col[j] -= 1;
            }
        }
    }
    go(p, &rows, 0, &mut Vec::new(), &mut vec![0; p], &mut found);
    Ok(found.into_values().collect())
}
