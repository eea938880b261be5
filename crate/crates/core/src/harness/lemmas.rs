//! Predicates on non-extendable cycles and on neighbourhoods of locally
//! isometric graphs. Each check binds concrete vertices, asserts one
//! conclusion and records a violation with its bindings when it fails, so a
//! violation can be replayed on its own.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::cycles::{circumference, is_extendable, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::local::is_locally_isometric;

/// Neighbourhoods larger than this are not searched for the enclosed-set check.
pub const MAX_ENCLOSED_SET_DEGREE: usize = 10;
/// Largest order for the degree-2 deletion check (it computes circumferences).
pub const MAX_DELETION_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Two attachments sharing an off-cycle neighbour are not consecutive.
    CommonNeighbourNotConsecutive,
    /// For such attachments `v_i, v_j`: `v_{i+1} ≁ v_{j+1}` and `v_{i−1} ≁ v_{j−1}`.
    SuccessorsNonadjacent,
    /// If `v_{i−1} ~ v_{i+1}` then `v_{j±1} ≁ v_i`.
    ChordBlocksNeighbours,
    /// If `j = i+2`, `v_{i+1}` has no two consecutive neighbours on `v_{i+2} .. v_i`.
    MiddleVertexNoAdjacentPair,
    /// Degree-6 cycle vertex with three chords: an outer chord end seeing
    /// `x, v_1, v_{t−1}` sits next to the cycle neighbour.
    ThreeChordEndpoint,
    /// Same setting: a middle chord end seeing `x, v_1, v_{t−1}` is a true twin.
    ThreeChordTwin,
    /// With no true twins of degree Δ, each neighbour of a degree-Δ vertex has
    /// two neighbours inside that neighbourhood.
    TwoNeighboursInFullNeighbourhood,
    /// A neighbour missing `deg − 2` others forces a universal vertex.
    UniversalNeighbour,
    /// A vertex that sees all of `S` but nothing else of `N(S)` has `N(w) = S`.
    EnclosedNeighbourhood,
    /// Deleting a degree-2 vertex keeps local isometry and drops the
    /// circumference by at most one.
    DegreeTwoDeletion,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::CommonNeighbourNotConsecutive,
        LemmaId::SuccessorsNonadjacent,
        LemmaId::ChordBlocksNeighbours,
        LemmaId::MiddleVertexNoAdjacentPair,
        LemmaId::ThreeChordEndpoint,
        LemmaId::ThreeChordTwin,
        LemmaId::TwoNeighboursInFullNeighbourhood,
        LemmaId::UniversalNeighbour,
        LemmaId::EnclosedNeighbourhood,
        LemmaId::DegreeTwoDeletion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::CommonNeighbourNotConsecutive => "common-neighbour-not-consecutive",
            LemmaId::SuccessorsNonadjacent => "successors-nonadjacent",
            LemmaId::ChordBlocksNeighbours => "chord-blocks-neighbours",
            LemmaId::MiddleVertexNoAdjacentPair => "middle-vertex-no-adjacent-pair",
            LemmaId::ThreeChordEndpoint => "three-chord-endpoint",
            LemmaId::ThreeChordTwin => "three-chord-twin",
            LemmaId::TwoNeighboursInFullNeighbourhood => "two-neighbours-in-full-neighbourhood",
            LemmaId::UniversalNeighbour => "universal-neighbour",
            LemmaId::EnclosedNeighbourhood => "enclosed-neighbourhood",
            LemmaId::DegreeTwoDeletion => "degree-two-deletion",
        }
    }
}

impl Serialize for LemmaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub checked: u64,
    pub skipped: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: LemmaId,
    pub graph6: String,
    pub cycle: Option<Cycle>,
    /// Vertex bindings (`x`, `v`, `w`, ...) and cycle positions (`i`, `j`, ...).
    pub bindings: BTreeMap<&'static str, usize>,
    pub set: Option<Vec<usize>>,
    pub expected: String,
    pub observed: String,
}

impl LemmaViolation {
    /// Re-evaluate this instance; `true` when it still fails.
    pub fn replay(&self, cfg: &LemmaConfig) -> Result<bool> {
        let g = graph6::decode(&self.graph6)?;
        let b = |k: &str| {
            self.bindings
                .get(k)
                .copied()
                .ok_or_else(|| Error::Precondition(format!("violation lacks binding `{k}`")))
        };
        let cycle = || {
            self.cycle
                .as_ref()
                .ok_or_else(|| Error::Precondition("violation lacks its cycle".into()))
        };
        let failed = match self.lemma {
            LemmaId::CommonNeighbourNotConsecutive
            | LemmaId::SuccessorsNonadjacent
            | LemmaId::ChordBlocksNeighbours
            | LemmaId::MiddleVertexNoAdjacentPair => {
                attachment_check(self.lemma, &g, cycle()?, b("i")?, b("j")?, cfg).is_some_and(|r| r.is_err())
            }
            LemmaId::ThreeChordEndpoint | LemmaId::ThreeChordTwin => {
                let c = cycle()?;
                let view = CycleView::new(c, b("p")?);
                three_chord_checks(&g, &view)
                    .into_iter()
                    .any(|(id, which, r)| id == self.lemma && Some(which) == self.bindings.get("which").copied() && r.is_err())
            }
            LemmaId::TwoNeighboursInFullNeighbourhood => two_neighbours(&g, b("v")?, b("x")?).is_err(),
            LemmaId::UniversalNeighbour => {
                let s: VertexSet = self.set.iter().flatten().copied().collect();
                universal_neighbour(&g, b("v")?, b("x")?, s).is_err()
            }
            LemmaId::EnclosedNeighbourhood => {
                let s: VertexSet = self.set.iter().flatten().copied().collect();
                enclosed(&g, b("w")?, s).is_some_and(|r| r.is_err())
            }
            LemmaId::DegreeTwoDeletion => deletion(&g, b("u")?).is_err(),
        };
        Ok(failed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub violations: Vec<LemmaViolation>,
    pub coverage: BTreeMap<LemmaId, LemmaTally>,
}

impl LemmaOutcome {
    pub fn merge(&mut self, other: LemmaOutcome) {
        self.violations.extend(other.violations);
        for (id, t) in other.coverage {
            let e = self.coverage.entry(id).or_default();
            e.checked += t.checked;
            e.skipped += t.skipped;
        }
    }

    pub fn checked(&self, id: LemmaId) -> u64 {
        self.coverage.get(&id).map_or(0, |t| t.checked)
    }

    pub fn skipped(&self, id: LemmaId) -> u64 {
        self.coverage.get(&id).map_or(0, |t| t.skipped)
    }

    fn tally(&mut self, id: LemmaId) -> &mut LemmaTally {
        self.coverage.entry(id).or_default()
    }
}

/// Options for the lemma suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaConfig {
    /// Invert the verdict of the successor non-adjacency check. Exists only
    /// so the suite can prove it reports violations.
    pub invert_successor_check: bool,
}

type Verdict = std::result::Result<(), (String, String)>;

fn verdict(ok: bool, expected: impl FnOnce() -> String, observed: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err((expected(), observed()))
    }
}

/// Instance of a per-attachment check at positions `(i, j)`, or `None` when
/// its antecedent does not hold.
fn attachment_check(id: LemmaId, g: &Graph, c: &Cycle, i: usize, j: usize, cfg: &LemmaConfig) -> Option<Verdict> {
    let t = c.len();
    let (ii, jj) = (i as isize, j as isize);
    let v = |k: isize| c.at(k);
    match id {
        LemmaId::CommonNeighbourNotConsecutive => {
            let ok = (j + 1) % t != i && (i + 1) % t != j;
            Some(verdict(ok, || "j ≠ i ± 1".into(), || format!("positions {i} and {j} are consecutive")))
        }
        LemmaId::SuccessorsNonadjacent => {
            let next = g.has_edge(v(ii + 1), v(jj + 1));
            let prev = g.has_edge(v(ii - 1), v(jj - 1));
            let ok = !next && !prev;
            Some(verdict(ok != cfg.invert_successor_check, || "v_{i+1} ≁ v_{j+1} and v_{i-1} ≁ v_{j-1}".into(), || {
                format!("successors adjacent: {next}, predecessors adjacent: {prev}")
            }))
        }
        LemmaId::ChordBlocksNeighbours => {
            if !g.has_edge(v(ii - 1), v(ii + 1)) {
                return None;
            }
            let a = g.has_edge(v(jj - 1), v(ii));
            let b = g.has_edge(v(jj + 1), v(ii));
            Some(verdict(!a && !b, || "v_{j-1} ≁ v_i and v_{j+1} ≁ v_i".into(), || {
                format!("v_{{j-1}} ~ v_i: {a}, v_{{j+1}} ~ v_i: {b}")
            }))
        }
        LemmaId::MiddleVertexNoAdjacentPair => {
            if (i + 2) % t != j {
                return None;
            }
            let mid = v(ii + 1);
            // Consecutive pairs (v_k, v_{k+1}) on the path v_{i+2} .. v_i.
            let hit = (2..t as isize).find(|&d| g.has_edge(mid, v(ii + d)) && g.has_edge(mid, v(ii + d + 1)));
            Some(verdict(hit.is_none(), || "no two consecutive neighbours of v_{i+1} on v_{i+2}..v_i".into(), || {
                let k = hit.unwrap();
                format!("v_{{i+1}} ~ {} and {}", v(ii + k), v(ii + k + 1))
            }))
        }
        _ => unreachable!("not an attachment check"),
    }
}

/// The cycle read from position `p` onward, so that `v_0` is `c[p]`.
struct CycleView<'a> {
    c: &'a Cycle,
    p: usize,
}

impl<'a> CycleView<'a> {
    fn new(c: &'a Cycle, p: usize) -> Self {
        CycleView { c, p }
    }

    fn v(&self, k: isize) -> usize {
        self.c.at(self.p as isize + k)
    }

    fn pos(&self, x: usize) -> Option<usize> {
        let t = self.c.len();
        self.c.vertices().iter().position(|&y| y == x).map(|q| (q + t - self.p) % t)
    }
}

/// Checks at `v_0` with exactly one off-cycle neighbour `x` and three chords
/// `v_i, v_j, v_k`. Each entry is (lemma, statement index, verdict); only
/// statements whose antecedent holds are returned.
fn three_chord_checks(g: &Graph, view: &CycleView) -> Vec<(LemmaId, usize, Verdict)> {
    let t = view.c.len();
    let v0 = view.v(0);
    let mut out = Vec::new();
    if g.degree(v0) != 6 || t < 6 {
        return out;
    }
    let on_cycle = view.c.vertex_set();
    let off: Vec<usize> = g.neighbors(v0).difference(on_cycle).iter().collect();
    if off.len() != 1 {
        return out;
    }
    let x = off[0];
    let mut chords: Vec<usize> = g
        .neighbors(v0)
        .intersection(on_cycle)
        .iter()
        .filter_map(|y| view.pos(y))
        .filter(|&q| q != 1 && q != t - 1)
        .collect();
    chords.sort_unstable();
    let [i, j, k] = chords[..] else { return out };
    let (v1, vt1) = (view.v(1), view.v(-1));
    let sees_all = |q: usize| {
        let y = view.v(q as isize);
        g.has_edge(y, x) && g.has_edge(y, v1) && g.has_edge(y, vt1)
    };
    if sees_all(k) {
        out.push((LemmaId::ThreeChordEndpoint, 0, verdict(k + 1 == t - 1, || "k + 1 = t − 1".into(), || {
            format!("k = {k}, t = {t}")
        })));
    }
    if sees_all(i) {
        out.push((LemmaId::ThreeChordEndpoint, 1, verdict(i == 2, || "i = 2".into(), || format!("i = {i}"))));
    }
    if sees_all(j) {
        let vj = view.v(j as isize);
        let ok = g.degree(vj) == 6 && g.closed_neighbors(vj) == g.closed_neighbors(v0);
        out.push((LemmaId::ThreeChordTwin, 2, verdict(ok, || "v_0 and v_j are true twins of degree 6".into(), || {
            format!("deg(v_j) = {}, closed neighbourhoods equal: {}", g.degree(vj), g.closed_neighbors(vj) == g.closed_neighbors(v0))
        })));
    }
    out
}

fn two_neighbours(g: &Graph, v: usize, x: usize) -> Verdict {
    let inside = g.neighbors(x).intersection(g.neighbors(v)).len();
    verdict(inside >= 2, || "x has two neighbours in N(v)".into(), || format!("x has {inside}"))
}

fn universal_neighbour(g: &Graph, v: usize, x: usize, s: VertexSet) -> Verdict {
    let nv = g.neighbors(v);
    let rest = nv.without(x).difference(s);
    let Some(y) = rest.first().filter(|_| rest.len() == 1) else {
        return Err(("exactly one vertex outside S ∪ {x}".into(), format!("{} vertices", rest.len())));
    };
    let universal = nv.without(y).is_subset(g.neighbors(y));
    let twins_needed = g.degree(v) == g.max_degree();
    let twins = g.closed_neighbors(y) == g.closed_neighbors(v);
    verdict(universal && (!twins_needed || twins), || {
        if twins_needed {
            format!("{y} universal in N(v) and a true twin of v")
        } else {
            format!("{y} universal in N(v)")
        }
    }, || format!("universal: {universal}, true twin: {twins}"))
}

/// `None` when `w` does not meet the hypothesis for `s`.
fn enclosed(g: &Graph, w: usize, s: VertexSet) -> Option<Verdict> {
    if s.is_empty() || !s.is_subset(g.neighbors(w)) {
        return None;
    }
    let outer = g.neighbors_of_set(s).difference(s).without(w);
    if !g.neighbors(w).intersection(outer).is_empty() {
        return None;
    }
    Some(verdict(g.neighbors(w) == s, || "N(w) = S".into(), || format!("N(w) = {:?}", g.neighbors(w))))
}

fn deletion(g: &Graph, u: usize) -> Verdict {
    let h = g.induced_subgraph(g.vertex_set().without(u)).expect("vertex in range").graph;
    let li = is_locally_isometric(&h);
    let cg = circumference(g);
    // An acyclic remainder still contains the edge between u's neighbours.
    let ch = circumference(&h).unwrap_or(2);
    let bound = cg.is_none_or(|c| c <= ch + 1);
    verdict(li && bound, || "G − u locally isometric and c(G) ≤ c(G − u) + 1".into(), || {
        format!("locally isometric: {li}, c(G) = {cg:?}, c(G − u) = {ch}")
    })
}

struct Recorder<'a> {
    g6: String,
    cycle: Option<&'a Cycle>,
    out: LemmaOutcome,
}

impl<'a> Recorder<'a> {
    fn new(g: &Graph, cycle: Option<&'a Cycle>) -> Self {
        let g6 = graph6::encode(g).unwrap_or_default();
        Recorder { g6, cycle, out: LemmaOutcome::default() }
    }

    fn skip(&mut self, id: LemmaId) {
        self.out.tally(id).skipped += 1;
    }

    fn record(&mut self, id: LemmaId, v: Verdict, bindings: &[(&'static str, usize)], set: Option<VertexSet>) {
        self.out.tally(id).checked += 1;
        if let Err((expected, observed)) = v {
            self.out.violations.push(LemmaViolation {
                lemma: id,
                graph6: self.g6.clone(),
                cycle: self.cycle.cloned(),
                bindings: bindings.iter().copied().collect(),
                set: set.map(|s| s.iter().collect()),
                expected,
                observed,
            });
        }
    }
}

/// Checks tied to a non-extendable cycle `c`.
pub fn cycle_lemmas(g: &Graph, c: &Cycle, cfg: &LemmaConfig) -> Result<LemmaOutcome> {
    if is_extendable(g, c)? {
        return Err(Error::Precondition("the cycle is extendable".into()));
    }
    let mut rec = Recorder::new(g, Some(c));
    let t = c.len();
    let on_cycle = c.vertex_set();
    for x in g.vertex_set().difference(on_cycle) {
        let attach: Vec<usize> = (0..t).filter(|&q| g.has_edge(x, c.vertices()[q])).collect();
        for (a, &i) in attach.iter().enumerate() {
            for &j in &attach[a + 1..] {
                let b = [("x", x), ("i", i), ("j", j)];
                for id in [LemmaId::CommonNeighbourNotConsecutive, LemmaId::SuccessorsNonadjacent] {
                    let v = attachment_check(id, g, c, i, j, cfg).expect("unconditional");
                    rec.record(id, v, &b, None);
                }
                for (p, q) in [(i, j), (j, i)] {
                    let b = [("x", x), ("i", p), ("j", q)];
                    for id in [LemmaId::ChordBlocksNeighbours, LemmaId::MiddleVertexNoAdjacentPair] {
                        if let Some(v) = attachment_check(id, g, c, p, q, cfg) {
                            rec.record(id, v, &b, None);
                        }
                    }
                }
            }
        }
    }
    if g.max_degree() == 6 && is_locally_isometric(g) {
        for p in 0..t {
            for (id, which, v) in three_chord_checks(g, &CycleView::new(c, p)) {
                rec.record(id, v, &[("p", p), ("which", which)], None);
            }
        }
    } else {
        rec.skip(LemmaId::ThreeChordEndpoint);
        rec.skip(LemmaId::ThreeChordTwin);
    }
    Ok(rec.out)
}

/// Graph-wide neighbourhood checks; each is skipped when the graph is not
/// locally isometric or misses the check's other hypotheses.
pub fn neighbourhood_lemmas(g: &Graph) -> LemmaOutcome {
    let mut rec = Recorder::new(g, None);
    let li = is_locally_isometric(g);
    let delta = g.max_degree();
    let twin_free = !g.twin_pairs().true_twins.iter().any(|p| p.degree == delta);
    if li && g.order() >= 3 && twin_free {
        for v in g.vertices().filter(|&v| g.degree(v) == delta) {
            for x in g.neighbors(v) {
                rec.record(LemmaId::TwoNeighboursInFullNeighbourhood, two_neighbours(g, v, x), &[("v", v), ("x", x)], None);
            }
        }
    } else {
        rec.skip(LemmaId::TwoNeighboursInFullNeighbourhood);
    }
    if li {
        for v in g.vertices().filter(|&v| g.degree(v) >= 2) {
            let k = g.degree(v);
            for x in g.neighbors(v) {
                let pool = g.neighbors(v).without(x).difference(g.neighbors(x));
                for s in subsets_of_size(pool, k - 2) {
                    rec.record(LemmaId::UniversalNeighbour, universal_neighbour(g, v, x, s), &[("v", v), ("x", x)], Some(s));
                }
            }
        }
        for w in g.vertices() {
            let nw = g.neighbors(w);
            if nw.len() > MAX_ENCLOSED_SET_DEGREE {
                rec.skip(LemmaId::EnclosedNeighbourhood);
                continue;
            }
            let members: Vec<usize> = nw.iter().collect();
            for bits in 1u32..1 << members.len() {
                let s: VertexSet = members.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, &m)| m).collect();
                if let Some(v) = enclosed(g, w, s) {
                    rec.record(LemmaId::EnclosedNeighbourhood, v, &[("w", w)], Some(s));
                }
            }
        }
    } else {
        rec.skip(LemmaId::UniversalNeighbour);
        rec.skip(LemmaId::EnclosedNeighbourhood);
    }
    rec.out
}

fn subsets_of_size(pool: VertexSet, k: usize) -> Vec<VertexSet> {
    fn go(items: &[usize], k: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        if items.len() < k {
            return;
        }
        go(&items[1..], k - 1, cur.with(items[0]), out);
        go(&items[1..], k, cur, out);
    }
    let items: Vec<usize> = pool.iter().collect();
    let mut out = Vec::new();
    go(&items, k, VertexSet::EMPTY, &mut out);
    out
}

/// Cycle checks on `c` plus the graph-wide neighbourhood checks.
pub fn lemma_suite(g: &Graph, c: &Cycle) -> Result<LemmaOutcome> {
    lemma_suite_with(g, c, &LemmaConfig::default())
}

pub fn lemma_suite_with(g: &Graph, c: &Cycle, cfg: &LemmaConfig) -> Result<LemmaOutcome> {
    let mut out = cycle_lemmas(g, c, cfg)?;
    out.merge(neighbourhood_lemmas(g));
    Ok(out)
}

/// For each degree-2 vertex `u` of a locally isometric graph: `G − u` is
/// locally isometric and `c(G) ≤ c(G − u) + 1`. Skipped (one skip recorded)
/// when the graph is not locally isometric, has no degree-2 vertex, or
/// exceeds [`MAX_DELETION_ORDER`].
pub fn degree2_deletion_check(g: &Graph) -> LemmaOutcome {
    let mut rec = Recorder::new(g, None);
    let targets: Vec<usize> = g.vertices().filter(|&u| g.degree(u) == 2).collect();
    if targets.is_empty() || g.order() > MAX_DELETION_ORDER || !is_locally_isometric(g) {
        rec.skip(LemmaId::DegreeTwoDeletion);
        return rec.out;
    }
    for u in targets {
        rec.record(LemmaId::DegreeTwoDeletion, deletion(g, u), &[("u", u)], None);
    }
    rec.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{cycles_on, extendability_report, nonextendable_sets};
    use crate::families::{doubly_shuttered, named, singly_shuttered};
    use crate::iso::are_isomorphic;

    fn s5_cycle() -> (Graph, Cycle) {
        // K_2 + K3bar: hubs a, b and independent p, q, r; the cycle a p b q.
        let g = singly_shuttered(5).unwrap();
        let hubs: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
        let low: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
        let c = Cycle::new(&g, vec![hubs[0], low[0], hubs[1], low[1]]).unwrap();
        (g, c)
    }

    #[test]
    fn s5_cycle_has_no_violations() {
        let (g, c) = s5_cycle();
        let out = lemma_suite(&g, &c).unwrap();
        assert!(out.violations.is_empty(), "{:?}", out.violations);
        assert_eq!(out.checked(LemmaId::CommonNeighbourNotConsecutive), 1);
        assert_eq!(out.checked(LemmaId::SuccessorsNonadjacent), 1);
        // j = i + 2 in both directions on a 4-cycle.
        assert_eq!(out.checked(LemmaId::MiddleVertexNoAdjacentPair), 2);
        assert_eq!(out.skipped(LemmaId::ThreeChordEndpoint), 1);
    }

    #[test]
    fn inverted_successor_check_reports_once() {
        let (g, c) = s5_cycle();
        let cfg = LemmaConfig { invert_successor_check: true };
        let out = lemma_suite_with(&g, &c, &cfg).unwrap();
        assert_eq!(out.violations.len(), 1);
        let v = &out.violations[0];
        assert_eq!(v.lemma, LemmaId::SuccessorsNonadjacent);
        let x = v.bindings["x"];
        assert!(g.degree(x) == 2 && !c.vertex_set().contains(x));
        assert!(v.replay(&cfg).unwrap());
        assert!(!v.replay(&LemmaConfig::default()).unwrap());
    }

    #[test]
    fn extendable_cycle_is_rejected() {
        let k4 = Graph::complete(4);
        let c = Cycle::new(&k4, vec![0, 1, 2]).unwrap();
        assert!(matches!(lemma_suite(&k4, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn s8_witness_has_no_violations() {
        let g = singly_shuttered(8).unwrap();
        let w = extendability_report(&g).unwrap().witness_nonextendable_cycle.unwrap();
        let out = lemma_suite(&g, &w).unwrap();
        assert!(out.violations.is_empty());
        for s in nonextendable_sets(&g).unwrap() {
            for c in cycles_on(&g, s).unwrap() {
                assert!(lemma_suite(&g, &c).unwrap().violations.is_empty());
            }
        }
    }

    #[test]
    fn deletion_examples() {
        let d10 = doubly_shuttered(10).unwrap();
        let out = degree2_deletion_check(&d10);
        assert!(out.violations.is_empty());
        assert_eq!(out.checked(LemmaId::DegreeTwoDeletion), 4);
        let h = d10.remove_vertex(9).unwrap().graph;
        assert!(are_isomorphic(&h, &singly_shuttered(9).unwrap()).unwrap());
        assert_eq!(circumference(&d10), Some(8));
        assert_eq!(circumference(&h), Some(8));

        let s6 = singly_shuttered(6).unwrap();
        let out = degree2_deletion_check(&s6);
        assert!(out.violations.is_empty() && out.checked(LemmaId::DegreeTwoDeletion) == 2);

        let out = degree2_deletion_check(&Graph::cycle(6));
        assert_eq!((out.checked(LemmaId::DegreeTwoDeletion), out.skipped(LemmaId::DegreeTwoDeletion)), (0, 1));

        // K_3: the remainder K_2 counts as circumference 2.
        assert!(degree2_deletion_check(&Graph::complete(3)).violations.is_empty());
    }

    #[test]
    fn neighbourhood_checks_on_families() {
        for g in [named("k24_plus_k1").unwrap(), doubly_shuttered(10).unwrap(), singly_shuttered(9).unwrap()] {
            let out = neighbourhood_lemmas(&g);
            assert!(out.violations.is_empty());
            assert!(out.checked(LemmaId::UniversalNeighbour) > 0);
            assert!(out.checked(LemmaId::EnclosedNeighbourhood) > 0);
        }
        // K_{2,4}+K_1 has a single degree-6 vertex, so no twins of degree Δ.
        let k = named("k24_plus_k1").unwrap();
        assert_eq!(neighbourhood_lemmas(&k).checked(LemmaId::TwoNeighboursInFullNeighbourhood), 6);
        let c5 = neighbourhood_lemmas(&Graph::cycle(5));
        assert_eq!(c5.skipped(LemmaId::UniversalNeighbour), 1);
    }

    #[test]
    fn checks_do_fire_on_graphs_outside_their_hypotheses() {
        // Star K_{1,3}: the centre's neighbourhood is independent. The
        // enclosed-set conclusion fails for S = {leaf}, which shows the
        // local isometry hypothesis is doing real work.
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(enclosed(&star, 0, VertexSet::singleton(1)), Some(Err(_))));
        assert!(neighbourhood_lemmas(&star).violations.is_empty());
    }

    #[test]
    fn subsets() {
        let pool = VertexSet::from_iter([1, 3, 5, 7]);
        assert_eq!(subsets_of_size(pool, 2).len(), 6);
        assert_eq!(subsets_of_size(pool, 0), vec![VertexSet::EMPTY]);
        assert!(subsets_of_size(pool, 5).is_empty());
    }
}
