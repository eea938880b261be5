//! Hamiltonicity, cycle spectra and cycle extendability.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`extendability_report`] and [`nonextendable_sets`].
pub const MAX_EXTENDABILITY_ORDER: usize = 24;

/// A cycle `v_0 v_1 .. v_{t-1} v_0` stored in canonical rotation: the smallest
/// vertex first, followed by the smaller of its two cycle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validate `seq` as a cycle of `g` and normalize it.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::InvalidParameters(format!(
                "a cycle needs at least 3 vertices, got {}",
                seq.len()
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &seq {
            g.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::InvalidParameters(format!("vertex {v} repeats on the cycle")));
            }
            seen.insert(v);
        }
        for i in 0..seq.len() {
            let (u, v) = (seq[i], seq[(i + 1) % seq.len()]);
            if !g.has_edge(u, v) {
                return Err(Error::InvalidParameters(format!("cycle uses non-edge {u}-{v}")));
            }
        }
        Ok(Self::canonical(seq))
    }

    pub(crate) fn canonical(mut seq: Vec<usize>) -> Self {
        let min_pos = (0..seq.len()).min_by_key(|&i| seq[i]).unwrap_or(0);
        seq.rotate_left(min_pos);
        if seq.len() > 2 && seq[seq.len() - 1] < seq[1] {
            seq[1..].reverse();
        }
        Cycle { vertices: seq }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// `v_i` with the index taken modulo the length.
    pub fn at(&self, i: isize) -> usize {
        let t = self.vertices.len() as isize;
        self.vertices[i.rem_euclid(t) as usize]
    }

    /// Whether `g` is a host for this cycle.
    pub fn lies_in(&self, g: &Graph) -> bool {
        Cycle::new(g, self.vertices.clone()).is_ok()
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub girth: Option<usize>,
    pub circumference: Option<usize>,
    pub achieved_lengths: BTreeSet<usize>,
    pub weakly_pancyclic: bool,
    pub pancyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendabilityReport {
    /// True vacuously when the graph has no cycle; `acyclic` flags that case.
    pub cycle_extendable: bool,
    pub fully_cycle_extendable: bool,
    pub every_vertex_on_triangle: bool,
    pub acyclic: bool,
    pub witness_nonextendable_cycle: Option<Cycle>,
}

/// Find a Hamiltonian cycle, deterministically.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Cycle> {
    hamiltonian_cycle_within(g, g.vertex_set()).map(Cycle::canonical)
}

/// Hamiltonian path of the whole graph, as a vertex sequence. A single vertex
/// counts as a trivial path; the empty graph has none.
pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    hamiltonian_path_within(g, g.vertex_set())
}

pub(crate) fn hamiltonian_path_within(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    match s.len() {
        0 => None,
        1 => Some(vec![s.first().unwrap()]),
        2 => {
            let (u, v) = (s.first().unwrap(), s.max_element().unwrap());
            g.has_edge(u, v).then(|| vec![u, v])
        }
        k => {
            // A Hamiltonian path of S is a Hamiltonian cycle of S plus a hub.
            if k >= crate::graph::MAX_ORDER {
                return hamiltonian_path_backtrack(g, s);
            }
            let n = g.order();
            let hub = n;
            let h = g.with_new_vertex(s).ok()?;
            let mut cyc = hamiltonian_cycle_within(&h, s.with(hub))?;
            let pos = cyc.iter().position(|&v| v == hub).unwrap();
            cyc.rotate_left(pos);
            cyc.remove(0);
            Some(cyc)
        }
    }
}

fn hamiltonian_path_backtrack(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    fn go(g: &Graph, s: VertexSet, path: &mut Vec<usize>, visited: VertexSet) -> bool {
        if visited == s {
            return true;
        }
        let cur = *path.last().unwrap();
        for w in g.neighbors(cur).intersection(s).difference(visited) {
            path.push(w);
            if go(g, s, path, visited.with(w)) {
                return true;
            }
            path.pop();
        }
        false
    }
    for start in s {
        let mut path = vec![start];
        if go(g, s, &mut path, VertexSet::singleton(start)) {
            return Some(path);
        }
    }
    None
}

/// Hamiltonian cycle of the induced subgraph on `s`, as a raw sequence.
pub(crate) fn hamiltonian_cycle_within(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    HamSearch::new(g, s)?.run()
}

struct HamSearch {
    all: u64,
    n: usize,
    adj: Vec<u64>,
    forced: Vec<u64>,
    start: usize,
    path: Vec<usize>,
}

impl HamSearch {
    /// Restrict to `s` and propagate forced edges. `None` when that alone
    /// rules a Hamiltonian cycle out.
    fn new(g: &Graph, s: VertexSet) -> Option<Self> {
        let n = s.len();
        if n < 3 {
            return None;
        }
        let all = s.bits();
        let mut adj = vec![0u64; g.order()];
        for v in s {
            adj[v] = g.neighbors(v).bits() & all;
        }
        let mut forced = vec![0u64; g.order()];
        loop {
            let mut changed = false;
            for v in s {
                let d = adj[v].count_ones();
                if d < 2 {
                    return None;
                }
                if d == 2 && forced[v] != adj[v] {
                    for u in VertexSet::from_bits(adj[v] & !forced[v]) {
                        forced[u] |= 1 << v;
                    }
                    forced[v] = adj[v];
                    changed = true;
                }
            }
            for v in s {
                let f = forced[v].count_ones();
                if f > 2 {
                    return None;
                }
                if f == 2 && adj[v] != forced[v] {
                    for u in VertexSet::from_bits(adj[v] & !forced[v]) {
                        adj[u] &= !(1 << v);
                    }
                    adj[v] = forced[v];
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let first = s.first().unwrap();
        let mut seen = 1u64 << first;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        if seen != all {
            return None;
        }
        let start = s.iter().min_by_key(|&v| (adj[v].count_ones(), v)).unwrap();
        Some(HamSearch { all, n, adj, forced, start, path: Vec::with_capacity(n) })
    }

    fn run(mut self) -> Option<Vec<usize>> {
        self.path.push(self.start);
        let start = self.start;
        if self.extend(start, None, 1u64 << start) {
            Some(self.path)
        } else {
            None
        }
    }

    fn extend(&mut self, cur: usize, prev: Option<usize>, visited: u64) -> bool {
        let prev_bit = prev.map_or(0, |p| 1u64 << p);
        let need = self.forced[cur] & !prev_bit;
        let start_bit = 1u64 << self.start;
        if self.path.len() == self.n {
            return self.adj[cur] & start_bit != 0 && need & !start_bit == 0;
        }
        let candidates = if need == 0 {
            self.adj[cur] & !visited
        } else if cur == self.start {
            // Both forced edges at the start get used; orient the cycle along the lower one.
            need & need.wrapping_neg()
        } else if need & visited != 0 {
            return false;
        } else {
            need
        };
        for w in VertexSet::from_bits(candidates) {
            let visited = visited | (1u64 << w);
            if !self.feasible(w, visited) {
                continue;
            }
            self.path.push(w);
            if self.extend(w, Some(cur), visited) {
                return true;
            }
            self.path.pop();
        }
        false
    }

    /// Every unvisited vertex keeps two usable neighbours and the unvisited
    /// part stays connected to the path end.
    fn feasible(&self, end: usize, visited: u64) -> bool {
        let unvisited = self.all & !visited;
        if unvisited == 0 {
            return true;
        }
        let usable = unvisited | (1u64 << end) | (1u64 << self.start);
        for u in VertexSet::from_bits(unvisited) {
            if (self.adj[u] & usable).count_ones() < 2 {
                return false;
            }
        }
        let mut seen = 1u64 << end;
        let mut frontier = seen;
        let within = unvisited | seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier) {
                next |= self.adj[v];
            }
            next &= within;
            frontier = next & !seen;
            seen |= next;
        }
        seen == within
    }
}

/// Whether `g` has a cycle of exactly `len` vertices; returns one if so.
pub fn cycle_of_length(g: &Graph, len: usize) -> Option<Cycle> {
    let n = g.order();
    if len < 3 || len > n {
        return None;
    }
    if len == n {
        return hamiltonian_cycle(g);
    }
    fn go(g: &Graph, allowed: u64, start: usize, len: usize, path: &mut Vec<usize>, visited: u64) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == len {
            return g.has_edge(cur, start);
        }
        let mut cand = g.neighbors(cur).bits() & allowed & !visited;
        if path.len() == len - 1 {
            cand &= g.neighbors(start).bits();
        }
        for w in VertexSet::from_bits(cand) {
            path.push(w);
            if go(g, allowed, start, len, path, visited | (1 << w)) {
                return true;
            }
            path.pop();
        }
        false
    }
    for start in g.vertices() {
        // Only vertices above `start`, so each cycle is found from its minimum.
        let allowed = g.vertex_set().bits() & !((2u64 << start).wrapping_sub(1));
        if (g.neighbors(start).bits() & allowed).count_ones() < 2 || (allowed.count_ones() as usize) < len - 1 {
            continue;
        }
        let mut path = vec![start];
        if go(g, allowed, start, len, &mut path, 1 << start) {
            return Some(Cycle::canonical(path));
        }
    }
    None
}

/// Length of a longest cycle, searching downward from `n`.
pub fn circumference(g: &Graph) -> Option<usize> {
    let bipartite = g.bipartition().is_some();
    (3..=g.order())
        .rev()
        .filter(|&l| !(bipartite && l % 2 == 1))
        .find(|&l| cycle_of_length(g, l).is_some())
}

pub fn cycle_spectrum(g: &Graph) -> CycleSpectrum {
    let n = g.order();
    let bipartite = g.bipartition().is_some();
    let achieved: BTreeSet<usize> = (3..=n)
        .filter(|&l| !(bipartite && l % 2 == 1))
        .filter(|&l| cycle_of_length(g, l).is_some())
        .collect();
    spectrum_from_lengths(n, achieved)
}

pub(crate) fn spectrum_from_lengths(n: usize, achieved: BTreeSet<usize>) -> CycleSpectrum {
    let girth = achieved.first().copied();
    let circumference = achieved.last().copied();
    let weakly_pancyclic = match (girth, circumference) {
        (Some(g), Some(c)) => achieved.len() == c - g + 1,
        _ => true,
    };
    let pancyclic = n >= 3 && girth == Some(3) && circumference == Some(n) && weakly_pancyclic;
    CycleSpectrum { girth, circumference, achieved_lengths: achieved, weakly_pancyclic, pancyclic }
}

/// Whether some cycle covers `V(c)` plus one more vertex, in any order.
pub fn is_extendable(g: &Graph, c: &Cycle) -> Result<bool> {
    Ok(extension(g, c)?.is_some())
}

/// A cycle on `V(c)` plus one off-cycle vertex, if one exists. Off-cycle
/// vertices are tried in ascending order.
pub fn extension(g: &Graph, c: &Cycle) -> Result<Option<Cycle>> {
    if !c.lies_in(g) {
        return Err(Error::Precondition("cycle does not lie in the graph".into()));
    }
    if c.len() == g.order() {
        return Err(Error::Precondition("a Hamiltonian cycle cannot be extended".into()));
    }
    let s = c.vertex_set();
    for v in g.vertex_set().difference(s) {
        if g.neighbors(v).intersection(s).len() < 2 {
            continue;
        }
        if let Some(seq) = hamiltonian_cycle_within(g, s.with(v)) {
            return Ok(Some(Cycle::canonical(seq)));
        }
    }
    Ok(None)
}

pub fn every_vertex_on_triangle(g: &Graph) -> bool {
    g.vertices().all(|v| {
        let nv = g.neighbors(v);
        nv.iter().any(|u| !g.neighbors(u).intersection(nv).is_empty())
    })
}

/// Table of Hamiltonian paths over vertex subsets: entry `mask` holds the set
/// of vertices `e` such that some path from `lowest(mask)` to `e` covers
/// exactly `mask`.
pub(crate) struct PathTable {
    rows: Vec<u32>,
    ends: Vec<u32>,
}

impl PathTable {
    pub(crate) fn build(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > MAX_EXTENDABILITY_ORDER {
            return Err(Error::UnsupportedSize {
                what: "cycle extendability",
                order: n,
                max: MAX_EXTENDABILITY_ORDER,
            });
        }
        let rows: Vec<u32> = g.vertices().map(|v| g.neighbors(v).bits() as u32).collect();
        let size = 1usize << n;
        let full = (size - 1) as u32;
        let mut ends = vec![0u32; size];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..size {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            let low = mask.trailing_zeros();
            let allowed = full & !(mask as u32) & !((2u32 << low).wrapping_sub(1));
            let mut reach = 0u32;
            for x in VertexSet::from_bits(e as u64) {
                reach |= rows[x] & allowed;
            }
            for w in VertexSet::from_bits(reach as u64) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
        Ok(PathTable { rows, ends })
    }

    pub(crate) fn order(&self) -> usize {
        self.rows.len()
    }

    /// Whether `⟨mask⟩` has a Hamiltonian cycle.
    pub(crate) fn is_hamiltonian(&self, mask: u64) -> bool {
        if mask.count_ones() < 3 {
            return false;
        }
        let low = mask.trailing_zeros() as usize;
        self.ends[mask as usize] & self.rows[low] != 0
    }

    /// A Hamiltonian cycle of `⟨mask⟩`, read back from the table.
    pub(crate) fn cycle(&self, mask: u64) -> Option<Cycle> {
        if !self.is_hamiltonian(mask) {
            return None;
        }
        let low = mask.trailing_zeros() as usize;
        let mut cur = (self.ends[mask as usize] & self.rows[low]).trailing_zeros() as usize;
        let mut m = mask as usize;
        let mut seq = vec![cur];
        while m != 1 << low {
            m ^= 1 << cur;
            cur = (self.ends[m] & self.rows[cur]).trailing_zeros() as usize;
            seq.push(cur);
        }
        Some(Cycle::canonical(seq))
    }

    /// Vertex sets of cycles that no cycle on one more vertex contains, in
    /// increasing mask order.
    pub(crate) fn nonextendable(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let n = self.order();
        let full = (1u64 << n) - 1;
        (0..1u64 << n).filter_map(move |mask| {
            if mask == full || !self.is_hamiltonian(mask) {
                return None;
            }
            let outside = full & !mask;
            let extendable = VertexSet::from_bits(outside).iter().any(|v| {
                (self.rows[v] as u64 & mask).count_ones() >= 2 && self.is_hamiltonian(mask | 1 << v)
            });
            (!extendable).then_some(VertexSet::from_bits(mask))
        })
    }

    #[cfg(test)]
    pub(crate) fn lengths(&self) -> BTreeSet<usize> {
        (0..1u64 << self.order())
            .filter(|&m| self.is_hamiltonian(m))
            .map(|m| m.count_ones() as usize)
            .collect()
    }
}

pub fn extendability_report(g: &Graph) -> Result<ExtendabilityReport> {
    let table = PathTable::build(g)?;
    let acyclic = (0..1u64 << g.order()).all(|m| !table.is_hamiltonian(m));
    let witness = table.nonextendable().next().and_then(|s| table.cycle(s.bits()));
    let cycle_extendable = witness.is_none();
    let tri = every_vertex_on_triangle(g);
    Ok(ExtendabilityReport {
        cycle_extendable,
        fully_cycle_extendable: cycle_extendable && tri,
        every_vertex_on_triangle: tri,
        acyclic,
        witness_nonextendable_cycle: witness,
    })
}

/// Vertex sets of all non-extendable cycles, in increasing bitmask order.
pub fn nonextendable_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(PathTable::build(g)?.nonextendable().collect())
}

/// Every cycle whose vertex set is exactly `s`, canonical and sorted.
pub fn cycles_on(g: &Graph, s: VertexSet) -> Result<Vec<Cycle>> {
    g.check_set(s)?;
    let mut out = Vec::new();
    let Some(start) = s.first() else { return Ok(out) };
    if s.len() < 3 {
        return Ok(out);
    }
    fn go(g: &Graph, s: VertexSet, start: usize, path: &mut Vec<usize>, visited: VertexSet, out: &mut Vec<Cycle>) {
        let cur = *path.last().unwrap();
        if visited == s {
            // Keep one orientation: second vertex below the last.
            if g.has_edge(cur, start) && path[1] < cur {
                out.push(Cycle { vertices: path.clone() });
            }
            return;
        }
        for w in g.neighbors(cur).intersection(s).difference(visited) {
            path.push(w);
            go(g, s, start, path, visited.with(w), out);
            path.pop();
        }
    }
    go(g, s, start, &mut vec![start], VertexSet::singleton(start), &mut out);
    out.sort();
    Ok(out)
}

/// All cycles of `g`, canonical and sorted. Exponential; for tests and small inputs.
pub fn all_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for start in g.vertices() {
        let allowed = g.vertex_set().bits() & !((2u64 << start).wrapping_sub(1));
        fn go(g: &Graph, allowed: u64, start: usize, path: &mut Vec<usize>, visited: u64, out: &mut Vec<Cycle>) {
            let cur = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(cur, start) && path[1] < cur {
                out.push(Cycle { vertices: path.clone() });
            }
            for w in VertexSet::from_bits(g.neighbors(cur).bits() & allowed & !visited) {
                path.push(w);
                go(g, allowed, start, path, visited | 1 << w, out);
                path.pop();
            }
        }
        go(g, allowed, start, &mut vec![start], 1 << start, &mut out);
    }
    out.sort();
    out
}
