//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so adjacency tests,
//! neighbourhood intersections and induced-subgraph work are all word
//! operations. Every construction here returns a fresh value; "deleting" a
//! vertex is an induced subgraph with a relabeling map.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can have.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertex ids `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Shortest-path diameter; `Infinite` for disconnected or empty graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }

    pub fn at_most(self, k: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= k)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A simple undirected graph with dense vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Build a graph from an edge list. Repeated edges collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "graph",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Self::from_rows(rows))
    }

    /// Wrap adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        debug_assert!(rows.iter().enumerate().all(|(u, &r)| r >> u & 1 == 0
            && VertexSet(r).iter().all(|v| v < rows.len() && rows[v] >> u & 1 == 1)));
        let edge_count = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { rows, edge_count }
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        Self::from_rows(vec![0; n])
    }

    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let all = VertexSet::full(n).bits();
        Self::from_rows((0..n).map(|v| all & !(1 << v)).collect())
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    /// `K_{a,b}` with the `a`-side on ids `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::new(a + b, &edges).expect("bipartite edges are valid")
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.rows.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u] >> v & 1 == 1
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v] | 1 << v)
    }

    /// `N(S)`: union of the open neighbourhoods of the members of `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            VertexSet(self.rows[u] & !(2u64 << u).wrapping_sub(1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertex_set()).first() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
        }
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reachable_within(0, self.vertex_set()) == self.vertex_set()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reachable_within(v, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// Diameter of the subgraph induced by `s`, computed without building it.
    pub fn diameter_of(&self, s: VertexSet) -> Diameter {
        let Some(first) = s.first() else {
            return Diameter::Infinite;
        };
        if self.reachable_within(first, s) != s {
            return Diameter::Infinite;
        }
        let mut best = 0;
        for v in s {
            let mut seen = 1u64 << v;
            let mut frontier = seen;
            let mut depth = 0;
            while seen != s.bits() {
                let mut next = 0;
                for w in VertexSet(frontier) {
                    next |= self.rows[w];
                }
                frontier = next & s.bits() & !seen;
                seen |= frontier;
                depth += 1;
            }
            best = best.max(depth);
        }
        Diameter::Finite(best)
    }

    pub fn diameter(&self) -> Diameter {
        self.diameter_of(self.vertex_set())
    }

    /// The subgraph induced by `s`; new vertex `i` is the `i`-th smallest member.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let map: Vec<usize> = s.iter().collect();
        let rows = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(old, w))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_rows(rows),
            map,
        })
    }

    /// `G - v` together with its relabeling map.
    pub fn remove_vertex(&self, v: usize) -> Result<InducedSubgraph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertex_set().without(v))
    }

    /// Rename vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n || perm.iter().copied().collect::<VertexSet>() != self.vertex_set() {
            return Err(Error::Precondition(format!(
                "relabeling is not a permutation of 0..{n}"
            )));
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set().bits();
        Graph::from_rows(
            self.rows
                .iter()
                .enumerate()
                .map(|(v, r)| !r & all & !(1 << v))
                .collect(),
        )
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        let n = shift + other.order();
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "disjoint union",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << shift));
        Ok(Graph::from_rows(rows))
    }

    /// Add one vertex adjacent to exactly `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        self.check_set(nbrs)?;
        let n = self.order();
        if n == MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "graph",
                order: n + 1,
                max: MAX_ORDER,
            });
        }
        let mut rows = self.rows.clone();
        for v in nbrs {
            rows[v] |= 1 << n;
        }
        rows.push(nbrs.bits());
        Ok(Graph::from_rows(rows))
    }

    /// Join `G + H`: disjoint union plus every edge between the two sides.
    /// Vertices of `self` keep their ids; those of `other` are shifted by `n(self)`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let a = self.order();
        let union = self.disjoint_union(other)?;
        let left = VertexSet::full(a).bits();
        let right = union.vertex_set().bits() & !left;
        let rows = union
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| if v < a { r | right } else { r | left })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    /// Strong product `G ⊠ H` with `id((u, v)) = u * n(H) + v`.
    pub fn strong_product(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.order(), other.order());
        let n = a * b;
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "strong product",
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut rows = vec![0u64; n];
        for u in 0..a {
            let row_u = self.closed_neighbors(u);
            for v in 0..b {
                let row_v = other.closed_neighbors(v);
                let id = u * b + v;
                for x in row_u {
                    for y in row_v {
                        let other_id = x * b + y;
                        if other_id != id {
                            rows[id] |= 1 << other_id;
                        }
                    }
                }
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// All unordered true-twin (`N[u] = N[v]`) and false-twin (`N(u) = N(v)`) pairs.
    pub fn twin_pairs(&self) -> TwinReport {
        let mut report = TwinReport::default();
        for u in self.vertices() {
            for v in u + 1..self.order() {
                let pair = TwinPair {
                    u,
                    v,
                    degree: self.degree(u),
                };
                if self.has_edge(u, v) {
                    if self.closed_neighbors(u) == self.closed_neighbors(v) {
                        report.true_twins.push(pair);
                    }
                } else if self.rows[u] == self.rows[v] {
                    report.false_twins.push(pair);
                }
            }
        }
        report
    }

    /// Whether `u` and `v` have the same neighbours apart from each other.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        let mask = !(1u64 << u | 1u64 << v);
        self.rows[u] & mask == self.rows[v] & mask
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sequence: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let degree_two = self.vertices().filter(|&v| self.degree(v) == 2).collect();
        sequence.sort_unstable();
        DegreeProfile {
            min: sequence.first().copied().unwrap_or(0),
            max: sequence.last().copied().unwrap_or(0),
            sequence,
            degree_two,
        }
    }

    /// A proper 2-colouring as `(side of the smallest vertex of each component, rest)`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![None::<bool>; self.order()];
        let mut stack = Vec::new();
        for root in self.vertices() {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            stack.push(root);
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = self.vertices().filter(|&v| colour[v] == Some(false)).collect();
        let right = self.vertices().filter(|&v| colour[v] == Some(true)).collect();
        Some((left, right))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Result of [`Graph::induced_subgraph`]: `map[new] = old`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

impl InducedSubgraph {
    /// New id of an original vertex, if it was kept.
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.map.binary_search(&old).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwinReport {
    pub true_twins: Vec<TwinPair>,
    pub false_twins: Vec<TwinPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    /// Ascending.
    pub sequence: Vec<usize>,
    pub degree_two: Vec<usize>,
}
