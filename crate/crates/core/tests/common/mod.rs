//! Brute-force oracles shared by the integration tests. They use nothing but
//! adjacency queries, so they are independent of the search code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lociso::{Graph, VertexSet};

/// Heap's algorithm over all permutations of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    if !f(&p) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if !f(&p) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Whether some bijection maps the edges of `a` onto those of `b`.
pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges: Vec<(usize, usize)> = a.edges().collect();
    let mut found = false;
    for_each_permutation(a.order(), |p| {
        found = edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v]));
        !found
    });
    found
}

/// Whether the vertices of `s` can be ordered into a cycle of `g`.
pub fn subset_has_cycle(g: &Graph, s: &[usize]) -> bool {
    let k = s.len();
    if k < 3 {
        return false;
    }
    // Fix s[0] first and permute the rest.
    let rest = &s[1..];
    let mut found = false;
    for_each_permutation(k - 1, |p| {
        let seq: Vec<usize> = std::iter::once(s[0]).chain(p.iter().map(|&i| rest[i])).collect();
        found = (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k]));
        !found
    });
    found
}

/// Cycle lengths of `g`, by testing every vertex subset.
pub fn cycle_lengths_by_subsets(g: &Graph) -> BTreeSet<usize> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for bits in 0u64..1 << n {
        let s: Vec<usize> = VertexSet::from_bits(bits).iter().collect();
        if !out.contains(&s.len()) && subset_has_cycle(g, &s) {
            out.insert(s.len());
        }
    }
    out
}

/// Whether `g` has a Hamiltonian cycle, by trying every vertex order.
pub fn hamiltonian_by_permutation(g: &Graph) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    subset_has_cycle(g, &all)
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

fn graph_of(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
    Graph::new(n, &edges).unwrap()
}

/// Connected graphs on `n` vertices, one per class, found by scanning every
/// edge subset and marking the whole permutation orbit of each new one.
pub fn connected_classes_by_orbits(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "orbit marking needs 2^(n choose 2) bits");
    let pairs = pair_index(n);
    let m = pairs.len();
    let mut index = vec![vec![0usize; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = b;
        index[j][i] = b;
    }
    let mut seen = vec![false; 1usize << m];
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        if seen[mask as usize] {
            continue;
        }
        for_each_permutation(n, |p| {
            let mut image = 0u64;
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    image |= 1 << index[p[i]][p[j]];
                }
            }
            seen[image as usize] = true;
            true
        });
        let g = graph_of(n, &pairs, mask);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
