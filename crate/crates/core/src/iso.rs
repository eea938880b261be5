//! Canonical certificates and isomorphism testing for small graphs.
//!
//! The canonical form is the lexicographically largest adjacency code over
//! the leaves of an individualization-refinement search tree. Refinement is
//! the usual equitable-partition refinement; the tree branches on the first
//! non-singleton cell. Branches on a vertex that is a twin of an already
//! explored sibling are skipped: swapping two twins is an automorphism that
//! fixes the current partition, so both subtrees yield the same leaf codes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the public certificate and isomorphism API.
pub const MAX_CERTIFICATE_ORDER: usize = 12;

/// Canonical byte encoding of a graph up to isomorphism.
///
/// Layout: one byte holding `n`, then the upper triangle of the canonically
/// relabeled adjacency matrix in row-major order (`(0,1), (0,2), .., (1,2), ..`),
/// packed most-significant bit first and zero-padded to a byte boundary.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::parse(0, e.to_string()))?;
        let Some(&n) = bytes.first() else {
            return Err(Error::parse(0, "empty certificate"));
        };
        let n = n as usize;
        if bytes.len() != 1 + (n * n.saturating_sub(1) / 2).div_ceil(8) {
            return Err(Error::parse(0, "certificate length does not match its order"));
        }
        Ok(Certificate(bytes))
    }

    /// The canonical representative graph this certificate encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.to_hex())
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > MAX_CERTIFICATE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical certificate",
            order: g.order(),
            max: MAX_CERTIFICATE_ORDER,
        });
    }
    Ok(())
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    check_cap(g)?;
    Ok(canonical_form(g).0)
}

/// Canonical labeling: `perm[v]` is the canonical position of vertex `v`.
/// Relabeling by it yields [`Certificate::to_graph`].
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_cap(g)?;
    Ok(canonical_form(g).1)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_cap(g)?;
    check_cap(h)?;
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_profile().sequence != h.degree_profile().sequence
    {
        return Ok(false);
    }
    Ok(canonical_form(g).0 == canonical_form(h).0)
}

/// Uncapped canonical form; callers are responsible for keeping the search small.
pub(crate) fn canonical_form(g: &Graph) -> (Certificate, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (Certificate(vec![0]), Vec::new());
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(g, vec![g.vertex_set().bits()], &mut best);
    let (code, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (Certificate(code), perm)
}

fn search(g: &Graph, mut cells: Vec<u64>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in VertexSet::from_bits(cell) {
        if tried.iter().any(|&w| g.are_twins(v, w)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1u64 << v);
        next.push(cell & !(1u64 << v));
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

/// Refine an ordered partition until it is equitable. Split cells keep their
/// position and are ordered by ascending neighbour count into the splitter,
/// so the result depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let rows = g.rows();
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in VertexSet::from_bits(cell) {
                    let k = (rows[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(key, _)| *key == k) {
                        Some((_, bits)) => *bits |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(c..=c, groups.into_iter().map(|(_, bits)| bits));
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u8; 1 + bits.div_ceil(8)];
    code[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(order[i]);
        for &w in &order[i + 1..] {
            if row.contains(w) {
                code[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    code
}
