//! Connected graphs of small order, one per isomorphism class.
//!
//! Generation is by vertex extension: every graph on `n` vertices arises from
//! a graph on `n − 1` vertices by adding a vertex with some neighbour set. All
//! classes on `n − 1` vertices (connected or not) are extended by every
//! neighbour subset and deduplicated by certificate. Parents are sharded
//! across the rayon pool; each shard keeps a private seen-set and the shards
//! are merged into one map ordered by certificate, so output does not depend
//! on the number of workers.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{canonical_form, Certificate};

/// Largest order the built-in generator handles.
pub const MAX_STREAM_ORDER: usize = 8;

/// A certified graph: canonical representative plus its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub certificate: Certificate,
    pub graph: Graph,
}

/// Every isomorphism class on `n` vertices, connected or not, ordered by certificate.
pub fn all_classes(n: usize) -> Result<Vec<ClassRep>> {
    check_order(n)?;
    let mut level = vec![certify(&Graph::empty(0))];
    for _ in 0..n {
        level = extend_level(&level);
    }
    Ok(level)
}

/// Connected classes on `n` vertices, ordered by certificate.
pub fn connected_classes(n: usize) -> Result<Vec<ClassRep>> {
    if n == 0 {
        return Err(Error::InvalidParameters("order must be at least 1".into()));
    }
    Ok(all_classes(n)?.into_iter().filter(|c| c.graph.is_connected()).collect())
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_STREAM_ORDER {
        return Err(Error::UnsupportedSize {
            what: "built-in enumeration (read larger orders from a graph6 file)",
            order: n,
            max: MAX_STREAM_ORDER,
        });
    }
    Ok(())
}

fn certify(g: &Graph) -> ClassRep {
    let (certificate, _) = canonical_form(g);
    let graph = certificate.to_graph();
    ClassRep { certificate, graph }
}

fn extend_level(parents: &[ClassRep]) -> Vec<ClassRep> {
    let n = parents.first().map_or(0, |p| p.graph.order());
    let shards: Vec<HashMap<Certificate, Graph>> = parents
        .par_chunks(parents.len().div_ceil(rayon::current_num_threads() * 4).max(1))
        .map(|chunk| {
            let mut seen = HashMap::new();
            for p in chunk {
                for bits in 0..1u64 << n {
                    let child = p.graph.with_new_vertex(VertexSet::from_bits(bits)).expect("order stays small");
                    let (cert, _) = canonical_form(&child);
                    seen.entry(cert).or_insert_with_key(|c| c.to_graph());
                }
            }
            seen
        })
        .collect();
    let mut merged = BTreeMap::new();
    for shard in shards {
        merged.extend(shard);
    }
    merged.into_iter().map(|(certificate, graph)| ClassRep { certificate, graph }).collect()
}

/// Connected graphs on `n` vertices, one per isomorphism class, in
/// certificate order.
#[derive(Clone, Debug)]
pub struct GraphStream {
    order: usize,
    classes: std::vec::IntoIter<ClassRep>,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Yield certificates alongside graphs.
    pub fn certified(self) -> impl Iterator<Item = ClassRep> {
        self.classes
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.classes.next().map(|c| c.graph)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.classes.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

pub fn connected_graph_stream(n: usize) -> Result<GraphStream> {
    Ok(GraphStream { order: n, classes: connected_classes(n)?.into_iter() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graph_stream(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = (0..=6).map(|n| all_classes(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn errors() {
        assert!(matches!(connected_graph_stream(9), Err(Error::UnsupportedSize { .. })));
        assert!(connected_graph_stream(0).is_err());
    }

    #[test]
    fn stream_members_are_connected_and_distinct() {
        let reps: Vec<ClassRep> = connected_graph_stream(6).unwrap().certified().collect();
        let mut seen = HashSet::new();
        for r in &reps {
            assert!(r.graph.is_connected());
            assert!(seen.insert(r.certificate.clone()));
            assert_eq!(canonical_form(&r.graph).0, r.certificate);
            let line = graph6::encode(&r.graph).unwrap();
            assert_eq!(graph6::decode(&line).unwrap(), r.graph);
        }
        assert!(reps.windows(2).all(|w| w[0].certificate < w[1].certificate));
    }

    #[test]
    fn order_is_independent_of_pool_size() {
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let a: Vec<_> = single.install(|| connected_classes(6).unwrap());
        let b = connected_classes(6).unwrap();
        assert_eq!(a, b);
    }
}
