//! Neighbourhood predicates: local diameter bounds, local connectivity,
//! traceability and Hamiltonicity.

use serde::Serialize;

use crate::cycles::{hamiltonian_cycle_within, hamiltonian_path_within};
use crate::error::Result;
use crate::graph::{Diameter, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalProfile {
    /// `diam⟨N(v)⟩` per vertex; an empty neighbourhood counts as infinite.
    pub neighborhood_diameters: Vec<Diameter>,
    /// Smallest `k` with `diam⟨N(v)⟩ ≤ k` for every `v`.
    pub min_k: Diameter,
    pub locally_connected: bool,
    pub locally_traceable: bool,
    pub locally_hamiltonian: bool,
    pub locally_isometric: bool,
}

/// `⟨N(v)⟩`, relabeled to `0..deg(v)` in increasing order of original id.
pub fn local_subgraph(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(g.induced_subgraph(g.neighbors(v))?.graph)
}

/// `max_v diam⟨N(v)⟩`, i.e. the smallest local diameter bound.
pub fn local_diameter_bound(g: &Graph) -> Diameter {
    g.vertices()
        .map(|v| g.diameter_of(g.neighbors(v)))
        .max()
        .unwrap_or(Diameter::Finite(0))
}

/// Every neighbourhood induces a subgraph of diameter at most 2.
pub fn is_locally_isometric(g: &Graph) -> bool {
    g.vertices().all(|v| g.diameter_of(g.neighbors(v)).at_most(2))
}

pub fn local_profile(g: &Graph) -> LocalProfile {
    let neighborhood_diameters: Vec<Diameter> =
        g.vertices().map(|v| g.diameter_of(g.neighbors(v))).collect();
    let min_k = neighborhood_diameters.iter().copied().max().unwrap_or(Diameter::Finite(0));
    let locally_connected = min_k.is_finite();
    let locally_traceable =
        locally_connected && g.vertices().all(|v| hamiltonian_path_within(g, g.neighbors(v)).is_some());
    let locally_hamiltonian =
        locally_traceable && g.vertices().all(|v| hamiltonian_cycle_within(g, g.neighbors(v)).is_some());
    LocalProfile {
        neighborhood_diameters,
        min_k,
        locally_connected,
        locally_traceable,
        locally_hamiltonian,
        locally_isometric: min_k.at_most(2),
    }
}
