//! Locally isometric graphs: cycle structure, shuttered highrises, exhaustive
//! search and the reductions used for hardness of Hamiltonicity.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod cycles;
pub mod iso;
pub mod local;
pub mod reduction;

pub use error::{Error, Result};
pub use graph::{Diameter, Graph, VertexSet, MAX_ORDER};
pub use iso::{are_isomorphic, canonical_certificate, Certificate, MAX_CERTIFICATE_ORDER};
pub use cycles::{
    cycle_spectrum, extendability_report, hamiltonian_cycle, is_extendable, Cycle, CycleSpectrum,
    ExtendabilityReport,
};
pub use local::{is_locally_isometric, local_profile, local_subgraph, LocalProfile};
pub use families::{
    doubly_shuttered, highrise, named, recognize_exception, shuttered_highrise, singly_shuttered,
    ExceptionClass, ExceptionRecognizer, FamilyParams, Named,
};
pub use enumeration::{connected_graph_stream, ClassRep, GraphStream};
pub use reduction::{
    gadget_transform, lift_cycle, one_factorization, project_cycle, verify_reduction_instance,
    OneFactorization, ReducedInstance, Variant,
};
pub use harness::{
    degree2_deletion_check, lemma_suite, run_campaign, CampaignId, CampaignOptions, CampaignReport, Corpus, LemmaId,
    LemmaOutcome, LemmaViolation, OrderRange,
};
