//! Checks that run over a corpus: conclusion predicates tied to
//! non-extendable cycles, and campaigns that classify every graph meeting a
//! set of hypotheses.

pub mod campaign;
pub mod lemmas;

pub use lemmas::{
    cycle_lemmas, degree2_deletion_check, lemma_suite, lemma_suite_with, neighbourhood_lemmas, LemmaConfig,
    LemmaId, LemmaOutcome, LemmaTally, LemmaViolation,
};
pub use campaign::{
    run_campaign, CampaignId, CampaignOptions, CampaignReport, CampaignViolation, Corpus, ExceptionRecord, LemmaSummary,
    OrderRange,
};
