//! Verification campaigns over catalogs of small groups.

mod campaigns;
mod catalog;
mod report;
mod subgroups;

pub use campaigns::{
    conjugation_consistency, paper_fact_suite, quotient_closure_check, run_lemma_2_5,
    run_quotient_closure, run_syskin, run_theorem_a, run_theorem_b_targets,
};
pub use catalog::{Catalog, CatalogEntry, NAMED, PRODUCTS};
pub use report::{Check, Counterexample, VerificationReport, SCOPE};
pub use subgroups::{
    conjugacy_class_of_subgroups, enumerate_subgroups, subgroup_sets, SUBGROUP_SCAN_CAP,
};
