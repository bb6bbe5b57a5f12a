//! Structural analysis of enumerable permutation groups.

pub mod classes;
pub mod iso;
pub mod predicates;
pub mod report;
pub mod structure;
pub(crate) mod subset;

pub use classes::{class_data, conjugacy_classes, power_map, ClassData, ConjugacyClass, PowerMap};
pub use iso::{are_isomorphic, fingerprint, Fingerprint};
pub use predicates::{
    all_order_conjugacy, class_count_of_order, is_oc_group, is_rational_group, odd_order_conjugacy,
};
pub use structure::{
    center, derived_series, derived_subgroup, is_solvable, exponent, is_nilpotent, is_normal, normal_closure, normal_subgroups,
    order_spectrum, order_spectrum_outside, p_core, quotient, sylow_subgroup, upper_central_series,
};
