//! Computational tools for small finite groups given as permutation groups.
//!
//! The crate builds the groups that appear around the classification of
//! groups in which elements of equal order outside the center are conjugate
//! (OC-groups), computes their conjugacy classes, power maps and character
//! tables, and runs catalog-wide verification campaigns.
//!
//! Permutations compose left to right: `(p * q)(x) = q(p(x))`, and
//! conjugation is `x^g = g⁻¹ x g`. Points are 1-based at every public
//! boundary.

pub mod analysis;
pub mod bsgs;
pub mod chartab;
pub mod construct;
mod error;
pub mod group;
pub mod lemma24;
pub mod perm;
pub mod suite;

pub use analysis::report::GroupReport;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
