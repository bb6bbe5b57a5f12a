use std::collections::BTreeSet;

use serde::Serialize;

use super::classes::class_data;
use super::predicates::{all_order_conjugacy, is_oc_group, is_rational_group, odd_order_conjugacy};
use super::structure::{center, is_nilpotent};
use crate::error::Result;
use crate::group::PermGroup;

/// Per-group analysis record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub label: String,
    pub order: u128,
    pub center_order: u128,
    pub nilpotent: bool,
    pub abelian: bool,
    pub class_count: usize,
    /// Class sizes in class order.
    pub class_sizes: Vec<usize>,
    /// Representative orders in class order.
    pub class_orders: Vec<u64>,
    pub order_spectrum: BTreeSet<u64>,
    pub rational: bool,
    pub oc: bool,
    pub odd_order_conjugate: bool,
    pub all_order_conjugate: bool,
}

impl GroupReport {
    pub fn analyze(label: impl Into<String>, g: &PermGroup) -> Result<Self> {
        let data = class_data(g)?;
        Ok(GroupReport {
            label: label.into(),
            order: g.order(),
            center_order: center(g)?.order(),
            nilpotent: is_nilpotent(g)?,
            abelian: g.is_abelian(),
            class_count: data.len(),
            class_sizes: data.classes.iter().map(|c| c.size).collect(),
            class_orders: data.classes.iter().map(|c| c.rep_order).collect(),
            order_spectrum: data.classes.iter().map(|c| c.rep_order).collect(),
            rational: is_rational_group(g)?,
            oc: is_oc_group(g)?,
            odd_order_conjugate: odd_order_conjugacy(g)?,
            all_order_conjugate: all_order_conjugacy(g)?,
        })
    }

    /// Sorted (size, order) multiset of the classes.
    pub fn class_multiset(&self) -> Vec<(usize, u64)> {
        let mut v: Vec<(usize, u64)> =
            self.class_sizes.iter().copied().zip(self.class_orders.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// Non-trivial OC-group: OC with `1 < Z(G) < G`.
    pub fn is_nontrivial_oc(&self) -> bool {
        self.oc && self.center_order > 1 && self.center_order < self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::builtin;

    #[test]
    fn report_invariants() {
        for name in ["s3", "q8", "w", "cyc:6", "gl23"] {
            let r = GroupReport::analyze(name, &builtin(name).unwrap()).unwrap();
            let from_classes: BTreeSet<u64> = r.class_orders.iter().copied().collect();
            assert_eq!(r.order_spectrum, from_classes);
            if r.abelian {
                assert_eq!(r.class_count as u128, r.order);
            }
        }
    }

    #[test]
    fn q8_report() {
        let r = GroupReport::analyze("q8", &builtin("q8").unwrap()).unwrap();
        assert_eq!((r.order, r.center_order, r.class_count), (8, 2, 5));
        assert!(r.nilpotent && !r.abelian && r.rational && !r.oc);
        assert_eq!(r.order_spectrum, BTreeSet::from([1, 2, 4]));
    }
}
