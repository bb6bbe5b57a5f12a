//! The class-level predicates: rational, OC, and same-order conjugacy.

use std::collections::BTreeMap;

use super::classes::{class_data, power_map};
use crate::error::Result;
use crate::group::PermGroup;

/// `g^m` is conjugate to `g` for every `g` and every `m` coprime to `o(g)`.
pub fn is_rational_group(g: &PermGroup) -> Result<bool> {
    let pm = power_map(g)?;
    Ok((0..pm.entries.len()).all(|i| pm.is_rational_class(i)))
}

/// Number of classes per element order, optionally restricted to
/// non-central classes.
fn classes_per_order(g: &PermGroup, noncentral_only: bool) -> Result<BTreeMap<u64, usize>> {
    let data = class_data(g)?;
    let mut counts = BTreeMap::new();
    for c in &data.classes {
        if noncentral_only && c.size == 1 {
            continue;
        }
        *counts.entry(c.rep_order).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Any two non-central elements of equal order are conjugate.
pub fn is_oc_group(g: &PermGroup) -> Result<bool> {
    Ok(classes_per_order(g, true)?.values().all(|&n| n <= 1))
}

/// Elements of equal odd order are conjugate.
pub fn odd_order_conjugacy(g: &PermGroup) -> Result<bool> {
    Ok(classes_per_order(g, false)?.iter().all(|(&d, &n)| d % 2 == 0 || n <= 1))
}

/// Elements of equal order are conjugate.
pub fn all_order_conjugacy(g: &PermGroup) -> Result<bool> {
    Ok(classes_per_order(g, false)?.values().all(|&n| n <= 1))
}

/// Number of classes of elements of order `d`.
pub fn class_count_of_order(g: &PermGroup, d: u64) -> Result<usize> {
    Ok(classes_per_order(g, false)?.get(&d).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{self, builtin};

    #[test]
    fn rationality() {
        assert!(is_rational_group(&builtin("s5").unwrap()).unwrap());
        assert!(!is_rational_group(&builtin("a5").unwrap()).unwrap());
        assert!(is_rational_group(&PermGroup::trivial(1)).unwrap());
        assert!(!is_rational_group(&builtin("gl23").unwrap()).unwrap());
        assert!(is_rational_group(&builtin("q8").unwrap()).unwrap());
        assert!(!is_rational_group(&builtin("sd16").unwrap()).unwrap());
        assert!(!is_rational_group(&construct::cyclic(3).unwrap()).unwrap());
    }

    #[test]
    fn oc_groups() {
        assert!(is_oc_group(&construct::cyclic(12).unwrap()).unwrap());
        assert!(is_oc_group(&builtin("s3").unwrap()).unwrap());
        assert!(!is_oc_group(&builtin("q8").unwrap()).unwrap());
        assert!(!is_oc_group(&construct::dihedral(4).unwrap()).unwrap());
    }

    #[test]
    fn same_order_conjugacy() {
        assert!(odd_order_conjugacy(&builtin("s5").unwrap()).unwrap());
        assert!(!odd_order_conjugacy(&builtin("a5").unwrap()).unwrap());
        assert!(all_order_conjugacy(&builtin("s3").unwrap()).unwrap());
        assert!(!all_order_conjugacy(&builtin("s5").unwrap()).unwrap());
        assert!(!all_order_conjugacy(&construct::cyclic(3).unwrap()).unwrap());
        assert!(all_order_conjugacy(&construct::cyclic(2).unwrap()).unwrap());
        assert_eq!(class_count_of_order(&builtin("s5").unwrap(), 2).unwrap(), 2);
    }
}
