//! Subgroup lattices of small groups by closure search.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::analysis::subset::{closure, conjugate_set, to_group};
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Largest group whose subgroups are enumerated.
pub const SUBGROUP_SCAN_CAP: usize = 5040;

/// All subgroups of `g` as element-index sets, ordered by size and then by
/// their element lists.
///
/// Level zero holds the cyclic subgroups; every later subgroup arises as
/// `⟨H, c⟩` for a known `H` and a cyclic generator `c`. Any subgroup
/// `⟨g₁, …, g_m⟩` is reached along `⟨g₁⟩ ≤ ⟨g₁, g₂⟩ ≤ …`.
pub fn subgroup_sets(g: &PermGroup) -> Result<Vec<FixedBitSet>> {
    if g.order() > SUBGROUP_SCAN_CAP as u128 {
        return Err(Error::TooLarge { order: g.order(), cap: SUBGROUP_SCAN_CAP });
    }
    let table = g.element_table()?;
    table.prepare_multiplication();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut found: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
    let mut cyclic = Vec::new();
    for x in 0..table.len() {
        let set = closure(table, &[x]);
        if !seen.contains_key(&set) {
            seen.insert(set.clone(), found.len());
            found.push((set, vec![x]));
            cyclic.push(x);
        }
    }
    let mut head = 0;
    while head < found.len() {
        let (set, gens) = found[head].clone();
        head += 1;
        for &c in &cyclic {
            if set.contains(c) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(c);
            let next = closure(table, &next_gens);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), found.len());
                found.push((next, next_gens));
            }
        }
    }
    let mut sets: Vec<FixedBitSet> = found.into_iter().map(|(s, _)| s).collect();
    sets.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    Ok(sets)
}

/// All subgroups of `g` as groups.
pub fn enumerate_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let table = g.element_table()?;
    Ok(subgroup_sets(g)?.iter().map(|s| to_group(g, table, s)).collect())
}

/// For each subgroup (as indexed by `sets`), the index of the first member
/// of its conjugacy class of subgroups.
pub fn conjugacy_class_of_subgroups(g: &PermGroup, sets: &[FixedBitSet]) -> Result<Vec<usize>> {
    let table = g.element_table()?;
    let gens: Vec<usize> = g.generators().iter().map(|s| table.idx(s)).collect();
    let position: HashMap<&FixedBitSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut class = vec![usize::MAX; sets.len()];
    for start in 0..sets.len() {
        if class[start] != usize::MAX {
            continue;
        }
        class[start] = start;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &s in &gens {
                let conj = conjugate_set(table, &sets[i], s);
                let j = *position
                    .get(&conj)
                    .ok_or_else(|| Error::Construction("conjugate subgroup missing".into()))?;
                if class[j] == usize::MAX {
                    class[j] = start;
                    stack.push(j);
                }
            }
        }
    }
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, symmetric};

    fn count(g: &PermGroup) -> usize {
        subgroup_sets(g).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&cyclic(2).unwrap()), 2);
        assert_eq!(count(&cyclic(12).unwrap()), 6);
        assert_eq!(count(&symmetric(3).unwrap()), 6);
        assert_eq!(count(&symmetric(4).unwrap()), 30);
    }

    #[test]
    fn s3_subgroup_orders() {
        let subs = enumerate_subgroups(&symmetric(3).unwrap()).unwrap();
        let orders: Vec<u128> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, [1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn s4_subgroup_classes() {
        let g = symmetric(4).unwrap();
        let sets = subgroup_sets(&g).unwrap();
        let class = conjugacy_class_of_subgroups(&g, &sets).unwrap();
        let mut reps: Vec<usize> = class.clone();
        reps.sort_unstable();
        reps.dedup();
        assert_eq!(reps.len(), 11);
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(matches!(
            subgroup_sets(&symmetric(8).unwrap()),
            Err(Error::TooLarge { order: 40320, .. })
        ));
    }
}
