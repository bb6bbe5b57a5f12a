//! Subgroups of an enumerated group, held as bitsets over its element table.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{ElementTable, PermGroup};

/// Subgroup generated by element indices `gens`.
pub(crate) fn closure(table: &ElementTable, gens: &[usize]) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(table.len());
    set.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in gens {
            let y = table.mul(x, g);
            if !set.put(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// Greedy generating set for the subgroup generated by `candidates`: each
/// candidate not yet reached is kept as a generator.
pub(crate) fn generate(
    table: &ElementTable,
    candidates: impl IntoIterator<Item = usize>,
) -> (Vec<usize>, FixedBitSet) {
    let mut gens = Vec::new();
    let mut set = closure(table, &gens);
    for c in candidates {
        if !set.contains(c) {
            gens.push(c);
            set = closure(table, &gens);
        }
    }
    (gens, set)
}

/// Materialises a bitset subgroup of `parent` as a [`PermGroup`] with its
/// element list already filled in.
pub(crate) fn to_group(parent: &PermGroup, table: &ElementTable, set: &FixedBitSet) -> PermGroup {
    let (gens, _) = generate(table, set.ones());
    let elements = set.ones().map(|i| table.get(i).clone()).collect();
    PermGroup::from_sorted_elements(
        parent.degree(),
        gens.into_iter().map(|i| table.get(i).clone()).collect(),
        elements,
    )
    .with_cap(parent.enumeration_cap())
}

/// Element indices (in `parent`) of a subgroup given by generators.
pub(crate) fn set_of(parent: &PermGroup, sub: &PermGroup) -> Result<FixedBitSet> {
    if sub.degree() != parent.degree() {
        return Err(Error::DegreeMismatch { left: sub.degree(), right: parent.degree() });
    }
    let table = parent.element_table()?;
    let mut gens = Vec::new();
    for g in sub.generators() {
        let i = table
            .index_of(g)
            .ok_or_else(|| Error::InvalidParameter("subgroup is not contained in the group".into()))?;
        gens.push(i);
    }
    Ok(closure(table, &gens))
}

/// Conjugate `set^g` for the element index `g`.
pub(crate) fn conjugate_set(table: &ElementTable, set: &FixedBitSet, g: usize) -> FixedBitSet {
    let gi = table.inverse(g);
    let mut out = FixedBitSet::with_capacity(table.len());
    for x in set.ones() {
        out.insert(table.mul(table.mul(gi, x), g));
    }
    out
}

/// Whether conjugation by every element in `by` maps `set` into itself,
/// checked on the subgroup generators `gens`.
pub(crate) fn normalized_by(table: &ElementTable, gens: &[usize], set: &FixedBitSet, by: usize) -> bool {
    let inv = table.inverse(by);
    gens.iter().all(|&t| set.contains(table.mul(table.mul(inv, t), by)))
}
