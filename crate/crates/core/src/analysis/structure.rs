//! Center, upper central series, Sylow subgroups, p-cores, normal
//! subgroups and quotients.

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use super::classes::class_data;
use super::subset::{closure, conjugate_set, generate, normalized_by, set_of, to_group};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Z(G): the union of the singleton classes.
pub fn center(g: &PermGroup) -> Result<PermGroup> {
    let data = class_data(g)?;
    let table = g.element_table()?;
    let mut set = FixedBitSet::with_capacity(table.len());
    for (i, c) in data.classes.iter().enumerate() {
        if c.size == 1 {
            set.insert(data.members[i][0] as usize);
        }
    }
    Ok(to_group(g, table, &set))
}

/// `1 = Z₀ ≤ Z₁ ≤ …` up to the hypercenter. `Z_{i+1}` is the set of `x`
/// whose commutator with every generator lies in `Z_i`, which is the
/// preimage of `Z(G/Z_i)`.
pub fn upper_central_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let table = g.element_table()?;
    let gens: Vec<usize> = g.generators().iter().map(|s| table.idx(s)).collect();
    let mut current = FixedBitSet::with_capacity(table.len());
    current.insert(0);
    let mut series = vec![to_group(g, table, &current)];
    loop {
        let mut next = FixedBitSet::with_capacity(table.len());
        for x in 0..table.len() {
            let xi = table.inverse(x);
            let central = gens.iter().all(|&s| {
                let si = table.inverse(s);
                let comm = table.mul(table.mul(xi, si), table.mul(x, s));
                current.contains(comm)
            });
            if central {
                next.insert(x);
            }
        }
        if next == current {
            break;
        }
        series.push(to_group(g, table, &next));
        current = next;
    }
    Ok(series)
}

pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    let series = upper_central_series(g)?;
    Ok(series.last().map(|z| z.order()) == Some(g.order()))
}

/// lcm of element orders.
pub fn exponent(g: &PermGroup) -> Result<u64> {
    let table = g.element_table()?;
    Ok(table.orders().iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64))))
}

/// Set of element orders in `elements`.
pub fn order_spectrum<'a>(elements: impl IntoIterator<Item = &'a Permutation>) -> BTreeSet<u64> {
    elements.into_iter().map(|p| p.order()).collect()
}

/// Element orders of `G − M` for a subgroup `M`.
pub fn order_spectrum_outside(g: &PermGroup, m: &PermGroup) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    for x in g.elements()? {
        if !m.contains(x)? {
            out.insert(x.order());
        }
    }
    Ok(out)
}

fn p_part(order: u128, p: u128) -> u128 {
    let mut n = order;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn sylow_set(g: &PermGroup, p: u64) -> Result<(Vec<usize>, FixedBitSet)> {
    let table = g.element_table()?;
    let target = p_part(g.order(), p as u128) as usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut set = closure(table, &gens);
    while set.count_ones(..) < target {
        let next = (1..table.len()).find(|&x| {
            !set.contains(x)
                && is_power_of(table.order_of(x) as u64, p)
                && normalized_by(table, &gens, &set, x)
        });
        let x = next.ok_or_else(|| {
            Error::Construction("no p-element in the normalizer outside the p-subgroup".into())
        })?;
        gens.push(x);
        set = closure(table, &gens);
    }
    Ok((gens, set))
}

/// A Sylow `p`-subgroup, grown from a cyclic `p`-subgroup by adjoining
/// `p`-elements of its normalizer. Trivial when `p ∤ |G|`.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if p < 2 || crate::construct::prime_factors(p as u128) != [p as u128] {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let table = g.element_table()?;
    let (_, set) = sylow_set(g, p)?;
    Ok(to_group(g, table, &set))
}

/// `O_p(G)`: the intersection of the conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let table = g.element_table()?;
    let (_, sylow) = sylow_set(g, p)?;
    let gens: Vec<usize> = g.generators().iter().map(|s| table.idx(s)).collect();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut stack = vec![sylow.clone()];
    seen.insert(sylow.clone());
    let mut core = sylow;
    while let Some(s) = stack.pop() {
        core.intersect_with(&s);
        for &x in &gens {
            let c = conjugate_set(table, &s, x);
            if seen.insert(c.clone()) {
                stack.push(c);
            }
        }
    }
    Ok(to_group(g, table, &core))
}

/// Whether `n ⊴ g` (checked on generators).
pub fn is_normal(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    for x in n.generators() {
        if !g.contains(x)? {
            return Ok(false);
        }
        for s in g.generators() {
            if !n.contains(&x.conjugate_by(s))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest normal subgroup containing the given elements.
pub fn normal_closure(g: &PermGroup, elements: &[Permutation]) -> Result<PermGroup> {
    let table = g.element_table()?;
    let set = normal_closure_set(g, elements.iter().map(|x| table.idx(x)))?;
    Ok(to_group(g, table, &set))
}

fn normal_closure_set(g: &PermGroup, start: impl IntoIterator<Item = usize>) -> Result<FixedBitSet> {
    let table = g.element_table()?;
    let ggens: Vec<usize> = g.generators().iter().map(|s| table.idx(s)).collect();
    let (mut gens, mut set) = generate(table, start);
    let mut i = 0;
    while i < gens.len() {
        for &s in &ggens {
            let c = table.mul(table.mul(table.inverse(s), gens[i]), s);
            if !set.contains(c) {
                gens.push(c);
                set = closure(table, &gens);
            }
        }
        i += 1;
    }
    Ok(set)
}

/// All normal subgroups, sorted by order then by element list: normal
/// closures of single classes, closed under joins.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let table = g.element_table()?;
    let data = class_data(g)?;
    let mut found: Vec<FixedBitSet> = Vec::new();
    let mut trivial = FixedBitSet::with_capacity(table.len());
    trivial.insert(0);
    found.push(trivial);
    for members in &data.members {
        // a class is closed under conjugation, so the subgroup it generates is normal
        let (_, set) = generate(table, members.iter().map(|&m| m as usize));
        if !found.contains(&set) {
            found.push(set);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let (a, b) = (&found[i], &found[j]);
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let (_, join) = generate(table, a.ones().chain(b.ones()));
            if !found.contains(&join) {
                found.push(join);
            }
        }
        i += 1;
    }
    let mut groups: Vec<(usize, Vec<usize>, PermGroup)> = found
        .iter()
        .map(|s| (s.count_ones(..), s.ones().collect(), to_group(g, table, s)))
        .collect();
    groups.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(groups.into_iter().map(|(_, _, h)| h).collect())
}

/// Derived subgroup: normal closure of the generator commutators.
pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let table = g.element_table()?;
    let gens: Vec<usize> = g.generators().iter().map(|s| table.idx(s)).collect();
    let mut comms = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let c = table.mul(table.mul(table.inverse(a), table.inverse(b)), table.mul(a, b));
            comms.push(c);
        }
    }
    let set = normal_closure_set(g, comms)?;
    Ok(to_group(g, table, &set))
}

/// `G ≥ G' ≥ G'' ≥ …` until it stabilises.
pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// `G/N` acting on the cosets of `N` by right multiplication; degree
/// `|G:N|`, coset `k` being the `k`-th coset in order of least element.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<PermGroup> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let table = g.element_table()?;
    let nset = set_of(g, n)?;
    let nidx: Vec<usize> = nset.ones().collect();
    let index = table.len() / nidx.len();
    if index > g.enumeration_cap() {
        return Err(Error::TooLarge { order: index as u128, cap: g.enumeration_cap() });
    }
    let mut coset_of = vec![usize::MAX; table.len()];
    let mut reps = Vec::with_capacity(index);
    for x in 0..table.len() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &m in &nidx {
            coset_of[table.mul(m, x)] = c;
        }
    }
    if index == 1 {
        return Ok(PermGroup::trivial(1).with_cap(g.enumeration_cap()));
    }
    let mut gens = Vec::new();
    for s in g.generators() {
        let si = table.idx(s);
        let images: Vec<usize> = reps.iter().map(|&r| coset_of[table.mul(r, si)] + 1).collect();
        gens.push(Permutation::from_images(&images)?);
    }
    Ok(PermGroup::new(index, gens)?.with_cap(g.enumeration_cap()))
}
