//! Isomorphism testing: invariant fingerprint to reject, backtracking over
//! generator images to accept.

use super::classes::class_data;
use super::structure::{center, derived_subgroup};
use super::subset::generate;
use crate::error::{Error, Result};
use crate::group::{ElementTable, PermGroup};

pub const DEFAULT_ISOMORPHISM_CAP: usize = 4096;

/// Invariants preserved by isomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u128,
    /// Sorted (class size, element order) pairs.
    pub classes: Vec<(usize, u64)>,
    pub center_order: u128,
    pub derived_order: u128,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    let data = class_data(g)?;
    let mut classes: Vec<(usize, u64)> = data.classes.iter().map(|c| (c.size, c.rep_order)).collect();
    classes.sort_unstable();
    Ok(Fingerprint {
        order: g.order(),
        classes,
        center_order: center(g)?.order(),
        derived_order: derived_subgroup(g)?.order(),
    })
}

pub fn are_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    are_isomorphic_with_cap(g, h, DEFAULT_ISOMORPHISM_CAP)
}

pub fn are_isomorphic_with_cap(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<bool> {
    for x in [g, h] {
        if x.order() > cap as u128 {
            return Err(Error::TooLarge { order: x.order(), cap });
        }
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if fingerprint(g)? != fingerprint(h)? {
        return Ok(false);
    }
    let gt = g.element_table()?;
    let ht = h.element_table()?;
    let gdata = class_data(g)?;
    let hdata = class_data(h)?;

    // generators of G, preferring elements from small classes
    let mut by_class: Vec<usize> = (0..gt.len()).collect();
    by_class.sort_by_key(|&x| (gdata.classes[gdata.class_of[x] as usize].size, x));
    let (gens, _) = generate(gt, g.generators().iter().map(|s| gt.idx(s)).chain(by_class));

    let signature = |data: &super::classes::ClassData, t: &ElementTable, x: usize| {
        (data.classes[data.class_of[x] as usize].size, t.order_of(x))
    };
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let sig = signature(&gdata, gt, s);
            (0..ht.len()).filter(|&y| signature(&hdata, ht, y) == sig).collect()
        })
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    Ok(search(gt, ht, &gens, &candidates, &mut images))
}

fn search(
    gt: &ElementTable,
    ht: &ElementTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    let k = images.len();
    if k > 0 && !extends(gt, ht, &gens[..k], images, k == gens.len()) {
        return false;
    }
    if k == gens.len() {
        return true;
    }
    for &c in &candidates[k] {
        images.push(c);
        if search(gt, ht, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Checks that `gens[i] ↦ images[i]` extends to an injective homomorphism
/// on the subgroup the generators span; with `full` the subgroup must be
/// all of G.
fn extends(gt: &ElementTable, ht: &ElementTable, gens: &[usize], images: &[usize], full: bool) -> bool {
    let mut map = vec![usize::MAX; gt.len()];
    let mut used = vec![false; ht.len()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = gt.mul(x, s);
            let fy = ht.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return false;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    !full || queue.len() == gt.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn examples() {
        let d3 = construct::dihedral(3).unwrap();
        let s3 = construct::symmetric(3).unwrap();
        assert!(are_isomorphic(&d3, &s3).unwrap());
        let c4 = construct::cyclic(4).unwrap();
        let v4 = construct::elementary_abelian(2, 2).unwrap();
        assert!(!are_isomorphic(&c4, &v4).unwrap());
        let q8 = construct::generalized_quaternion(8).unwrap();
        let d8 = construct::dihedral(4).unwrap();
        assert!(!are_isomorphic(&q8, &d8).unwrap());
    }

    #[test]
    fn positives_across_degrees() {
        let a = construct::direct_product(&construct::cyclic(2).unwrap(), &construct::cyclic(3).unwrap()).unwrap();
        let b = construct::cyclic(6).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
        let sd = construct::semidihedral(16).unwrap();
        let d16 = construct::dihedral(8).unwrap();
        assert!(!are_isomorphic(&sd, &d16).unwrap());
        assert!(are_isomorphic(&sd, &sd.clone()).unwrap());
    }

    #[test]
    fn cap() {
        let s7 = construct::symmetric(7).unwrap();
        assert!(matches!(are_isomorphic(&s7, &s7), Err(Error::TooLarge { .. })));
    }
}
