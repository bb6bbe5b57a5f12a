//! Deterministic Schreier–Sims in Knuth's table formulation.
//!
//! For every point `k` the table keeps, for each `j` in the orbit of `k`
//! under the pointwise stabiliser of `0..k`, one permutation of that
//! stabiliser sending `k` to `j`. Levels whose orbit is a single point are
//! dropped from the published chain.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

#[derive(Clone, Debug)]
struct Level {
    /// 0-based base point.
    point: usize,
    /// Strong generators that fix all earlier base points.
    generators: Vec<Permutation>,
    /// Orbit point (0-based) -> coset representative sending `point` there.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

struct Builder {
    degree: usize,
    table: Vec<Vec<Option<Permutation>>>,
    gens: Vec<Vec<Permutation>>,
}

impl Builder {
    fn new(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        let table = (0..degree)
            .map(|k| {
                let mut row = vec![None; degree];
                row[k] = Some(id.clone());
                row
            })
            .collect();
        Builder { degree, table, gens: vec![Vec::new(); degree] }
    }

    /// Sifts `g` from level `k` down; returns the residue.
    fn sift(&self, mut g: Permutation, k: usize) -> Option<Permutation> {
        for level in k..self.degree {
            let j = g.raw()[level] as usize;
            match &self.table[level][j] {
                Some(t) => {
                    if j != level {
                        g = g.compose_unchecked(&t.inverse());
                    }
                }
                None => return Some(g),
            }
        }
        debug_assert!(g.is_identity());
        None
    }

    fn add(&mut self, k: usize, g: Permutation) {
        if k >= self.degree || self.sift(g.clone(), k).is_none() {
            return;
        }
        self.gens[k].push(g.clone());
        let reps: Vec<Permutation> = self.table[k].iter().flatten().cloned().collect();
        for t in reps {
            self.extend(k, t.compose_unchecked(&g));
        }
    }

    fn extend(&mut self, k: usize, g: Permutation) {
        let j = g.raw()[k] as usize;
        match &self.table[k][j] {
            None => {
                self.table[k][j] = Some(g.clone());
                let gens = self.gens[k].clone();
                for s in gens {
                    self.extend(k, g.compose_unchecked(&s));
                }
            }
            Some(t) => {
                let h = g.compose_unchecked(&t.inverse());
                self.add(k + 1, h);
            }
        }
    }
}

impl Bsgs {
    /// Builds the stabiliser chain for the group generated by `generators`.
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: g.degree(), right: degree });
            }
        }
        let mut b = Builder::new(degree);
        for g in generators {
            if !g.is_identity() {
                b.add(0, g.clone());
            }
        }
        let active: Vec<usize> = (0..degree)
            .filter(|&k| b.table[k].iter().filter(|t| t.is_some()).count() > 1)
            .collect();
        let levels = active
            .into_iter()
            .map(|k| {
                let orbit = (0..degree).filter(|&j| b.table[k][j].is_some()).collect();
                Level {
                    point: k,
                    generators: std::mem::take(&mut b.gens[k]),
                    transversal: std::mem::take(&mut b.table[k]),
                    orbit,
                }
            })
            .collect();
        Ok(Bsgs { degree, levels })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// 1-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point + 1).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.iter().flat_map(|l| l.generators.iter().cloned()).collect()
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Transversal of one level as (1-based orbit point, representative) pairs.
    pub fn transversal(&self, level: usize) -> Vec<(usize, Permutation)> {
        let l = &self.levels[level];
        l.orbit.iter().map(|&j| (j + 1, l.transversal[j].clone().unwrap())).collect()
    }

    /// Product of basic orbit lengths, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
            .unwrap_or(u128::MAX)
    }

    /// Sifts `g` through the chain; `None` means `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Option<Permutation> {
        let mut g = g.clone();
        for l in &self.levels {
            let j = g.raw()[l.point] as usize;
            match &l.transversal[j] {
                Some(t) => {
                    if j != l.point {
                        g = g.compose_unchecked(&t.inverse());
                    }
                }
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: g.degree(), right: self.degree });
        }
        Ok(self.sift(g).is_none())
    }

    /// Every group element exactly once, as products of transversal elements
    /// `t_last · … · t_1 · t_0`.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.orbit.len());
            for g in &out {
                for &j in &l.orbit {
                    next.push(g.compose_unchecked(l.transversal[j].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn closure(gens: &[Permutation], n: usize) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let mut stack = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_four() {
        let b = Bsgs::new(4, &[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])]).unwrap();
        assert_eq!(b.order(), 24);
        assert_eq!(b.elements().len(), 24);
        for g in b.strong_generators() {
            assert!(b.sift(&g).is_none());
        }
    }

    #[test]
    fn cyclic_seven() {
        let b = Bsgs::new(7, &[cyc(7, &[&[1, 2, 3, 4, 5, 6, 7]])]).unwrap();
        assert_eq!(b.order(), 7);
        assert_eq!(b.base(), vec![1]);
    }

    #[test]
    fn trivial_group() {
        let b = Bsgs::new(3, &[Permutation::identity(3)]).unwrap();
        assert_eq!(b.order(), 1);
        assert_eq!(b.elements(), vec![Permutation::identity(3)]);
        assert!(b.base().is_empty());
    }

    #[test]
    fn membership_in_a4() {
        let a4 = Bsgs::new(4, &[cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&cyc(4, &[&[1, 2]])).unwrap());
        assert!(a4.contains(&cyc(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(a4.contains(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn random_subgroups_of_s8_match_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut pts: Vec<usize> = (1..=8).collect();
        for trial in 0..60 {
            let count = 1 + trial % 3;
            let gens: Vec<Permutation> = (0..count)
                .map(|_| {
                    pts.shuffle(&mut rng);
                    // keep some subgroups small by restricting support
                    let mut v: Vec<usize> = (1..=8).collect();
                    let k = 3 + trial % 6;
                    let mut sub = pts[..k].to_vec();
                    sub.sort();
                    let mut shuffled = sub.clone();
                    shuffled.shuffle(&mut rng);
                    for (a, b) in sub.iter().zip(&shuffled) {
                        v[a - 1] = *b;
                    }
                    Permutation::from_images(&v).unwrap()
                })
                .collect();
            let b = Bsgs::new(8, &gens).unwrap();
            let brute = closure(&gens, 8);
            assert_eq!(b.order() as usize, brute.len(), "gens {gens:?}");
            let listed: HashSet<Permutation> = b.elements().into_iter().collect();
            assert_eq!(listed, brute);
        }
    }
}
