//! Conjugacy classes and power maps.

use std::sync::Arc;

use serde::Serialize;

use crate::construct::gcd;
use crate::error::Result;
use crate::group::{ElementTable, PermGroup};
use crate::perm::Permutation;

/// One conjugacy class. The representative is the least element of the
/// class in lexicographic image order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
    pub rep_order: u64,
}

/// Class decomposition of a group, indexed against its element table.
#[derive(Debug)]
pub struct ClassData {
    pub classes: Vec<ConjugacyClass>,
    /// Element index -> class index.
    pub class_of: Vec<u32>,
    /// Class index -> sorted element indices.
    pub members: Vec<Vec<u32>>,
    pub group_order: usize,
}

impl ClassData {
    fn compute(table: &ElementTable, gens: &[Permutation]) -> Self {
        let n = table.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let mut members = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            class_of[start] = c;
            queue.clear();
            queue.push(start as u32);
            let mut head = 0;
            while head < queue.len() {
                let x = table.get(queue[head] as usize);
                head += 1;
                for g in gens {
                    let y = table.idx(&x.conjugate_by(g));
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        queue.push(y as u32);
                    }
                }
            }
            let mut m = queue.clone();
            m.sort_unstable();
            classes.push(ConjugacyClass {
                representative: table.get(start).clone(),
                size: m.len(),
                rep_order: table.order_of(start) as u64,
            });
            members.push(m);
        }
        ClassData { classes, class_of, members, group_order: n }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class containing `rep(i)^m`.
    pub fn power_class(&self, table: &ElementTable, class: usize, m: i64) -> usize {
        let x = self.classes[class].representative.pow(m);
        self.class_of[table.idx(&x)] as usize
    }

    /// Class of inverses.
    pub fn inverse_class(&self, table: &ElementTable, class: usize) -> usize {
        self.power_class(table, class, -1)
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.group_order / self.classes[class].size
    }

    pub fn is_central(&self, class: usize) -> bool {
        self.classes[class].size == 1
    }
}

/// Classes of `g`, computed once per group by breadth-first search over
/// conjugation by the generators.
pub fn class_data(g: &PermGroup) -> Result<Arc<ClassData>> {
    if let Some(c) = g.classes.get() {
        return Ok(c.clone());
    }
    let table = g.element_table()?;
    Ok(g.classes
        .get_or_init(|| Arc::new(ClassData::compute(table, g.generators())))
        .clone())
}

pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjugacyClass>> {
    Ok(class_data(g)?.classes.clone())
}

/// For every class `i` and every `m` in `1..o(i)` coprime to `o(i)`, the
/// class of `rep(i)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerMap {
    pub entries: Vec<Vec<(u64, usize)>>,
}

impl PowerMap {
    pub fn target(&self, class: usize, m: u64) -> Option<usize> {
        self.entries[class].iter().find(|(k, _)| *k == m).map(|&(_, t)| t)
    }

    /// Classes fixed by every coprime power.
    pub fn is_rational_class(&self, class: usize) -> bool {
        self.entries[class].iter().all(|&(_, t)| t == class)
    }

    pub fn rational_class_count(&self) -> usize {
        (0..self.entries.len()).filter(|&i| self.is_rational_class(i)).count()
    }
}

pub fn power_map(g: &PermGroup) -> Result<PowerMap> {
    let data = class_data(g)?;
    let table = g.element_table()?;
    let entries = data
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let d = c.rep_order;
            (1..d.max(2))
                .filter(|&m| gcd(m, d) == 1)
                .map(|m| (m, data.power_class(table, i, m as i64)))
                .collect()
        })
        .collect();
    Ok(PowerMap { entries })
}
