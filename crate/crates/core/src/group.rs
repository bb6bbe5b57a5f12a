//! Permutation groups given by generators, with lazily built caches.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::analysis::classes::ClassData;
use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default limit on the number of elements a group may have before
/// element-level algorithms refuse to run.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

/// Groups at most this large get a full multiplication table on request.
const MULTIPLICATION_TABLE_LIMIT: usize = 5040;

/// A permutation group of fixed degree.
///
/// The stabiliser chain, the sorted element list and the conjugacy classes
/// are each computed at most once and then shared read-only.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    bsgs: OnceLock<Arc<Bsgs>>,
    elements: OnceLock<Arc<ElementTable>>,
    pub(crate) classes: OnceLock<Arc<ClassData>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            cap: self.cap,
            bsgs: self.bsgs.clone(),
            elements: self.elements.clone(),
            classes: self.classes.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Group generated by `generators`, all of degree `degree`. Identity
    /// generators are dropped; an empty list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: g.degree(), right: degree });
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            cap: DEFAULT_ENUMERATION_CAP,
            bsgs: OnceLock::new(),
            elements: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// Builds a group whose sorted element list is already known.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        let g = Self::new(degree, generators).expect("consistent degree");
        let table = ElementTable::from_sorted(elements);
        let _ = g.elements.set(Arc::new(table));
        g
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn set_enumeration_cap(&mut self, cap: usize) {
        self.cap = cap;
    }

    pub fn enumeration_cap(&self) -> usize {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| {
            Arc::new(Bsgs::new(self.degree, &self.generators).expect("generators share degree"))
        })
    }

    pub fn order(&self) -> u128 {
        if let Some(t) = self.elements.get() {
            return t.len() as u128;
        }
        self.bsgs().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: p.degree(), right: self.degree });
        }
        if let Some(t) = self.elements.get() {
            return Ok(t.index_of(p).is_some());
        }
        self.bsgs().contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sorted element table; fails when the order exceeds the cap.
    pub fn element_table(&self) -> Result<&Arc<ElementTable>> {
        if let Some(t) = self.elements.get() {
            return Ok(t);
        }
        let order = self.bsgs().order();
        if order > self.cap as u128 {
            return Err(Error::TooLarge { order, cap: self.cap });
        }
        Ok(self.elements.get_or_init(|| {
            let mut els = self.bsgs().elements();
            els.sort_unstable();
            Arc::new(ElementTable::from_sorted(els))
        }))
    }

    /// All elements in increasing lexicographic order.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(self.element_table()?.elements())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| (a * b) == (b * a)))
    }

    /// Same element set (for groups small enough to enumerate, otherwise
    /// mutual generator containment).
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        if self.order() != other.order() {
            return Ok(false);
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Sorted element list with an index, element orders and an optional
/// multiplication table.
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    orders: Vec<u32>,
    inverses: OnceLock<Vec<u32>>,
    mult: OnceLock<Option<Vec<u16>>>,
}

impl ElementTable {
    fn from_sorted(elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        ElementTable {
            elements,
            index,
            orders,
            inverses: OnceLock::new(),
            mult: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of an element known to be in the group.
    pub(crate) fn idx(&self, p: &Permutation) -> usize {
        self.index_of(p).expect("element outside the group")
    }

    pub fn order_of(&self, i: usize) -> u32 {
        self.orders[i]
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses.get_or_init(|| {
            self.elements.iter().map(|p| self.idx(&p.inverse()) as u32).collect()
        })[i] as usize
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(Some(t)) = self.mult.get() {
            return t[a * self.elements.len() + b] as usize;
        }
        self.idx(&self.elements[a].compose_unchecked(&self.elements[b]))
    }

    /// Builds the multiplication table if the group is small enough.
    pub fn prepare_multiplication(&self) {
        self.mult.get_or_init(|| {
            let n = self.elements.len();
            if n > MULTIPLICATION_TABLE_LIMIT {
                return None;
            }
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.idx(&a.compose_unchecked(b)) as u16);
                }
            }
            Some(t)
        });
    }
}
