use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::groups::{Automorphism, Element, Group};

use super::SdsError;

/// How a block relates to its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `-B = B`.
    Symmetric,
    /// `B`, `-B` and `{0}` partition the group.
    Skew,
    Neither,
}

/// A subset of a finite abelian group, stored as a bitset over element encodings.
#[derive(Clone)]
pub struct Block {
    group: Arc<Group>,
    words: Vec<u64>,
}

impl Block {
    pub fn empty(group: &Arc<Group>) -> Block {
        Block { group: Arc::clone(group), words: vec![0; group.order().div_ceil(64)] }
    }

    pub fn full(group: &Arc<Group>) -> Block {
        let mut b = Block::empty(group);
        for a in group.elements() {
            b.insert(a);
        }
        b
    }

    /// Builds a block from elements; repeated elements collapse.
    pub fn from_elements<I>(group: &Arc<Group>, elements: I) -> Result<Block, SdsError>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut b = Block::empty(group);
        for e in elements {
            if !group.contains(e) {
                return Err(SdsError::OutOfRange { element: e.0, order: group.order() });
            }
            b.insert(e);
        }
        Ok(b)
    }

    /// Convenience wrapper over [`Block::from_elements`] for raw encodings.
    pub fn from_indices(group: &Arc<Group>, indices: &[u32]) -> Result<Block, SdsError> {
        Block::from_elements(group, indices.iter().map(|&i| Element(i)))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        let i = e.index();
        i < self.group.order() && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn insert(&mut self, e: Element) {
        let i = e.index();
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending encoding order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros();
                w &= w - 1;
                Some(Element(wi as u32 * 64 + bit))
            })
        })
    }

    pub fn elements(&self) -> Vec<Element> {
        self.iter().collect()
    }

    pub fn indices(&self) -> Vec<u32> {
        self.iter().map(|e| e.0).collect()
    }

    pub fn complement(&self) -> Block {
        let mut b = Block::empty(&self.group);
        for a in self.group.elements().filter(|&a| !self.contains(a)) {
            b.insert(a);
        }
        b
    }

    pub fn negate(&self) -> Block {
        self.map(|a| self.group.neg(a))
    }

    pub fn translate(&self, t: Element) -> Block {
        self.map(|a| self.group.add(a, t))
    }

    /// Image under an automorphism of the ambient group.
    pub fn image(&self, phi: &Automorphism) -> Block {
        self.map(|a| phi.apply(a))
    }

    fn map(&self, f: impl Fn(Element) -> Element) -> Block {
        let mut b = Block::empty(&self.group);
        for a in self.iter() {
            b.insert(f(a));
        }
        b
    }

    pub fn union(&self, other: &Block) -> Block {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Block { group: Arc::clone(&self.group), words }
    }

    pub fn intersection(&self, other: &Block) -> Block {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Block { group: Arc::clone(&self.group), words }
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|a| self.contains(self.group.neg(a)))
    }

    pub fn is_skew(&self) -> bool {
        let g = &self.group;
        !self.contains(g.zero()) && g.elements().skip(1).all(|a| self.contains(a) != self.contains(g.neg(a)))
    }

    /// The strongest of the two predicates that holds.
    pub fn symmetry(&self) -> Symmetry {
        if self.is_symmetric() {
            Symmetry::Symmetric
        } else if self.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::Neither
        }
    }
}

impl PartialEq for Block {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words && self.group == other.group
    }
}

impl Eq for Block {}

impl Hash for Block {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then by the ascending member list.
impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|e| e.0.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
