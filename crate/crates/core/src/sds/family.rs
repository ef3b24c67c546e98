use std::sync::Arc;

use crate::groups::Group;

use super::{Block, SdsError, SymLabel, Symmetry, SymmetryType};

/// An ordered tuple of blocks over one group, optionally with a declared symmetry type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdsFamily {
    group: Arc<Group>,
    blocks: Vec<Block>,
    declared_type: Option<SymmetryType>,
}

impl SdsFamily {
    pub fn new(group: &Arc<Group>, blocks: Vec<Block>) -> Result<SdsFamily, SdsError> {
        if blocks.is_empty() {
            return Err(SdsError::NoBlocks);
        }
        if blocks.iter().any(|b| b.group() != group) {
            return Err(SdsError::MixedGroups);
        }
        Ok(SdsFamily { group: Arc::clone(group), blocks, declared_type: None })
    }

    /// Builds a family from raw element encodings, one slice per block.
    pub fn from_indices(group: &Arc<Group>, blocks: &[&[u32]]) -> Result<SdsFamily, SdsError> {
        let blocks = blocks.iter().map(|b| Block::from_indices(group, b)).collect::<Result<Vec<_>, _>>()?;
        SdsFamily::new(group, blocks)
    }

    pub fn with_declared_type(mut self, ty: SymmetryType) -> Result<SdsFamily, SdsError> {
        if ty.len() != self.blocks.len() {
            return Err(SdsError::TypeLength { blocks: self.blocks.len(), letters: ty.len() });
        }
        self.declared_type = Some(ty);
        Ok(self)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn declared_type(&self) -> Option<&SymmetryType> {
        self.declared_type.as_ref()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Block::len).collect()
    }

    /// Per-block strongest label: `s` if symmetric, `k` if skew, else `*`.
    pub fn type_of(&self) -> SymmetryType {
        SymmetryType(
            self.blocks
                .iter()
                .map(|b| match b.symmetry() {
                    Symmetry::Symmetric => SymLabel::Symmetric,
                    Symmetry::Skew => SymLabel::Skew,
                    Symmetry::Neither => SymLabel::Free,
                })
                .collect(),
        )
    }

    /// Checks the declared type, if any, against the blocks.
    pub fn satisfies_declared_type(&self) -> bool {
        self.declared_type.as_ref().is_none_or(|t| t.is_satisfied_by(&self.type_of()))
    }

    /// Reorders blocks: block `i` of the result is block `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> SdsFamily {
        let blocks = order.iter().map(|&i| self.blocks[i].clone()).collect();
        SdsFamily { group: Arc::clone(&self.group), blocks, declared_type: None }
    }

    /// Replaces block `i` using `f`; the declared type is dropped.
    pub fn map_block(&self, i: usize, f: impl FnOnce(&Block) -> Block) -> SdsFamily {
        let mut blocks = self.blocks.clone();
        blocks[i] = f(&blocks[i]);
        SdsFamily { group: Arc::clone(&self.group), blocks, declared_type: None }
    }

    /// Appends blocks in front, e.g. a skew difference set ahead of a difference family.
    pub fn prepend(&self, block: Block) -> Result<SdsFamily, SdsError> {
        let mut blocks = vec![block];
        blocks.extend(self.blocks.iter().cloned());
        SdsFamily::new(&self.group, blocks)
    }
}
