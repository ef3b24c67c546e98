//! Blocks, supplementary difference sets, their parameters and equivalence.

mod block;
mod equivalence;
mod family;
mod format;
mod params;
mod verify;

use thiserror::Error;

use crate::groups::GroupError;

pub use block::{Block, Symmetry};
pub use equivalence::{canonical_form, canonical_form_with, equivalent, CanonicalForm};
pub use family::SdsFamily;
pub use format::{parse_family, write_family};
pub use params::{feasible_params, type_compatible, SdsParams, SymLabel, SymmetryType};
pub use verify::{difference_spectrum, verify_difference_family, verify_sds, Spectrum, VerifyFailure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SdsError {
    #[error("element {element} out of range for a group of order {order}")]
    OutOfRange { element: u32, order: usize },
    #[error("{0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("order {0} must be odd and at least 3")]
    InvalidOrder(usize),
    #[error("blocks lie in different groups")]
    MixedGroups,
    #[error("a family needs at least one block")]
    NoBlocks,
    #[error("symmetry type has {letters} letters for {blocks} blocks")]
    TypeLength { blocks: usize, letters: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}
