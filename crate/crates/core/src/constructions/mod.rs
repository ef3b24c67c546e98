//! Explicit constructions: the embedded catalog, the order-63 m-sequence
//! pipeline, Paley difference sets, the order-127 coset family and BIBD development.

mod bibd;
mod catalog;
mod expr;
mod msequence;
mod paley;
mod rds;
mod spence;

use thiserror::Error;

use crate::groups::GroupError;
use crate::sds::SdsError;

pub use bibd::{develop_bibd, BibdFailure, BibdParams};
pub use catalog::{catalog, catalog_entry, parse_entry, CatalogEntry, EntryKind, EntryMismatch};
pub use expr::{expand, expand_list};
pub use msequence::MSequence;
pub use paley::{paley_skew_ds, z127_cosets, z127_family, Z127_COSET_REPS, Z127_INDEX_SETS, Z127_SUBGROUP};
pub use rds::{rds_check, rds_parameters, RdsFailure, RdsParams};
pub use spence::{
    reference_listing, spence63, spence63_trace, split_classes, PipelineError, ReferenceListing, SpenceTrace, Stage,
    SPENCE_FIELD,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not 3 mod 4, so its quadratic residues are symmetric rather than skew")]
    NotThreeModFour(u32),
    #[error("bad element expression {expr:?}: {message}")]
    Expression { expr: String, message: String },
    #[error("catalog data line {line}: {message}")]
    Data { line: usize, message: String },
    #[error("coset enumeration: {0}")]
    Cosets(String),
    #[error("no catalog entry named {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sds(#[from] SdsError),
}
