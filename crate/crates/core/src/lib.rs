//! Supplementary difference sets over finite abelian groups.
//!
//! The crate builds, verifies, searches for and canonicalizes SDS families, and
//! assembles the resulting Hadamard matrices with the Goethals–Seidel array.

pub mod constructions;
pub mod groups;
pub mod matrices;
pub mod sds;
pub mod search;
