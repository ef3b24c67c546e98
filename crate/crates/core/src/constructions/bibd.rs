use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::sds::SdsFamily;

/// Parameters `(v, b, r, k, λ)` of a balanced incomplete block design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BibdParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

impl fmt::Display for BibdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.v, self.b, self.r, self.k, self.lambda)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BibdFailure {
    #[error("blocks have different sizes {0:?}")]
    UnequalSizes(Vec<usize>),
    #[error("pair {{{}, {}}} is covered {count} times, but pair {{0, 1}} {expected} times", .pair.0, .pair.1)]
    PairCoverage { pair: (u32, u32), count: usize, expected: usize },
    #[error("point {point} lies in {count} blocks, expected {expected}")]
    Replication { point: u32, count: usize, expected: usize },
    #[error("no pair is covered, so the development is not a design")]
    NoCoverage,
}

/// Develops every block by all translates and checks the result is a 2-design.
pub fn develop_bibd(family: &SdsFamily) -> Result<BibdParams, BibdFailure> {
    let sizes = family.sizes();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(BibdFailure::UnequalSizes(sizes));
    }
    let g = family.group();
    let v = g.order();
    let k = sizes[0];
    let developed: Vec<Vec<u32>> =
        family.blocks().par_iter().flat_map_iter(|b| g.elements().map(move |t| b.translate(t).indices())).collect();
    let mut pairs = vec![0usize; v * v];
    let mut replication = vec![0usize; v];
    for block in &developed {
        for (i, &x) in block.iter().enumerate() {
            replication[x as usize] += 1;
            for &y in &block[i + 1..] {
                pairs[x as usize * v + y as usize] += 1;
            }
        }
    }
    if v < 2 {
        return Err(BibdFailure::NoCoverage);
    }
    let lambda = pairs[1];
    if lambda == 0 {
        return Err(BibdFailure::NoCoverage);
    }
    for x in 0..v {
        for y in x + 1..v {
            let count = pairs[x * v + y];
            if count != lambda {
                return Err(BibdFailure::PairCoverage { pair: (x as u32, y as u32), count, expected: lambda });
            }
        }
    }
    let r = replication[0];
    if let Some(point) = replication.iter().position(|&c| c != r) {
        return Err(BibdFailure::Replication { point: point as u32, count: replication[point], expected: r });
    }
    Ok(BibdParams { v, b: developed.len(), r, k, lambda })
}
