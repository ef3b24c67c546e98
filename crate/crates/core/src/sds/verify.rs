use thiserror::Error;

use crate::groups::Element;

use super::{Block, SdsFamily, SdsParams};

/// Difference counts `#{(x, y) : x, y ∈ B_i, x ≠ y, x − y = d}` summed over blocks,
/// indexed by the encoding of `d`. Entry 0 is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    counts: Vec<u64>,
}

impl Spectrum {
    pub fn count(&self, d: Element) -> u64 {
        self.counts[d.index()]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The common count over nonzero elements, or the first element breaking it.
    /// `Ok(None)` for the trivial group.
    pub fn constant_value(&self) -> Result<Option<u64>, (Element, u64, u64)> {
        let Some(&first) = self.counts.get(1) else { return Ok(None) };
        match self.counts.iter().enumerate().skip(2).find(|&(_, &c)| c != first) {
            Some((d, &c)) => Err((Element(d as u32), c, first)),
            None => Ok(Some(first)),
        }
    }
}

/// Pair-enumeration difference spectrum of a list of blocks over one group.
pub fn difference_spectrum(blocks: &[Block]) -> Result<Spectrum, VerifyFailure> {
    let Some(first) = blocks.first() else {
        return Err(VerifyFailure::NoBlocks);
    };
    let g = first.group();
    if blocks.iter().any(|b| b.group() != g) {
        return Err(VerifyFailure::MixedGroups);
    }
    let mut counts = vec![0u64; g.order()];
    for b in blocks {
        let members = b.elements();
        for &x in &members {
            for &y in &members {
                if x != y {
                    counts[g.sub(x, y).index()] += 1;
                }
            }
        }
    }
    Ok(Spectrum { counts })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyFailure {
    #[error("no blocks given")]
    NoBlocks,
    #[error("blocks lie in different groups")]
    MixedGroups,
    #[error("not an SDS at element {element} (count {count} ≠ {expected})")]
    NotSds { element: u32, count: u64, expected: u64 },
    #[error("SDS with λ = {lambda}, but λ ≠ Σk_i − n = {required}")]
    LambdaMismatch { lambda: u64, required: i64 },
    #[error("Σk_i − n = {0} is negative")]
    NegativeLambda(i64),
}

fn constant_lambda(blocks: &[Block]) -> Result<Option<u64>, VerifyFailure> {
    difference_spectrum(blocks)?.constant_value().map_err(|(d, count, expected)| VerifyFailure::NotSds {
        element: d.0,
        count,
        expected,
    })
}

/// Verifies an SDS whose λ satisfies `λ = Σk_i − n`.
pub fn verify_sds(family: &SdsFamily) -> Result<SdsParams, VerifyFailure> {
    let lambda = constant_lambda(family.blocks())?;
    let params = SdsParams::from_sizes(family.group().order(), &family.sizes());
    if params.lambda < 0 {
        return Err(VerifyFailure::NegativeLambda(params.lambda));
    }
    match lambda {
        Some(l) if l as i64 != params.lambda => {
            Err(VerifyFailure::LambdaMismatch { lambda: l, required: params.lambda })
        }
        _ => Ok(params),
    }
}

/// Verifies a difference family: a constant spectrum, with no relation between λ and the sizes.
pub fn verify_difference_family(family: &SdsFamily) -> Result<SdsParams, VerifyFailure> {
    let lambda = constant_lambda(family.blocks())?.unwrap_or(0);
    Ok(SdsParams { n: family.group().order(), k: family.sizes(), lambda: lambda as i64 })
}
