use std::sync::Arc;

use crate::groups::Group;
use crate::sds::{Block, SdsFamily};

use super::ConstructionError;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Nonzero quadratic residues of `Z_p`: a skew `(p, (p−1)/2, (p−3)/4)` difference set.
pub fn paley_skew_ds(p: u32) -> Result<Block, ConstructionError> {
    if !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(ConstructionError::NotThreeModFour(p));
    }
    let g = Arc::new(Group::cyclic(p)?);
    let squares: Vec<u32> = (1..p as u64).map(|x| (x * x % p as u64) as u32).collect();
    Ok(Block::from_indices(&g, &squares)?)
}

/// Subgroup of `Z_127^*` generated by 2.
pub const Z127_SUBGROUP: [u32; 7] = [1, 2, 4, 8, 16, 32, 64];
/// Representatives of the even-indexed cosets `α_0, α_2, ..., α_16`.
pub const Z127_COSET_REPS: [u32; 9] = [1, 3, 5, 7, 9, 11, 13, 19, 21];
/// Coset indices making up each block, besides `0`.
pub const Z127_INDEX_SETS: [[usize; 8]; 3] =
    [[0, 1, 2, 3, 6, 7, 16, 17], [4, 6, 7, 11, 13, 14, 15, 16], [0, 4, 5, 7, 11, 12, 15, 16]];

/// The 18 cosets `α_0..α_17` of the order-7 subgroup, with `α_{2i+1} = −α_{2i}`.
pub fn z127_cosets() -> Result<Vec<Vec<u32>>, ConstructionError> {
    let mut cosets = Vec::with_capacity(18);
    for &r in &Z127_COSET_REPS {
        let mut c: Vec<u32> = Z127_SUBGROUP.iter().map(|&h| r * h % 127).collect();
        c.sort_unstable();
        let mut neg: Vec<u32> = c.iter().map(|&x| (127 - x) % 127).collect();
        neg.sort_unstable();
        cosets.push(c);
        cosets.push(neg);
    }
    let mut all: Vec<u32> = cosets.concat();
    all.sort_unstable();
    if all != (1..127).collect::<Vec<_>>() {
        return Err(ConstructionError::Cosets("the cosets do not partition the nonzero residues".into()));
    }
    Ok(cosets)
}

/// The three-block `(127; 57, 57, 57; 76)` difference family.
pub fn z127_family() -> Result<SdsFamily, ConstructionError> {
    let g = Arc::new(Group::cyclic(127)?);
    let cosets = z127_cosets()?;
    let blocks = Z127_INDEX_SETS
        .iter()
        .map(|js| {
            let mut members = vec![0];
            for &k in js {
                members.extend(&cosets[k]);
            }
            Block::from_indices(&g, &members)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SdsFamily::new(&g, blocks)?)
}
