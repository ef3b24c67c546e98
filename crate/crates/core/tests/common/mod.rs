#![allow(dead_code)]

pub mod reference_tables;

use sds_core::groups::Group;
use sds_core::sds::{Block, Symmetry};

/// Difference counts by brute-force pair enumeration, indexed by element encoding.
pub fn naive_spectrum(blocks: &[Block]) -> Vec<usize> {
    let g = blocks[0].group();
    let mut counts = vec![0; g.order()];
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
    counts
}

/// λ forced by the sizes alone, when both counting conditions agree.
pub fn naive_lambda(n: usize, ks: &[usize]) -> Option<i64> {
    let pairs: usize = ks.iter().map(|k| k * k.saturating_sub(1)).sum();
    let by_size = ks.iter().sum::<usize>() as i64 - n as i64;
    (pairs.is_multiple_of(n - 1) && pairs / (n - 1) == by_size as usize && by_size >= 0).then_some(by_size)
}

/// True when the blocks have a constant nonzero spectrum equal to Σk − n.
pub fn naive_is_sds(n: usize, blocks: &[Block]) -> bool {
    let s = naive_spectrum(blocks);
    let ks: Vec<usize> = blocks.iter().map(Block::len).collect();
    let lambda = ks.iter().sum::<usize>() as i64 - n as i64;
    lambda >= 0 && s[1..].iter().all(|&c| c as i64 == lambda)
}

/// Every subset of `0..n` of size `k`, as encodings.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<u32>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n as u32).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn letter(b: &Block) -> char {
    match b.symmetry() {
        Symmetry::Symmetric => 's',
        Symmetry::Skew => 'k',
        Symmetry::Neither => '*',
    }
}

/// Whether the letters of `ty` can be placed on the blocks so that each is honoured.
pub fn type_fits(blocks: &[Block], ty: &str) -> bool {
    fn go(blocks: &[Block], letters: &mut Vec<char>) -> bool {
        let Some((first, rest)) = blocks.split_first() else { return true };
        for i in 0..letters.len() {
            let l = letters[i];
            if l == '*' || l == letter(first) {
                letters.remove(i);
                let ok = go(rest, letters);
                letters.insert(i, l);
                if ok {
                    return true;
                }
            }
        }
        false
    }
    go(blocks, &mut ty.chars().collect())
}

pub fn group(n: u32) -> std::sync::Arc<Group> {
    std::sync::Arc::new(Group::cyclic(n).unwrap())
}
