use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groups::{Element, Group};
use crate::sds::Block;

use super::{IntMatrix, SignMatrix};

/// Type I/II checks enumerate every shift `z` up to this order and sample above it.
pub const TYPE_CHECK_EXHAUSTIVE_LIMIT: usize = 64;
/// Seed for the sampled shifts.
pub const TYPE_CHECK_SEED: u64 = 0x5d5_1ead;
const SAMPLED_SHIFTS: usize = 32;

/// The ±1 matrix of a block: entry `(x, y)` is `−1` exactly when `y − x ∈ B`.
pub fn char_matrix(b: &Block) -> SignMatrix {
    let g = b.group();
    let n = g.order();
    let diff = g.difference_table();
    let inside: Vec<bool> = g.elements().map(|e| b.contains(e)).collect();
    let m = IntMatrix::from_fn(n, |x, y| if inside[diff[y * n + x] as usize] { -1 } else { 1 });
    SignMatrix(m.with_group(g).expect("order matches"))
}

/// The permutation matrix `R_{x,y} = 1` iff `x + y = 0`.
pub fn r_matrix(g: &Arc<Group>) -> IntMatrix {
    let neg: Vec<usize> = g.elements().map(|e| g.neg(e).index()).collect();
    IntMatrix::from_fn(g.order(), |x, y| (neg[x] == y) as i32).with_group(g).expect("order matches")
}

fn shifts(g: &Group, seed: u64) -> Vec<Element> {
    if g.order() <= TYPE_CHECK_EXHAUSTIVE_LIMIT {
        return g.elements().collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLED_SHIFTS).map(|_| Element(rng.random_range(0..g.order() as u32))).collect()
}

fn invariant_under(m: &IntMatrix, seed: u64, col_shift: impl Fn(&Group, Element, Element) -> Element) -> bool {
    let Some(g) = m.group() else { return false };
    shifts(g, seed).into_iter().all(|z| {
        g.elements().all(|x| {
            let xz = g.add(x, z).index();
            g.elements().all(|y| m.get(xz, col_shift(g, y, z).index()) == m.get(x.index(), y.index()))
        })
    })
}

/// `M_{x+z, y+z} = M_{x,y}` for all `x, y, z`. False for matrices without a group.
pub fn is_type1(m: &IntMatrix) -> bool {
    is_type1_seeded(m, TYPE_CHECK_SEED)
}

/// `M_{x+z, y−z} = M_{x,y}` for all `x, y, z`. False for matrices without a group.
pub fn is_type2(m: &IntMatrix) -> bool {
    is_type2_seeded(m, TYPE_CHECK_SEED)
}

/// [`is_type1`] with the shifts sampled from `seed` on large groups.
pub fn is_type1_seeded(m: &IntMatrix, seed: u64) -> bool {
    invariant_under(m, seed, |g, y, z| g.add(y, z))
}

/// [`is_type2`] with the shifts sampled from `seed` on large groups.
pub fn is_type2_seeded(m: &IntMatrix, seed: u64) -> bool {
    invariant_under(m, seed, |g, y, z| g.sub(y, z))
}
