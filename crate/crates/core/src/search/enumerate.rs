use std::sync::Arc;

use crate::groups::{Element, Group};
use crate::sds::{Block, SymLabel};

/// Every block of the given size meeting the constraint, each exactly once, in ascending block order.
///
/// Infeasible combinations (a skew block of the wrong size, an odd symmetric
/// block without a self-inverse element to absorb the parity) yield nothing.
pub fn enumerate_blocks(group: &Arc<Group>, size: usize, constraint: SymLabel) -> impl Iterator<Item = Block> {
    let mut blocks = match constraint {
        SymLabel::Symmetric => symmetric_blocks(group, size),
        SymLabel::Skew => skew_blocks(group, size),
        SymLabel::Free => free_blocks(group, size),
    };
    blocks.sort();
    blocks.into_iter()
}

/// Orbits of `x ↦ −x`: singletons for self-inverse elements, pairs otherwise.
fn negation_orbits(g: &Group) -> Vec<Vec<Element>> {
    g.elements()
        .filter_map(|x| {
            let y = g.neg(x);
            match x.0.cmp(&y.0) {
                std::cmp::Ordering::Equal => Some(vec![x]),
                std::cmp::Ordering::Less => Some(vec![x, y]),
                std::cmp::Ordering::Greater => None,
            }
        })
        .collect()
}

fn symmetric_blocks(group: &Arc<Group>, size: usize) -> Vec<Block> {
    let orbits = negation_orbits(group);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    pick_orbits(group, &orbits, 0, size, &mut chosen, &mut out);
    out
}

fn pick_orbits(
    group: &Arc<Group>,
    orbits: &[Vec<Element>],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<Element>,
    out: &mut Vec<Block>,
) {
    if remaining == 0 {
        out.push(Block::from_elements(group, chosen.iter().copied()).expect("group elements"));
        return;
    }
    for i in from..orbits.len() {
        let orbit = &orbits[i];
        if orbit.len() > remaining {
            continue;
        }
        chosen.extend(orbit);
        pick_orbits(group, orbits, i + 1, remaining - orbit.len(), chosen, out);
        chosen.truncate(chosen.len() - orbit.len());
    }
}

fn skew_blocks(group: &Arc<Group>, size: usize) -> Vec<Block> {
    let n = group.order();
    if n.is_multiple_of(2) || size != (n - 1) / 2 {
        return Vec::new();
    }
    let pairs: Vec<Vec<Element>> = negation_orbits(group).into_iter().filter(|o| o.len() == 2).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let members = pairs.iter().enumerate().map(|(i, p)| p[((mask >> i) & 1) as usize]);
            Block::from_elements(group, members).expect("group elements")
        })
        .collect()
}

fn free_blocks(group: &Arc<Group>, size: usize) -> Vec<Block> {
    let n = group.order();
    if size > n {
        return Vec::new();
    }
    let mut idx: Vec<u32> = (0..size as u32).collect();
    let mut out = Vec::new();
    loop {
        out.push(Block::from_indices(group, &idx).expect("indices below order"));
        // advance to the next combination in lexicographic order
        let Some(i) = (0..size).rev().find(|&i| (idx[i] as usize) < n - size + i) else { break };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}
