//! Exhaustive search for SDS families with prescribed sizes and symmetry type.
//!
//! Blocks are chosen in descending size order. A partial choice is abandoned as
//! soon as some nonzero element occurs more than λ times as a difference, and
//! the last block is looked up by the exact difference vector it must supply.
//!
//! Two cheap symmetries are broken during the search: each block may be replaced
//! by its negative, and blocks of equal size and equal constraint may be
//! reordered. Results are reported in the corresponding normal form (each block
//! the lesser of itself and its negative, equal-size blocks in ascending order),
//! which does not depend on the constraint letters.

mod enumerate;

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::groups::{Automorphism, Group, GroupError, GroupSpec};
use crate::sds::{canonical_form_with, Block, CanonicalForm, SdsError, SdsFamily, SdsParams, SymLabel, SymmetryType};

pub use enumerate::enumerate_blocks;

/// Nodes expanded before a search gives up, unless overridden.
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    /// Keep every family in normal form.
    None,
    /// Keep one family per equivalence class.
    Canonical { allow_translation: bool },
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub group: GroupSpec,
    pub params: SdsParams,
    pub ty: SymmetryType,
    pub dedup: Dedup,
    pub limit: Option<usize>,
    pub node_budget: u64,
}

impl SearchSpec {
    pub fn new(group: GroupSpec, params: SdsParams, ty: SymmetryType) -> SearchSpec {
        SearchSpec {
            group,
            params,
            ty,
            dedup: Dedup::Canonical { allow_translation: true },
            limit: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn dedup(mut self, dedup: Dedup) -> SearchSpec {
        self.dedup = dedup;
        self
    }

    pub fn limit(mut self, limit: usize) -> SearchSpec {
        self.limit = Some(limit);
        self
    }

    pub fn node_budget(mut self, budget: u64) -> SearchSpec {
        self.node_budget = budget;
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub families: Vec<SdsFamily>,
    /// Canonical forms of `families`, index for index, when deduplicating.
    pub canonical: Vec<CanonicalForm>,
    /// Families in normal form before deduplication.
    pub raw_count: usize,
    pub nodes: u64,
}

#[derive(Debug, Clone, Error)]
pub enum SearchError {
    #[error("{} blocks requested but the type has {} letters", .params.k.len(), .ty.len())]
    TypeLength { params: SdsParams, ty: SymmetryType },
    #[error("parameters {0} are for a group of a different order")]
    OrderMismatch(SdsParams),
    #[error("node budget of {budget} exhausted after {completed} of {total} first-block candidates")]
    Budget { budget: u64, completed: usize, total: usize, partial: SearchOutcome },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sds(#[from] SdsError),
}

struct Candidate {
    block: Block,
    diffs: Vec<u16>,
}

struct Level {
    candidates: Arc<Vec<Candidate>>,
    /// Same size and constraint as the previous level: choose a candidate index at least as large.
    ordered_after_previous: bool,
}

/// Differences of a block counted per element, zero excluded.
fn difference_vector(group: &Group, block: &Block) -> Vec<u16> {
    let mut v = vec![0u16; group.order()];
    let members = block.elements();
    for &x in &members {
        for &y in &members {
            if x != y {
                v[group.sub(x, y).index()] += 1;
            }
        }
    }
    v
}

/// The lesser of a block and its negative.
fn normalize_block(block: &Block) -> Block {
    let neg = block.negate();
    if neg < *block {
        neg
    } else {
        block.clone()
    }
}

/// Each block replaced by the lesser of itself and its negative, then equal-size
/// blocks sorted ascending with sizes descending.
pub fn normal_form(blocks: &[Block]) -> Vec<Block> {
    let mut out: Vec<Block> = blocks.iter().map(normalize_block).collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Distinct ways of placing the type's letters on blocks of the given (descending) sizes,
/// up to reordering letters among blocks of equal size.
fn letter_assignments(sizes: &[usize], ty: &SymmetryType) -> Vec<Vec<SymLabel>> {
    let mut letters = ty.labels().to_vec();
    letters.sort();
    let mut seen = BTreeSet::new();
    permute(&mut letters, 0, &mut |perm| {
        let mut p = perm.to_vec();
        let mut start = 0;
        while start < p.len() {
            let end = (start..p.len()).find(|&j| sizes[j] != sizes[start]).unwrap_or(p.len());
            p[start..end].sort();
            start = end;
        }
        seen.insert(p);
    });
    seen.into_iter().collect()
}

fn permute(v: &mut Vec<SymLabel>, i: usize, f: &mut impl FnMut(&[SymLabel])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute(v, i + 1, f);
        v.swap(i, j);
    }
}

/// Some arrangement of the requested letters that the detected type satisfies.
fn matching_declared_type(requested: &SymmetryType, detected: &SymmetryType) -> Option<SymmetryType> {
    let mut letters = requested.labels().to_vec();
    let mut found = None;
    permute(&mut letters, 0, &mut |perm| {
        let t = SymmetryType(perm.to_vec());
        if found.is_none() && t.is_satisfied_by(detected) {
            found = Some(t);
        }
    });
    found
}

struct Searcher<'a> {
    lambda: u16,
    levels: Vec<Level>,
    /// Last-level candidates keyed by difference vector.
    last_index: HashMap<Vec<u16>, Vec<u32>>,
    nodes: &'a AtomicU64,
    budget: u64,
    aborted: &'a AtomicBool,
}

impl Searcher<'_> {
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn add(&self, counts: &mut [u16], diffs: &[u16]) -> bool {
        let mut ok = true;
        for (c, &d) in counts.iter_mut().zip(diffs) {
            *c += d;
            ok &= *c <= self.lambda;
        }
        ok
    }

    fn remove(counts: &mut [u16], diffs: &[u16]) {
        for (c, &d) in counts.iter_mut().zip(diffs) {
            *c -= d;
        }
    }

    /// Completes every solution extending `chosen`. Returns false when the budget ran out.
    fn extend(&self, counts: &mut Vec<u16>, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) -> bool {
        let depth = chosen.len();
        let level = &self.levels[depth];
        let min = if level.ordered_after_previous { chosen[depth - 1] } else { 0 };
        if depth + 1 == self.levels.len() {
            if !self.tick() {
                return false;
            }
            let needed: Vec<u16> =
                counts.iter().enumerate().map(|(i, &c)| if i == 0 { 0 } else { self.lambda - c }).collect();
            if let Some(hits) = self.last_index.get(&needed) {
                for &h in hits.iter().filter(|&&h| h >= min) {
                    let mut sol = chosen.clone();
                    sol.push(h);
                    out.push(sol);
                }
            }
            return true;
        }
        for (i, cand) in level.candidates.iter().enumerate().skip(min as usize) {
            if !self.tick() {
                return false;
            }
            if self.add(counts, &cand.diffs) {
                chosen.push(i as u32);
                let done = self.extend(counts, chosen, out);
                chosen.pop();
                if !done {
                    Self::remove(counts, &cand.diffs);
                    return false;
                }
            }
            Self::remove(counts, &cand.diffs);
        }
        true
    }
}

/// Runs one letter assignment; solutions come back as candidate indices per level.
fn search_assignment(
    group: &Arc<Group>,
    params: &SdsParams,
    letters: &[SymLabel],
    cache: &mut HashMap<(usize, SymLabel), Arc<Vec<Candidate>>>,
    nodes: &AtomicU64,
    budget: u64,
    aborted: &AtomicBool,
) -> (Vec<Vec<Block>>, usize, usize) {
    let mut levels: Vec<Level> = Vec::with_capacity(letters.len());
    for (i, (&k, &letter)) in params.k.iter().zip(letters).enumerate() {
        let candidates = cache
            .entry((k, letter))
            .or_insert_with(|| {
                let list = enumerate_blocks(group, k, letter)
                    .filter(|b| normalize_block(b) == *b)
                    .map(|block| Candidate { diffs: difference_vector(group, &block), block })
                    .collect();
                Arc::new(list)
            })
            .clone();
        let ordered_after_previous = i > 0 && params.k[i - 1] == k && letters[i - 1] == letter;
        levels.push(Level { candidates, ordered_after_previous });
    }
    let last = levels.last().expect("at least one block");
    let mut last_index: HashMap<Vec<u16>, Vec<u32>> = HashMap::new();
    for (i, c) in last.candidates.iter().enumerate() {
        last_index.entry(c.diffs.clone()).or_default().push(i as u32);
    }
    let searcher = Searcher { lambda: params.lambda as u16, levels, last_index, nodes, budget, aborted };
    let n = group.order();
    let to_blocks = |sol: &Vec<u32>| -> Vec<Block> {
        sol.iter().zip(&searcher.levels).map(|(&i, l)| l.candidates[i as usize].block.clone()).collect()
    };

    if searcher.levels.len() == 1 {
        let mut out = Vec::new();
        let mut counts = vec![0u16; n];
        searcher.extend(&mut counts, &mut Vec::new(), &mut out);
        let done = usize::from(!aborted.load(Ordering::Relaxed));
        return (out.iter().map(to_blocks).collect(), done, 1);
    }

    let first = &searcher.levels[0].candidates;
    let per_first: Vec<Option<Vec<Vec<u32>>>> = (0..first.len())
        .into_par_iter()
        .map(|i| {
            let mut counts = vec![0u16; n];
            let mut out = Vec::new();
            if !searcher.tick() {
                return None;
            }
            if !searcher.add(&mut counts, &first[i].diffs) {
                return Some(out);
            }
            let mut chosen = vec![i as u32];
            searcher.extend(&mut counts, &mut chosen, &mut out).then_some(out)
        })
        .collect();
    let completed = per_first.iter().filter(|r| r.is_some()).count();
    let blocks = per_first.iter().flatten().flatten().map(to_blocks).collect();
    (blocks, completed, first.len())
}

/// Finds every family with the requested sizes whose blocks can carry the type's letters.
///
/// The result order is deterministic: canonical-form order when deduplicating,
/// normal-form order otherwise.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    let group = Arc::new(Group::new(spec.group.clone())?);
    let mut params = spec.params.clone();
    params.k.sort_unstable_by(|a, b| b.cmp(a));
    if params.k.len() != spec.ty.len() {
        return Err(SearchError::TypeLength { params, ty: spec.ty.clone() });
    }
    if params.n != group.order() {
        return Err(SearchError::OrderMismatch(params));
    }
    let automorphisms: Vec<Automorphism> = match spec.dedup {
        Dedup::Canonical { .. } => group.automorphisms()?.collect(),
        Dedup::None => Vec::new(),
    };

    let nodes = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let mut cache = HashMap::new();
    let mut raw: BTreeSet<Vec<Block>> = BTreeSet::new();
    let (mut completed, mut total) = (0, 0);
    if params.lambda >= 0 {
        for letters in letter_assignments(&params.k, &spec.ty) {
            let (found, done, of) =
                search_assignment(&group, &params, &letters, &mut cache, &nodes, spec.node_budget, &aborted);
            raw.extend(found.iter().map(|b| normal_form(b)));
            completed += done;
            total += of;
        }
    }

    let raw_count = raw.len();
    let families: Vec<SdsFamily> = raw
        .into_iter()
        .map(|blocks| {
            let f = SdsFamily::new(&group, blocks)?;
            let declared = matching_declared_type(&spec.ty, &f.type_of()).expect("search respects the letters");
            f.with_declared_type(declared)
        })
        .collect::<Result<_, _>>()?;

    let mut outcome = match spec.dedup {
        Dedup::None => SearchOutcome { families, canonical: Vec::new(), raw_count, nodes: 0 },
        Dedup::Canonical { allow_translation } => {
            let mut classes: Vec<(CanonicalForm, SdsFamily)> = Vec::new();
            let mut seen = BTreeSet::new();
            let forms: Vec<CanonicalForm> =
                families.par_iter().map(|f| canonical_form_with(f, &automorphisms, allow_translation)).collect();
            for (form, f) in forms.into_iter().zip(families) {
                if seen.insert(form.clone()) {
                    classes.push((form, f));
                }
            }
            classes.sort_by(|a, b| a.0.cmp(&b.0));
            let (canonical, families) = classes.into_iter().unzip();
            SearchOutcome { families, canonical, raw_count, nodes: 0 }
        }
    };
    outcome.nodes = nodes.load(Ordering::Relaxed);
    if let Some(limit) = spec.limit {
        outcome.families.truncate(limit);
        outcome.canonical.truncate(limit);
    }
    if aborted.load(Ordering::Relaxed) {
        return Err(SearchError::Budget { budget: spec.node_budget, completed, total, partial: outcome });
    }
    Ok(outcome)
}
