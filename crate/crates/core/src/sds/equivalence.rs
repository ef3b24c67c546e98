use std::fmt;

use crate::groups::{Automorphism, Element, Group};

use super::{Block, SdsError, SdsFamily};

/// Byte string identifying an equivalence class of families.
///
/// Two families over the same group have equal forms exactly when some automorphism,
/// block permutation and per-block negation/complementation (and, optionally,
/// per-block translation) carries one onto the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex of the bytes, usable as a file name.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// A short prefix of a hash of the bytes, for display.
    pub fn short_id(&self) -> String {
        // FNV-1a; stable across runs and platforms
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &b in &self.0 {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Size, then bitset words most significant first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct BlockKey {
    len: usize,
    words: Vec<u64>,
}

struct Normalizer<'g> {
    group: &'g Group,
    words: usize,
    translations: Vec<Element>,
}

impl<'g> Normalizer<'g> {
    fn new(group: &'g Group, allow_translation: bool) -> Self {
        let translations = if allow_translation { group.elements().collect() } else { vec![Element::ZERO] };
        Normalizer { group, words: group.order().div_ceil(64), translations }
    }

    fn key_of(&self, members: impl Iterator<Item = Element>) -> BlockKey {
        let mut words = vec![0u64; self.words];
        let mut len = 0;
        for e in members {
            let i = e.index();
            words[self.words - 1 - i / 64] |= 1 << (i % 64);
            len += 1;
        }
        BlockKey { len, words }
    }

    /// Least key over negation, complement and translation of the given member set.
    fn normalize(&self, members: &[Element]) -> BlockKey {
        let g = self.group;
        let mut inside = vec![false; g.order()];
        for &e in members {
            inside[e.index()] = true;
        }
        let comp: Vec<Element> = g.elements().filter(|e| !inside[e.index()]).collect();
        let mut best: Option<BlockKey> = None;
        for set in [members, comp.as_slice()] {
            for negate in [false, true] {
                for &t in &self.translations {
                    let key = self.key_of(set.iter().map(|&e| {
                        let e = if negate { g.neg(e) } else { e };
                        g.add(e, t)
                    }));
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        best.expect("at least one variant")
    }

    fn family_key(&self, blocks: &[Block], phi: &Automorphism) -> Vec<BlockKey> {
        let mut keys: Vec<BlockKey> = blocks
            .iter()
            .map(|b| {
                let image: Vec<Element> = b.iter().map(|e| phi.apply(e)).collect();
                self.normalize(&image)
            })
            .collect();
        keys.sort();
        keys
    }
}

fn encode(order: usize, keys: &[BlockKey]) -> CanonicalForm {
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(order as u32).to_be_bytes());
    bytes.extend_from_slice(&(keys.len() as u32).to_be_bytes());
    for k in keys {
        bytes.extend_from_slice(&(k.len as u32).to_be_bytes());
        for w in &k.words {
            bytes.extend_from_slice(&w.to_be_bytes());
        }
    }
    CanonicalForm(bytes)
}

/// Canonical form of a family, minimizing over every automorphism of its group.
///
/// Fails with a capacity error when the group exceeds the automorphism bound.
pub fn canonical_form(family: &SdsFamily, allow_translation: bool) -> Result<CanonicalForm, SdsError> {
    let g = family.group();
    let norm = Normalizer::new(g, allow_translation);
    let mut best: Option<Vec<BlockKey>> = None;
    for phi in g.automorphisms()? {
        let key = norm.family_key(family.blocks(), &phi);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    Ok(encode(g.order(), &best.expect("identity automorphism always present")))
}

/// Canonical form using a precomputed automorphism list, for callers that
/// canonicalize many families over one group.
pub fn canonical_form_with(
    family: &SdsFamily,
    automorphisms: &[Automorphism],
    allow_translation: bool,
) -> CanonicalForm {
    let g = family.group();
    let norm = Normalizer::new(g, allow_translation);
    let best = automorphisms
        .iter()
        .map(|phi| norm.family_key(family.blocks(), phi))
        .min()
        .expect("automorphism list must not be empty");
    encode(g.order(), &best)
}

/// Whether two families lie in the same equivalence class.
pub fn equivalent(f: &SdsFamily, g: &SdsFamily, allow_translation: bool) -> Result<bool, SdsError> {
    if f.group() != g.group() {
        return Err(SdsError::MixedGroups);
    }
    if f.blocks().len() != g.blocks().len() {
        return Ok(false);
    }
    Ok(canonical_form(f, allow_translation)? == canonical_form(g, allow_translation)?)
}
