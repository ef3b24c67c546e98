use std::sync::Arc;

use crate::groups::{Element, Group, GroupSpec};
use crate::sds::{verify_difference_family, verify_sds, Block, SdsFamily, SdsParams, SymmetryType, VerifyFailure};

use super::expr::expand_list;
use super::paley::{paley_skew_ds, z127_family};
use super::spence::spence63;
use super::ConstructionError;

const DATA_FILES: [&str; 8] = [
    include_str!("../../data/catalog/gf25-a.txt"),
    include_str!("../../data/catalog/gf25-b.txt"),
    include_str!("../../data/catalog/gf27-a.txt"),
    include_str!("../../data/catalog/gf27-b.txt"),
    include_str!("../../data/catalog/z37-g.txt"),
    include_str!("../../data/catalog/z47.txt"),
    include_str!("../../data/catalog/gf49.txt"),
    include_str!("../../data/catalog/z61.txt"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// Four blocks with `λ = Σk_i − n`.
    Sds,
    /// Blocks with a constant difference spectrum and no size condition.
    DifferenceFamily,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub family: SdsFamily,
    pub expected_params: SdsParams,
    pub expected_type: SymmetryType,
    pub provenance: String,
    pub kind: EntryKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EntryMismatch {
    #[error(transparent)]
    Verify(#[from] VerifyFailure),
    #[error("parameters {found}, expected {expected}")]
    Params { found: SdsParams, expected: SdsParams },
    #[error("type {found}, expected {expected}")]
    Type { found: SymmetryType, expected: SymmetryType },
}

impl CatalogEntry {
    pub fn group(&self) -> &Arc<Group> {
        self.family.group()
    }

    /// Verifies the blocks and compares parameters and detected type with the expected ones.
    ///
    /// A `*` in the expected type accepts any detected letter.
    pub fn check(&self) -> Result<SdsParams, EntryMismatch> {
        let found = match self.kind {
            EntryKind::Sds => verify_sds(&self.family)?,
            EntryKind::DifferenceFamily => verify_difference_family(&self.family)?,
        };
        if found != self.expected_params {
            return Err(EntryMismatch::Params { found, expected: self.expected_params.clone() });
        }
        let detected = self.family.type_of();
        if !self.expected_type.is_satisfied_by(&detected) {
            return Err(EntryMismatch::Type { found: detected, expected: self.expected_type.clone() });
        }
        Ok(found)
    }
}

/// Parses one catalog data file.
///
/// Block lines are `block sym <list>` (the list together with its negatives),
/// `block sym0 <list>` (the same plus 0) or `block set <list>`.
pub fn parse_entry(text: &str) -> Result<CatalogEntry, ConstructionError> {
    let bad = |line: usize, message: String| ConstructionError::Data { line, message };
    let (mut id, mut group, mut params, mut ty, mut provenance) = (None, None, None, None, None);
    let mut blocks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad(line_no, format!("no value in {line:?}")))?;
        let rest = rest.trim();
        match key {
            "id" => id = Some(rest.to_string()),
            "group" => {
                let spec: GroupSpec = rest.parse().map_err(|e| bad(line_no, format!("{e}")))?;
                group = Some(Arc::new(Group::new(spec)?));
            }
            "params" => params = Some(rest.parse::<SdsParams>().map_err(|e| bad(line_no, format!("{e}")))?),
            "type" => ty = Some(rest.parse::<SymmetryType>().map_err(|e| bad(line_no, format!("{e}")))?),
            "provenance" => provenance = Some(rest.to_string()),
            "block" => {
                let g: &Arc<Group> = group.as_ref().ok_or_else(|| bad(line_no, "block before group".into()))?;
                let (kind, list) = rest.split_once(' ').unwrap_or((rest, ""));
                let listed = expand_list(g, list)?;
                let members: Vec<Element> = match kind {
                    "set" => listed,
                    "sym" | "sym0" => {
                        let mut m = listed.clone();
                        m.extend(listed.iter().map(|&e| g.neg(e)));
                        if kind == "sym0" {
                            m.push(Element::ZERO);
                        }
                        m
                    }
                    other => return Err(bad(line_no, format!("unknown block kind {other:?}"))),
                };
                blocks.push(Block::from_elements(g, members)?);
            }
            other => return Err(bad(line_no, format!("unknown key {other:?}"))),
        }
    }
    let missing = |what: &str| bad(0, format!("missing {what}"));
    let group = group.ok_or_else(|| missing("group"))?;
    let expected_type = ty.ok_or_else(|| missing("type"))?;
    let family = SdsFamily::new(&group, blocks)?.with_declared_type(expected_type.clone())?;
    Ok(CatalogEntry {
        id: id.ok_or_else(|| missing("id"))?,
        family,
        expected_params: params.ok_or_else(|| missing("params"))?,
        expected_type,
        provenance: provenance.ok_or_else(|| missing("provenance"))?,
        kind: EntryKind::Sds,
    })
}

fn params(s: &str) -> SdsParams {
    s.parse().expect("valid parameter literal")
}

fn ty(s: &str) -> SymmetryType {
    s.parse().expect("valid type literal")
}

/// Every embedded construction, in a fixed order.
pub fn catalog() -> Result<Vec<CatalogEntry>, ConstructionError> {
    let mut entries = DATA_FILES.iter().map(|t| parse_entry(t)).collect::<Result<Vec<_>, _>>()?;

    let df = z127_family()?;
    entries.push(CatalogEntry {
        id: "z127-df".into(),
        family: df.clone().with_declared_type(ty("s**"))?,
        expected_params: params("(127;57,57,57;76)"),
        expected_type: ty("s**"),
        provenance: "Z_127, difference family from cosets of the order-7 subgroup of Z_127^*".into(),
        kind: EntryKind::DifferenceFamily,
    });
    let four = df.prepend(paley_skew_ds(127)?)?;
    entries.push(CatalogEntry {
        id: "z127-4block".into(),
        family: four.with_declared_type(ty("ks**"))?,
        expected_params: params("(127;63,57,57,57;107)"),
        expected_type: ty("ks**"),
        provenance: "Z_127, Paley skew difference set prepended to the coset difference family".into(),
        kind: EntryKind::Sds,
    });
    entries.push(CatalogEntry {
        id: "spence63".into(),
        family: spence63()?,
        expected_params: params("(63;31,31,27,25;51)"),
        expected_type: ty("kkss"),
        provenance: "Z_63, m-sequence over GF(125) reduced mod 504, first block complemented".into(),
        kind: EntryKind::Sds,
    });
    Ok(entries)
}

/// Looks up one entry by id.
pub fn catalog_entry(id: &str) -> Result<CatalogEntry, ConstructionError> {
    catalog()?.into_iter().find(|e| e.id == id).ok_or_else(|| ConstructionError::UnknownEntry(id.to_string()))
}
