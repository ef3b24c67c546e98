//! Plain-text SDS files.
//!
//! ```text
//! group cyclic:7
//! type kkks
//! block 1 2 4
//! block 1 2 4
//! block 1 2 4
//! block 0
//! ```
//!
//! Blank lines and `#` comments are ignored. Elements are integer encodings.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::groups::{Group, GroupSpec};

use super::{Block, SdsError, SdsFamily, SymmetryType};

/// Renders a family; the type line uses the declared type or, failing that, the detected one.
pub fn write_family(family: &SdsFamily) -> String {
    let mut out = String::new();
    let ty = family.declared_type().cloned().unwrap_or_else(|| family.type_of());
    writeln!(out, "group {}", family.group().spec()).unwrap();
    writeln!(out, "type {ty}").unwrap();
    for b in family.blocks() {
        out.push_str("block");
        for i in b.indices() {
            write!(out, " {i}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_family(text: &str) -> Result<SdsFamily, SdsError> {
    let err = |line: usize, message: String| SdsError::Format { line, message };
    let mut group: Option<Arc<Group>> = None;
    let mut ty: Option<SymmetryType> = None;
    let mut blocks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                if group.is_some() {
                    return Err(err(line_no, "second group line".into()));
                }
                let spec: GroupSpec = rest.parse().map_err(|e| err(line_no, format!("{e}")))?;
                group = Some(Arc::new(Group::new(spec).map_err(|e| err(line_no, format!("{e}")))?));
            }
            "type" => {
                if group.is_none() || ty.is_some() || !blocks.is_empty() {
                    return Err(err(line_no, "type line must directly follow the group line".into()));
                }
                ty = Some(rest.parse().map_err(|e| err(line_no, format!("{e}")))?);
            }
            "block" => {
                let Some(g) = &group else {
                    return Err(err(line_no, "block before group line".into()));
                };
                let mut members = Vec::new();
                for tok in rest.split_whitespace() {
                    let v: u32 = tok.parse().map_err(|_| err(line_no, format!("bad element {tok:?}")))?;
                    if v as usize >= g.order() {
                        return Err(err(line_no, format!("element {v} out of range for order {}", g.order())));
                    }
                    if members.contains(&v) {
                        return Err(err(line_no, format!("duplicate element {v}")));
                    }
                    members.push(v);
                }
                blocks.push(Block::from_indices(g, &members)?);
            }
            other => return Err(err(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    let group = group.ok_or_else(|| err(0, "missing group line".into()))?;
    if blocks.is_empty() {
        return Err(err(0, "no block lines".into()));
    }
    let family = SdsFamily::new(&group, blocks)?;
    match ty {
        Some(t) => family.with_declared_type(t),
        None => Ok(family),
    }
}
