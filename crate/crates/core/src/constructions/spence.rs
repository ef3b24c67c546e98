//! The order-63 SDS built from an m-sequence over GF(125).

use std::fmt::{self, Write as _};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::groups::{Element, Group, GroupSpec};
use crate::sds::{verify_sds, Block, SdsFamily, SdsParams, SymmetryType};

use super::msequence::MSequence;
use super::rds::{rds_check, rds_parameters, RdsParams};

const Q: u64 = 125;
const PERIOD: u64 = Q * Q - 1;
const REDUCED: u64 = 4 * (Q + 1);
const N: u32 = 63;
/// GF(125) = Z_5[x]/(x^3 − 2x + 2).
pub const SPENCE_FIELD: &str = "ea:5^3:2,3,0,1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Field,
    Primitive,
    Period,
    RelativeDifferenceSet,
    Reduction,
    Translate,
    Split,
    Symmetry,
    Final,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Field => "field",
            Stage::Primitive => "primitive element",
            Stage::Period => "m-sequence period",
            Stage::RelativeDifferenceSet => "relative difference set",
            Stage::Reduction => "reduction mod 504",
            Stage::Translate => "fixed translate",
            Stage::Split => "split into blocks",
            Stage::Symmetry => "block symmetry",
            Stage::Final => "final family",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("stage {stage}: {message}")]
pub struct PipelineError {
    pub stage: Stage,
    pub message: String,
}

fn fail<T>(stage: Stage, message: impl Into<String>) -> Result<T, PipelineError> {
    Err(PipelineError { stage, message: message.into() })
}

/// The reference listing: the fixed translate of `Y` and the halves `A_i ∩ {0..31}`.
pub struct ReferenceListing {
    pub y: Vec<u64>,
    pub halves: [Vec<u32>; 4],
}

pub fn reference_listing() -> &'static ReferenceListing {
    static LISTING: OnceLock<ReferenceListing> = OnceLock::new();
    LISTING.get_or_init(|| {
        let mut y = Vec::new();
        let mut halves = Vec::new();
        for line in include_str!("../../data/spence63.txt").lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            let Some((key, rest)) = line.split_once(' ') else { continue };
            let nums = rest.split_whitespace().map(|t| t.parse::<u64>().expect("numeric listing"));
            match key {
                "y" => y.extend(nums),
                "half" => halves.push(nums.map(|v| v as u32).collect::<Vec<_>>()),
                other => panic!("unknown listing key {other}"),
            }
        }
        let halves: [Vec<u32>; 4] = halves.try_into().expect("four halves");
        ReferenceListing { y, halves }
    })
}

/// Every intermediate object of the construction, for audit.
#[derive(Debug, Clone)]
pub struct SpenceTrace {
    pub field: Arc<Group>,
    pub generator: Element,
    pub generator_order: u64,
    pub sequence: MSequence,
    /// `{i : x_i = 1}` within one period.
    pub x: Vec<u64>,
    pub x_params: RdsParams,
    /// `X mod 504`, sorted.
    pub y: Vec<u64>,
    /// Parameters of `Y` with its forbidden subgroup read off the difference counts.
    pub y_params: RdsParams,
    /// All `t` with `125 (Y + t) = Y + t`.
    pub fixed_translates: Vec<u64>,
    pub translate: u64,
    pub y_fixed: Vec<u64>,
    /// The residues of `Y + t` feeding each block, before reduction mod 63.
    pub classes: [Vec<u64>; 4],
    /// `A_1..A_4` over `Z_63`, before complementing.
    pub blocks: [Block; 4],
    pub family: SdsFamily,
    pub params: SdsParams,
}

/// Residue classes mod 8 feeding block `i` (zero-based): `i` and `i + 2`.
///
/// These are the classes that reproduce the reference halves; see the README.
pub fn split_classes(i: usize) -> [u64; 2] {
    [i as u64, i as u64 + 2]
}

pub fn spence63() -> Result<SdsFamily, PipelineError> {
    spence63_trace().map(|t| t.family)
}

pub fn spence63_trace() -> Result<SpenceTrace, PipelineError> {
    let spec: GroupSpec = SPENCE_FIELD.parse().or_else(|e| fail(Stage::Field, format!("{e}")))?;
    let field = Arc::new(Group::new(spec).or_else(|e| fail(Stage::Field, format!("{e}")))?);
    let generator = field.from_coefficients(&[0, 1]).or_else(|e| fail(Stage::Field, format!("{e}")))?;
    let one = field.field_one().or_else(|e| fail(Stage::Field, format!("{e}")))?;

    let generator_order = field.multiplicative_order(generator).ok().flatten().unwrap_or(0);
    if generator_order != Q - 1 {
        return fail(Stage::Primitive, format!("x has multiplicative order {generator_order}, not {}", Q - 1));
    }

    let sequence = MSequence::generate(&field, generator, one, one).or_else(|e| fail(Stage::Period, format!("{e}")))?;
    if sequence.period() as u64 != PERIOD || !sequence.satisfies_recurrence() {
        return fail(Stage::Period, format!("minimal period {} instead of {PERIOD}", sequence.period()));
    }

    let x = sequence.positions_of(one);
    let x_params = rds_check(&x, PERIOD, Q - 1).or_else(|e| fail(Stage::RelativeDifferenceSet, format!("{e}")))?;

    let mut y: Vec<u64> = x.iter().map(|i| i % REDUCED).collect();
    y.sort_unstable();
    y.dedup();
    if y.len() != x.len() {
        return fail(Stage::Reduction, format!("{} indices collapse to {} residues", x.len(), y.len()));
    }
    let y_params = rds_parameters(&y, REDUCED).or_else(|e| fail(Stage::Reduction, format!("{e}")))?;

    let shifted = |t: u64| {
        let mut s: Vec<u64> = y.iter().map(|v| (v + t) % REDUCED).collect();
        s.sort_unstable();
        s
    };
    let fixed_translates: Vec<u64> = (0..REDUCED)
        .filter(|&t| {
            let s = shifted(t);
            let mut scaled: Vec<u64> = s.iter().map(|v| v * Q % REDUCED).collect();
            scaled.sort_unstable();
            scaled == s
        })
        .collect();
    let reference = reference_listing();
    let mut reference_y = reference.y.clone();
    reference_y.sort_unstable();
    let Some(&translate) = fixed_translates.iter().find(|&&t| shifted(t) == reference_y) else {
        return fail(
            Stage::Translate,
            format!("none of the fixed translates {fixed_translates:?} matches the reference listing"),
        );
    };
    let y_fixed = shifted(translate);

    let z63 = Arc::new(Group::cyclic(N).expect("63 > 0"));
    let mut classes: Vec<Vec<u64>> = Vec::with_capacity(4);
    let mut blocks: Vec<Block> = Vec::with_capacity(4);
    for i in 0..4 {
        let wanted = split_classes(i);
        let class: Vec<u64> = y_fixed.iter().copied().filter(|j| wanted.contains(&(j % 8))).collect();
        let residues: Vec<u32> = class.iter().map(|j| (j % N as u64) as u32).collect();
        let block = Block::from_indices(&z63, &residues).expect("residues below 63");
        let half: Vec<u32> = block.indices().into_iter().filter(|&v| v < 32).collect();
        if half != reference.halves[i] {
            return fail(
                Stage::Split,
                format!("block {} has half {half:?}, reference {:?}", i + 1, reference.halves[i]),
            );
        }
        classes.push(class);
        blocks.push(block);
    }
    let classes: [Vec<u64>; 4] = classes.try_into().expect("four classes");
    let blocks: [Block; 4] = blocks.try_into().expect("four blocks");

    let shape = [blocks[0].is_symmetric(), blocks[1].is_skew(), blocks[2].is_symmetric(), blocks[3].is_skew()];
    if shape != [true; 4] {
        return fail(Stage::Symmetry, format!("symmetric/skew/symmetric/skew pattern fails: {shape:?}"));
    }

    let mut finals = vec![blocks[0].complement(), blocks[1].clone(), blocks[2].clone(), blocks[3].clone()];
    finals.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let ty: SymmetryType = "kkss".parse().expect("valid type");
    let family = SdsFamily::new(&z63, finals)
        .and_then(|f| f.with_declared_type(ty))
        .or_else(|e| fail(Stage::Final, format!("{e}")))?;
    let params = verify_sds(&family).or_else(|e| fail(Stage::Final, format!("{e}")))?;
    if !family.satisfies_declared_type() {
        return fail(Stage::Final, format!("detected type {} is not kkss", family.type_of()));
    }

    Ok(SpenceTrace {
        field,
        generator,
        generator_order,
        sequence,
        x,
        x_params,
        y,
        y_params,
        fixed_translates,
        translate,
        y_fixed,
        classes,
        blocks,
        family,
        params,
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl SpenceTrace {
    /// Plain-text dump of every stage.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f = &self.field;
        writeln!(out, "field {}", f.spec()).unwrap();
        writeln!(out, "generator {} order {}", self.generator, self.generator_order).unwrap();
        let prefix = self.sequence.terms().iter().take(32).map(|&t| join(f.digits(t)).replace(' ', ","));
        writeln!(out, "sequence-prefix {}", join(prefix)).unwrap();
        writeln!(out, "period {}", self.sequence.period()).unwrap();
        writeln!(out, "x {}", join(&self.x)).unwrap();
        writeln!(out, "x-params {}", self.x_params).unwrap();
        writeln!(out, "y {}", join(&self.y)).unwrap();
        writeln!(out, "y-params {}", self.y_params).unwrap();
        writeln!(out, "fixed-translates {}", join(&self.fixed_translates)).unwrap();
        writeln!(out, "translate {}", self.translate).unwrap();
        writeln!(out, "y-fixed {}", join(&self.y_fixed)).unwrap();
        for (i, c) in self.classes.iter().enumerate() {
            writeln!(out, "y{} {}", i + 1, join(c)).unwrap();
        }
        for (i, b) in self.blocks.iter().enumerate() {
            writeln!(out, "a{} {}", i + 1, join(b.indices())).unwrap();
        }
        writeln!(out, "params {}", self.params).unwrap();
        writeln!(out, "type {}", self.family.type_of()).unwrap();
        out
    }
}
