use std::fs;
use std::path::Path;
use std::sync::Arc;

use sds_core::constructions::{catalog, catalog_entry, spence63_trace, EntryKind};
use sds_core::groups::{Group, GroupSpec};
use sds_core::matrices::{
    family_hadamard, is_hadamard, is_skew_type, is_type1_seeded, is_type2_seeded, read_matrix, write_matrix, MatrixKind,
};
use sds_core::sds::{
    canonical_form, feasible_params, parse_family, type_compatible, verify_difference_family, verify_sds, write_family,
    SdsFamily, SdsParams, SymmetryType,
};
use sds_core::search::{search, Dedup, SearchError, SearchOutcome, SearchSpec};

use crate::report::{RunReport, EXIT_BUDGET};
use crate::{CatalogAction, Command};

pub enum Output {
    Report(RunReport),
    /// Raw text for piping, such as an exported SDS file.
    Text(String),
}

/// Runs one command. `Err` carries a usage or input error (exit code 2).
pub fn run(command: Command, echo: String) -> Result<Output, String> {
    let mut report = RunReport::new(echo);
    match command {
        Command::Verify { path } => verify(&path, &mut report)?,
        Command::Construct { path, out } => construct(&path, &out, &mut report)?,
        Command::Catalog { action: CatalogAction::List } => list(&mut report)?,
        Command::Catalog { action: CatalogAction::Export { id, out } } => {
            let entry = catalog_entry(&id).map_err(|e| e.to_string())?;
            let text = write_family(&entry.family);
            match out {
                None => return Ok(Output::Text(text)),
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    report.pass(id, format!("written to {}", path.display()));
                }
            }
        }
        Command::Catalog { action: CatalogAction::CheckAll } => check_all(&mut report)?,
        Command::Search { group, k, ty, no_translation, raw, budget, limit, out } => {
            let spec: GroupSpec = group.parse().map_err(|e| format!("--group: {e}"))?;
            let ty: SymmetryType = ty.parse().map_err(|e| format!("--type: {e}"))?;
            let dedup = if raw { Dedup::None } else { Dedup::Canonical { allow_translation: !no_translation } };
            search_command(spec, &k, ty, dedup, budget, limit, out.as_deref(), &mut report)?;
        }
        Command::Params { n } => params(n, &mut report)?,
        Command::CheckMatrix { path, group, seed } => check_matrix(&path, group.as_deref(), seed, &mut report)?,
    }
    Ok(Output::Report(report.finish()))
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_family(path: &Path) -> Result<SdsFamily, String> {
    parse_family(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Verifies a family and records the outcome; returns the parameters on success.
fn verify_into(family: &SdsFamily, locator: &str, report: &mut RunReport) -> Option<SdsParams> {
    let checked = if family.blocks().len() == 3 { verify_difference_family(family) } else { verify_sds(family) };
    let params = match checked {
        Ok(p) => p,
        Err(e) => {
            report.fail(locator, e.to_string());
            return None;
        }
    };
    let detected = family.type_of();
    report.pass(locator, format!("{params} {detected}"));
    if family.blocks().len() != 3 {
        report.check(params.lambda_matches_sizes(), "lambda", format!("λ = Σk − n = {}", params.lambda));
    }
    if family.blocks().len() == 4 {
        let sum = params.sum_of_squares();
        report.check(sum == 4 * params.n as i64, "row-sums", format!("Σa² = {sum}, 4n = {}", 4 * params.n));
    }
    if let Some(declared) = family.declared_type() {
        report.check(family.satisfies_declared_type(), "type", format!("declared {declared}, detected {detected}"));
    }
    Some(params)
}

fn verify(path: &Path, report: &mut RunReport) -> Result<(), String> {
    let family = load_family(path)?;
    verify_into(&family, &path.display().to_string(), report);
    Ok(())
}

fn construct(path: &Path, out: &Path, report: &mut RunReport) -> Result<(), String> {
    let family = load_family(path)?;
    if family.blocks().len() != 4 {
        report.fail(path.display().to_string(), format!("{} blocks; the array needs 4", family.blocks().len()));
        return Ok(());
    }
    if verify_into(&family, &path.display().to_string(), report).is_none() {
        return Ok(());
    }
    let h = family_hadamard(&family).map_err(|e| e.to_string())?;
    let hadamard = is_hadamard(&h);
    let skew = is_skew_type(&h);
    report.check(hadamard, "matrix", format!("order {} hadamard={hadamard} skew_type={skew}", h.order()));
    let kind = if hadamard { MatrixKind::Hadamard } else { MatrixKind::Plain };
    fs::write(out, write_matrix(&h, kind)).map_err(|e| format!("{}: {e}", out.display()))?;
    report.info("written", out.display().to_string());
    Ok(())
}

fn list(report: &mut RunReport) -> Result<(), String> {
    for e in catalog().map_err(|e| e.to_string())? {
        report.info(e.id, format!("{} {} {}", e.expected_params, e.expected_type, e.provenance));
    }
    Ok(())
}

fn check_all(report: &mut RunReport) -> Result<(), String> {
    for e in catalog().map_err(|e| e.to_string())? {
        let kind = match e.kind {
            EntryKind::Sds => "",
            EntryKind::DifferenceFamily => " (difference family)",
        };
        match e.check() {
            Ok(p) => report.pass(&e.id, format!("{p} {}{kind}", e.family.type_of())),
            Err(m) => report.fail(&e.id, m.to_string()),
        }
    }
    match spence63_trace() {
        Ok(t) => report.pass(
            "spence63-pipeline",
            format!(
                "period {}, X {}, Y {}, translate {}, final {} {}",
                t.sequence.period(),
                t.x_params,
                t.y_params,
                t.translate,
                t.params,
                t.family.type_of()
            ),
        ),
        Err(e) => report.fail("spence63-pipeline", e.to_string()),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search_command(
    group: GroupSpec,
    k: &[usize],
    ty: SymmetryType,
    dedup: Dedup,
    budget: u64,
    limit: Option<usize>,
    out: Option<&Path>,
    report: &mut RunReport,
) -> Result<(), String> {
    let g = Group::new(group.clone()).map_err(|e| format!("--group: {e}"))?;
    if k.len() != ty.len() {
        return Err(format!("--k has {} sizes but --type has {} letters", k.len(), ty.len()));
    }
    let params = SdsParams::from_sizes(g.order(), k);
    if !type_compatible(&params, &ty) {
        report.info(params.to_string(), format!("{ty} incompatible (×)"));
        return Ok(());
    }
    let mut spec = SearchSpec::new(group, params.clone(), ty.clone()).dedup(dedup).node_budget(budget);
    if let Some(l) = limit {
        spec = spec.limit(l);
    }
    let (outcome, partial) = match search(&spec) {
        Ok(o) => (o, None),
        Err(SearchError::Budget { completed, total, partial, .. }) => (partial, Some((completed, total))),
        Err(e) => return Err(e.to_string()),
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    record_results(&outcome, dedup, out, report)?;
    let what = match (dedup, outcome.families.len()) {
        (Dedup::None, 1) => "family",
        (Dedup::None, _) => "families",
        (_, 1) => "class",
        _ => "classes",
    };
    let summary =
        format!("{ty}: {} {what} ({} raw, {} nodes)", outcome.families.len(), outcome.raw_count, outcome.nodes);
    match partial {
        None => report.pass(params.to_string(), summary),
        Some((completed, total)) => {
            report.fail(
                params.to_string(),
                format!("{summary}; partial: budget exhausted after {completed} of {total} first-block candidates"),
            );
            report.exit_with(EXIT_BUDGET);
        }
    }
    Ok(())
}

fn record_results(
    outcome: &SearchOutcome,
    dedup: Dedup,
    out: Option<&Path>,
    report: &mut RunReport,
) -> Result<(), String> {
    for (i, f) in outcome.families.iter().enumerate() {
        let name = match (outcome.canonical.get(i), dedup) {
            (Some(form), _) => form.short_id(),
            (None, Dedup::None) => match canonical_form(f, true) {
                Ok(form) => format!("{:04}-{}", i, form.short_id()),
                Err(_) => format!("{i:04}"),
            },
            (None, _) => format!("{i:04}"),
        };
        let blocks: Vec<String> = f.blocks().iter().map(|b| b.to_string()).collect();
        report.info(&name, blocks.join(" "));
        if let Some(dir) = out {
            let path = dir.join(format!("{name}.sds"));
            fs::write(&path, write_family(f)).map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(())
}

fn params(n: usize, report: &mut RunReport) -> Result<(), String> {
    let rows = feasible_params(n).map_err(|e| format!("--n: {e}"))?;
    for p in rows {
        let a: Vec<String> = p.row_sums().iter().map(|x| x.to_string()).collect();
        let marks: Vec<String> = ["ssss", "ksss", "kkss", "kkks"]
            .iter()
            .map(|t| {
                let ok = type_compatible(&p, &t.parse().expect("valid type"));
                format!("{t}:{}", if ok { "ok" } else { "×" })
            })
            .collect();
        report.info(p.to_string(), format!("a=({}) {}", a.join(","), marks.join(" ")));
    }
    Ok(())
}

fn check_matrix(path: &Path, group: Option<&str>, seed: u64, report: &mut RunReport) -> Result<(), String> {
    let (kind, m) = read_matrix(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let hadamard = is_hadamard(&m);
    let locator = path.display().to_string();
    match kind {
        MatrixKind::Hadamard => report.check(hadamard, &locator, format!("order {} hadamard={hadamard}", m.order())),
        MatrixKind::Plain => report.info(&locator, format!("order {} hadamard={hadamard}", m.order())),
    }
    report.info("skew_type", is_skew_type(&m).to_string());
    if let Some(spec) = group {
        let spec: GroupSpec = spec.parse().map_err(|e| format!("--group: {e}"))?;
        let g = Arc::new(Group::new(spec).map_err(|e| format!("--group: {e}"))?);
        let indexed = m.as_int().clone().with_group(&g).map_err(|e| format!("--group: {e}"))?;
        report.info("type1", is_type1_seeded(&indexed, seed).to_string());
        report.info("type2", is_type2_seeded(&indexed, seed).to_string());
    }
    Ok(())
}
