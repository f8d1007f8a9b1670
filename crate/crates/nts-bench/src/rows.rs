//! Durable trial records. `rows*.csv` holds one line per (instance, trial);
//! `traces*.csv` holds the strict-improvement trace points needed for
//! run-time distributions. Floats are written with 17 significant digits so
//! re-reading a file reproduces the in-memory values bit for bit.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

pub const ROW_COLUMNS: [&str; 10] = [
    "instance",
    "algorithm",
    "trial",
    "seed",
    "best_fitness",
    "evals_to_best",
    "evals_total",
    "h_max",
    "feasible",
    "termination",
];

pub const TERMINATION_PATH_EMPTY: &str = "path_empty";
pub const TERMINATION_BUDGET_EXHAUSTED: &str = "budget_exhausted";

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRow {
    pub instance: String,
    pub algorithm: String,
    pub trial: u64,
    pub seed: u64,
    pub best_fitness: f64,
    pub evals_to_best: u64,
    pub evals_total: u64,
    pub h_max: usize,
    pub feasible: bool,
    pub termination: String,
}

/// Improvement trace of one trial: (evaluation count, fitness) at every
/// strict improvement of the global best, starting with the initial solution.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialTrace {
    pub instance: String,
    pub algorithm: String,
    pub trial: u64,
    pub points: Vec<(u64, f64)>,
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_rows(path: &Path, rows: &[TrialRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    w.write_record(ROW_COLUMNS)?;
    for r in rows {
        w.write_record([
            r.instance.as_str(),
            r.algorithm.as_str(),
            &r.trial.to_string(),
            &r.seed.to_string(),
            &fmt_f64(r.best_fitness),
            &r.evals_to_best.to_string(),
            &r.evals_total.to_string(),
            &r.h_max.to_string(),
            &r.feasible.to_string(),
            &r.termination,
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn parse_rows_file(path: &Path) -> Result<Vec<TrialRow>> {
    let mut reader = csv::Reader::from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let header = reader.headers()?.clone();
    if header.iter().ne(ROW_COLUMNS) {
        bail!("{}: unexpected columns {:?}", path.display(), header);
    }
    let mut out = Vec::new();
    for record in reader.records() {
        let rec = record?;
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let ctx = || format!("{}: bad record {rec:?}", path.display());
        out.push(TrialRow {
            instance: field(0).to_string(),
            algorithm: field(1).to_string(),
            trial: field(2).parse().with_context(ctx)?,
            seed: field(3).parse().with_context(ctx)?,
            best_fitness: field(4).parse().with_context(ctx)?,
            evals_to_best: field(5).parse().with_context(ctx)?,
            evals_total: field(6).parse().with_context(ctx)?,
            h_max: field(7).parse().with_context(ctx)?,
            feasible: field(8).parse().with_context(ctx)?,
            termination: field(9).to_string(),
        });
    }
    Ok(out)
}

pub fn write_traces(path: &Path, traces: &[TrialTrace]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    w.write_record(["instance", "algorithm", "trial", "evals", "fitness"])?;
    for t in traces {
        for (evals, fitness) in &t.points {
            w.write_record([
                t.instance.as_str(),
                t.algorithm.as_str(),
                &t.trial.to_string(),
                &evals.to_string(),
                &fmt_f64(*fitness),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn parse_traces_file(path: &Path) -> Result<Vec<TrialTrace>> {
    let mut reader = csv::Reader::from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    // Points arrive in file order, grouped by (instance, algorithm, trial).
    let mut grouped: BTreeMap<(String, String, u64), Vec<(u64, f64)>> = BTreeMap::new();
    for record in reader.records() {
        let rec = record?;
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let ctx = || format!("{}: bad record {rec:?}", path.display());
        let key = (
            field(0).to_string(),
            field(1).to_string(),
            field(2).parse().with_context(ctx)?,
        );
        grouped
            .entry(key)
            .or_default()
            .push((field(3).parse().with_context(ctx)?, field(4).parse().with_context(ctx)?));
    }
    Ok(grouped
        .into_iter()
        .map(|((instance, algorithm, trial), points)| TrialTrace {
            instance,
            algorithm,
            trial,
            points,
        })
        .collect())
}

fn csv_files(dir: &Path, prefix_traces: bool) -> Result<Vec<std::path::PathBuf>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && p.extension().is_some_and(|e| e == "csv")
                && p.file_name()
                    .is_some_and(|n| n.to_string_lossy().starts_with("traces") == prefix_traces)
        })
        .collect();
    files.sort();
    Ok(files)
}

/// Read and concatenate every non-trace CSV under `dir`.
pub fn read_rows(dir: &Path) -> Result<Vec<TrialRow>> {
    let files = csv_files(dir, false)?;
    if files.is_empty() {
        bail!("no row CSV files under {}", dir.display());
    }
    let mut out = Vec::new();
    for file in files {
        out.extend(parse_rows_file(&file)?);
    }
    Ok(out)
}

/// Read and concatenate every `traces*.csv` under `dir`.
pub fn read_traces(dir: &Path) -> Result<Vec<TrialTrace>> {
    let files = csv_files(dir, true)?;
    if files.is_empty() {
        bail!("no traces*.csv files under {}", dir.display());
    }
    let mut out = Vec::new();
    for file in files {
        out.extend(parse_traces_file(&file)?);
    }
    Ok(out)
}
