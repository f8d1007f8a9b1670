//! Command-line front end. `run` executes an experiment and persists CSV
//! rows and traces; `analyze` recomputes metrics from persisted rows.
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nts_bench::metrics;
use nts_bench::rows::{read_rows, read_traces, write_rows, write_traces, TrialRow};
use nts_bench::spec::{
    parse_accept, parse_backtrack, parse_ordering, parse_step, Algorithm, ExperimentSpec,
};
use nts_bench::{load_bounds, load_instances, run_experiment, Problem};

#[derive(Parser)]
#[command(name = "nts", about = "Neighborhood search experiment runner and analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProblemArg {
    Smtwtp,
    Lrp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Nts,
    Vnd,
    VndRestart,
    Vns,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportArg {
    Summary,
    Rtd,
    Borda,
    H2h,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write rows.csv and traces.csv under --out.
    Run {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Instance file or directory of instance files.
        #[arg(long)]
        instances: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Step kind: fi, bi, fd, or bd.
        #[arg(long, default_value = "fi")]
        step: String,
        /// Acceptance kind for nts: aa, ai, or at.
        #[arg(long, default_value = "aa")]
        accept: String,
        /// Backtracking kind for nts: br, bh, or bu.
        #[arg(long, default_value = "br")]
        backtrack: String,
        /// Neighborhood ordering for vnd, as letters (ESI) or ids (1,2,3).
        #[arg(long)]
        ordering: Option<String>,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long)]
        max_evals: u64,
        /// Base seed; trial t uses seed + t.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute metrics from persisted rows.
    Analyze {
        /// Directory holding rows*.csv (and traces*.csv for rtd).
        #[arg(long)]
        rows: PathBuf,
        /// Reference values: `id value` lines, or bare values matched to
        /// sorted instance ids.
        #[arg(long)]
        optima: PathBuf,
        #[arg(long, value_enum)]
        report: ReportArg,
        /// Quality bound in percent for rtd.
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
        #[arg(long)]
        out: PathBuf,
        /// Algorithm labels compared by the h2h report.
        #[arg(long)]
        algo_a: Option<String>,
        #[arg(long)]
        algo_b: Option<String>,
        /// Use evaluations-to-best instead of total evaluations in the h2h ratio.
        #[arg(long, default_value_t = false)]
        use_evals_to_best: bool,
    },
}

fn build_spec(
    problem: ProblemArg,
    algo: AlgoArg,
    step: &str,
    accept: &str,
    backtrack: &str,
    ordering: Option<&str>,
    trials: u64,
    max_evals: u64,
    seed: u64,
) -> Result<ExperimentSpec> {
    let step = parse_step(step)?;
    let algorithm = match algo {
        AlgoArg::Nts => Algorithm::Nts {
            step,
            accept: parse_accept(accept)?,
            backtrack: parse_backtrack(backtrack)?,
        },
        AlgoArg::Vnd | AlgoArg::VndRestart => {
            let Some(ordering) = ordering else {
                bail!("--ordering is required for vnd");
            };
            Algorithm::Vnd {
                ordering: parse_ordering(ordering)?,
                step,
                restart: matches!(algo, AlgoArg::VndRestart),
            }
        }
        AlgoArg::Vns => Algorithm::Vns { step },
    };
    Ok(ExperimentSpec {
        problem: match problem {
            ProblemArg::Smtwtp => Problem::Smtwtp,
            ProblemArg::Lrp => Problem::Lrp,
        },
        algorithm,
        trials,
        base_seed: seed,
        max_evals,
    })
}

fn cmd_run(spec: &ExperimentSpec, instances_path: &Path, out: &Path) -> Result<()> {
    let instances = load_instances(spec.problem, instances_path)?;
    let outcomes = run_experiment(spec, &instances)?;
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    let rows: Vec<_> = outcomes.iter().map(|o| o.row.clone()).collect();
    let traces: Vec<_> = outcomes.iter().map(|o| o.trace.clone()).collect();
    write_rows(&out.join("rows.csv"), &rows)?;
    write_traces(&out.join("traces.csv"), &traces)?;
    eprintln!(
        "{}: {} rows over {} instances written to {}",
        spec.label(),
        rows.len(),
        instances.len(),
        out.display()
    );
    Ok(())
}

fn group_by_algorithm(rows: Vec<TrialRow>) -> BTreeMap<String, Vec<TrialRow>> {
    let mut grouped: BTreeMap<String, Vec<TrialRow>> = BTreeMap::new();
    for row in rows {
        grouped.entry(row.algorithm.clone()).or_default().push(row);
    }
    grouped
}

fn instance_ids(rows: &[TrialRow]) -> Vec<String> {
    let mut ids: Vec<String> = rows.iter().map(|r| r.instance.clone()).collect();
    ids.sort();
    ids.dedup();
    ids
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    rows_dir: &Path,
    optima_path: &Path,
    report: ReportArg,
    delta: f64,
    out: &Path,
    algo_a: Option<&str>,
    algo_b: Option<&str>,
    use_evals_to_best: bool,
) -> Result<()> {
    let rows = read_rows(rows_dir)?;
    let bounds = load_bounds(optima_path, &instance_ids(&rows))?;
    match report {
        ReportArg::Summary => {
            let mut report = BTreeMap::new();
            for (algo, rows) in group_by_algorithm(rows) {
                report.insert(algo, metrics::summarize(&rows, &bounds)?);
            }
            let doc = serde_json::json!({
                "report": "summary",
                "zero_optimum_rule": "deviation denominator is max(f_opt, 1)",
                "algorithms": report,
            });
            fs::write(out, serde_json::to_string_pretty(&doc)?)?;
        }
        ReportArg::Rtd => {
            let traces = read_traces(rows_dir)?;
            let mut grouped: BTreeMap<String, Vec<_>> = BTreeMap::new();
            for t in traces {
                grouped.entry(t.algorithm.clone()).or_default().push(t);
            }
            let mut text = String::new();
            for (algo, traces) in grouped {
                let curve = metrics::rtd(&traces, &bounds, delta)?;
                text.push_str(&format!("# algorithm {algo} delta {delta}\n"));
                for (evals, prob) in curve.points {
                    text.push_str(&format!("{evals} {prob:.16e}\n"));
                }
            }
            fs::write(out, text)?;
        }
        ReportArg::Borda => {
            let mut gaps = BTreeMap::new();
            for (algo, rows) in group_by_algorithm(rows) {
                gaps.insert(algo, metrics::per_instance_mean_gap(&rows, &bounds)?);
            }
            let scores = metrics::borda(&gaps)?;
            let doc = serde_json::json!({ "report": "borda", "scores": scores });
            fs::write(out, serde_json::to_string_pretty(&doc)?)?;
        }
        ReportArg::H2h => {
            let (Some(a), Some(b)) = (algo_a, algo_b) else {
                bail!("h2h needs --algo-a and --algo-b");
            };
            let grouped = group_by_algorithm(rows);
            let rows_a = grouped.get(a).with_context(|| format!("no rows labeled {a}"))?;
            let rows_b = grouped.get(b).with_context(|| format!("no rows labeled {b}"))?;
            let (n_gt, r_eval) =
                metrics::head_to_head(rows_a, rows_b, &bounds, use_evals_to_best)?;
            let doc = serde_json::json!({
                "report": "h2h",
                "algo_a": a,
                "algo_b": b,
                "n_gt": n_gt,
                "r_eval": r_eval,
                "effort_field": if use_evals_to_best { "evals_to_best" } else { "evals_total" },
            });
            fs::write(out, serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.command {
        Command::Run {
            problem,
            instances,
            algo,
            step,
            accept,
            backtrack,
            ordering,
            trials,
            max_evals,
            seed,
            out,
        } => {
            let spec = match build_spec(
                *problem,
                *algo,
                step,
                accept,
                backtrack,
                ordering.as_deref(),
                *trials,
                *max_evals,
                *seed,
            ) {
                Ok(spec) => spec,
                Err(e) => {
                    eprintln!("usage error: {e}");
                    return ExitCode::from(1);
                }
            };
            cmd_run(&spec, instances, out)
        }
        Command::Analyze {
            rows,
            optima,
            report,
            delta,
            out,
            algo_a,
            algo_b,
            use_evals_to_best,
        } => cmd_analyze(
            rows,
            optima,
            *report,
            *delta,
            out,
            algo_a.as_deref(),
            algo_b.as_deref(),
            *use_evals_to_best,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
