//! Trial orchestration. Trials are independent runs (trial `t` uses seed
//! `base_seed + t`) and fan out across a thread pool; outcomes come back in
//! (instance, trial) order regardless of scheduling.

use anyhow::{bail, Result};
use rayon::prelude::*;

use nts_core::lrp::{self, LrpAdapter};
use nts_core::smtwtp::SmtwtpAdapter;
use nts_core::{
    run_nts, run_vnd, run_vns, NeighborhoodId, ProblemAdapter, RunRecord, SearchConfig,
    StepKind, Termination, VnsParams,
};

use crate::instances::{Instance, InstanceData};
use crate::rows::{TrialRow, TrialTrace, TERMINATION_BUDGET_EXHAUSTED, TERMINATION_PATH_EMPTY};
use crate::spec::{Algorithm, ExperimentSpec, Problem};

#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub row: TrialRow,
    pub trace: TrialTrace,
}

fn termination_label(t: Termination) -> &'static str {
    match t {
        Termination::PathEmpty => TERMINATION_PATH_EMPTY,
        Termination::BudgetExhausted => TERMINATION_BUDGET_EXHAUSTED,
    }
}

fn check_ordering(ordering: &[NeighborhoodId], k: usize) -> Result<()> {
    let mut seen = vec![false; k];
    for id in ordering {
        if id.get() > k || seen[id.index0()] {
            bail!("ordering must be a permutation of neighborhoods 1..={k}");
        }
        seen[id.index0()] = true;
    }
    if ordering.len() != k {
        bail!("ordering must name all {k} neighborhoods");
    }
    Ok(())
}

/// Plain VNS configuration for problems without a tuned preset: every
/// neighborhood shakes and descends on its own, strength capped at `n`.
fn generic_vns_params(k: usize, n: usize, step: StepKind, max_evals: u64, seed: u64) -> VnsParams {
    let ids: Vec<NeighborhoodId> = (1..=k).map(NeighborhoodId::new).collect();
    VnsParams {
        shake_ids: ids.clone(),
        union_groups: ids.into_iter().map(|i| vec![i]).collect(),
        step,
        max_shake: n.max(1) as u64,
        max_evals,
        seed,
    }
}

fn run_one<A: ProblemAdapter>(
    adapter: &A,
    algorithm: &Algorithm,
    vns_params: impl Fn(StepKind) -> VnsParams,
    max_evals: u64,
    seed: u64,
) -> Result<RunRecord<A::Solution>> {
    Ok(match algorithm {
        Algorithm::Nts { step, accept, backtrack } => {
            let config = SearchConfig::new(*step, *accept, *backtrack, max_evals, seed);
            run_nts(adapter, &config)
        }
        Algorithm::Vnd { ordering, step, restart } => {
            check_ordering(ordering, adapter.neighborhood_count())?;
            run_vnd(adapter, ordering, *step, *restart, max_evals, seed)
        }
        Algorithm::Vns { step } => run_vns(adapter, &vns_params(*step)),
    })
}

pub fn run_experiment(spec: &ExperimentSpec, instances: &[Instance]) -> Result<Vec<TrialOutcome>> {
    if spec.trials == 0 {
        bail!("trials must be at least 1");
    }
    for inst in instances {
        let matches = matches!(
            (spec.problem, &inst.data),
            (Problem::Smtwtp, InstanceData::Smtwtp(_)) | (Problem::Lrp, InstanceData::Lrp(_))
        );
        if !matches {
            bail!("instance {} does not match problem kind", inst.id);
        }
    }

    let label = spec.label();
    let tasks: Vec<(usize, u64)> = (0..instances.len())
        .flat_map(|i| (0..spec.trials).map(move |t| (i, t)))
        .collect();

    tasks
        .into_par_iter()
        .map(|(i, trial)| {
            let inst = &instances[i];
            let seed = spec.base_seed + trial;
            let (record, feasible) = match &inst.data {
                InstanceData::Smtwtp(data) => {
                    let adapter = SmtwtpAdapter::new(data);
                    let n = data.n();
                    let rec = run_one(
                        &adapter,
                        &spec.algorithm,
                        |step| generic_vns_params(3, n, step, spec.max_evals, seed),
                        spec.max_evals,
                        seed,
                    )?;
                    strip(rec)
                }
                InstanceData::Lrp(data) => {
                    let adapter = LrpAdapter::new(data);
                    let rec = run_one(
                        &adapter,
                        &spec.algorithm,
                        |step| {
                            let mut p =
                                VnsParams::lrp_default(data.n(), data.m(), spec.max_evals, seed);
                            p.step = step;
                            p
                        },
                        spec.max_evals,
                        seed,
                    )?;
                    let feasible = lrp::is_feasible(data, &rec.best_solution);
                    let (r, _) = strip(rec);
                    (r, feasible)
                }
            };
            Ok(TrialOutcome {
                row: TrialRow {
                    instance: inst.id.clone(),
                    algorithm: label.clone(),
                    trial,
                    seed,
                    best_fitness: record.best_fitness,
                    evals_to_best: record.evals_to_best,
                    evals_total: record.evals_total,
                    h_max: record.h_max,
                    feasible,
                    termination: record.termination.clone(),
                },
                trace: TrialTrace {
                    instance: inst.id.clone(),
                    algorithm: label.clone(),
                    trial,
                    points: record.trace,
                },
            })
        })
        .collect()
}

/// Solution-free view of a run record, so outcomes of different problems
/// share one shape.
struct PlainRecord {
    best_fitness: f64,
    evals_to_best: u64,
    evals_total: u64,
    h_max: usize,
    termination: String,
    trace: Vec<(u64, f64)>,
}

fn strip<S>(rec: RunRecord<S>) -> (PlainRecord, bool) {
    (
        PlainRecord {
            best_fitness: rec.best_fitness.value(),
            evals_to_best: rec.evals_to_best,
            evals_total: rec.evals_total,
            h_max: rec.h_max,
            termination: termination_label(rec.termination).to_string(),
            trace: rec.trace.iter().map(|p| (p.evals, p.fitness.value())).collect(),
        },
        true,
    )
}
