//! Analysis metrics. All functions are pure over row/trace tables, so
//! recomputing from persisted CSVs gives the same numbers as in-memory data.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{bail, Result};
use serde::Serialize;

use crate::rows::{TrialRow, TrialTrace};

/// Fitness values this close count as equal; keeps float noise from
/// disqualifying an exact optimum reproduced through CSV.
const FITNESS_EPS: f64 = 1e-9;

/// Percentage gap to a reference value; the denominator is clamped to 1 so
/// zero-valued optima stay in the averages.
fn gap(f: f64, reference: f64) -> f64 {
    100.0 * (f - reference) / reference.max(1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    /// Instances whose best trial hits the optimum.
    pub n_opt: usize,
    /// Mean percentage deviation from optimum over every trial.
    pub mean_deviation: f64,
    /// Mean evaluations consumed per trial.
    pub mean_evals: f64,
    /// Mean over instances of the percentage of optimal trials.
    pub success_rate: f64,
}

fn optimum_for(row: &TrialRow, optima: &BTreeMap<String, f64>) -> Result<f64> {
    let Some(&f_opt) = optima.get(&row.instance) else {
        bail!("no reference value for instance {}", row.instance);
    };
    if row.best_fitness < f_opt - FITNESS_EPS {
        bail!(
            "trial fitness {} undercuts the stated optimum {f_opt} on {}",
            row.best_fitness,
            row.instance
        );
    }
    Ok(f_opt)
}

pub fn summarize(rows: &[TrialRow], optima: &BTreeMap<String, f64>) -> Result<Summary> {
    if rows.is_empty() {
        bail!("no rows to summarize");
    }
    let mut per_instance: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut deviation_sum = 0.0;
    let mut evals_sum = 0.0;
    for row in rows {
        let f_opt = optimum_for(row, optima)?;
        deviation_sum += gap(row.best_fitness, f_opt);
        evals_sum += row.evals_total as f64;
        let hit = row.best_fitness <= f_opt + FITNESS_EPS;
        let e = per_instance.entry(&row.instance).or_insert((0, 0));
        e.0 += hit as usize;
        e.1 += 1;
    }
    let n_opt = per_instance.values().filter(|(hits, _)| *hits > 0).count();
    let success_rate = 100.0
        * per_instance
            .values()
            .map(|&(hits, total)| hits as f64 / total as f64)
            .sum::<f64>()
        / per_instance.len() as f64;
    Ok(Summary {
        n_opt,
        mean_deviation: deviation_sum / rows.len() as f64,
        mean_evals: evals_sum / rows.len() as f64,
        success_rate,
    })
}

/// Run-time distribution: cumulative fraction of trials that reach fitness
/// `f_opt * (1 + delta/100)` as a function of evaluations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RtdCurve {
    pub delta: f64,
    pub points: Vec<(u64, f64)>,
}

pub fn rtd(traces: &[TrialTrace], optima: &BTreeMap<String, f64>, delta: f64) -> Result<RtdCurve> {
    if traces.is_empty() {
        bail!("no traces for run-time distribution");
    }
    let mut hits: Vec<u64> = Vec::new();
    for t in traces {
        let Some(&f_opt) = optima.get(&t.instance) else {
            bail!("no reference value for instance {}", t.instance);
        };
        let threshold = f_opt * (1.0 + delta / 100.0) + FITNESS_EPS;
        if let Some(&(evals, _)) = t.points.iter().find(|(_, f)| *f <= threshold) {
            hits.push(evals);
        }
    }
    hits.sort_unstable();
    let total = traces.len() as f64;
    let mut points = Vec::new();
    let mut i = 0;
    while i < hits.len() {
        let e = hits[i];
        while i < hits.len() && hits[i] == e {
            i += 1;
        }
        points.push((e, i as f64 / total));
    }
    Ok(RtdCurve { delta, points })
}

/// Borda count over instances: per instance the algorithms are ranked by
/// ascending gap (ties share the mean of the tied ranks) and ranks are
/// summed. Smaller totals are better.
pub fn borda(
    per_instance_gaps: &BTreeMap<String, BTreeMap<String, f64>>,
) -> Result<BTreeMap<String, f64>> {
    if per_instance_gaps.is_empty() {
        bail!("no algorithms to rank");
    }
    let instances: BTreeSet<&String> =
        per_instance_gaps.values().next().unwrap().keys().collect();
    for (algo, gaps) in per_instance_gaps {
        if gaps.keys().collect::<BTreeSet<_>>() != instances {
            bail!("algorithm {algo} is missing gaps for some instances");
        }
    }
    let mut scores: BTreeMap<String, f64> =
        per_instance_gaps.keys().map(|a| (a.clone(), 0.0)).collect();
    for inst in instances {
        let mut entries: Vec<(&String, f64)> = per_instance_gaps
            .iter()
            .map(|(algo, gaps)| (algo, gaps[inst]))
            .collect();
        entries.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut i = 0;
        while i < entries.len() {
            let mut j = i;
            while j < entries.len() && entries[j].1 == entries[i].1 {
                j += 1;
            }
            // Ranks are 1-based; a tie block spanning ranks i+1..=j gets their mean.
            let rank = (i + 1 + j) as f64 / 2.0;
            for entry in &entries[i..j] {
                *scores.get_mut(entry.0).unwrap() += rank;
            }
            i = j;
        }
    }
    Ok(scores)
}

/// Mean gap to the reference value per instance, averaged over trials.
pub fn per_instance_mean_gap(
    rows: &[TrialRow],
    bounds: &BTreeMap<String, f64>,
) -> Result<BTreeMap<String, f64>> {
    let mut acc: BTreeMap<String, (f64, usize)> = BTreeMap::new();
    for row in rows {
        let Some(&bound) = bounds.get(&row.instance) else {
            bail!("no reference value for instance {}", row.instance);
        };
        let e = acc.entry(row.instance.clone()).or_insert((0.0, 0));
        e.0 += gap(row.best_fitness, bound);
        e.1 += 1;
    }
    Ok(acc.into_iter().map(|(k, (sum, n))| (k, sum / n as f64)).collect())
}

/// Instance-wise sign comparison plus evaluation-effort ratio.
/// `n_gt` adds +1 per instance where `a` has the smaller mean gap, -1 where
/// `b` does, 0 on ties. `r_eval` divides `a`'s total evaluations by `b`'s;
/// `use_evals_to_best` switches both totals to evaluations-to-best.
pub fn head_to_head(
    rows_a: &[TrialRow],
    rows_b: &[TrialRow],
    bounds: &BTreeMap<String, f64>,
    use_evals_to_best: bool,
) -> Result<(i64, f64)> {
    let gaps_a = per_instance_mean_gap(rows_a, bounds)?;
    let gaps_b = per_instance_mean_gap(rows_b, bounds)?;
    if gaps_a.keys().ne(gaps_b.keys()) {
        bail!("the two row sets cover different instances");
    }
    if rows_a.len() != rows_b.len() {
        bail!("the two row sets have different trial counts");
    }
    let mut n_gt = 0i64;
    for (inst, ga) in &gaps_a {
        let gb = gaps_b[inst];
        if *ga < gb {
            n_gt += 1;
        } else if *ga > gb {
            n_gt -= 1;
        }
    }
    let effort = |rows: &[TrialRow]| -> f64 {
        rows.iter()
            .map(|r| if use_evals_to_best { r.evals_to_best } else { r.evals_total })
            .sum::<u64>() as f64
    };
    let denom = effort(rows_b);
    if denom == 0.0 {
        bail!("comparison baseline performed zero evaluations");
    }
    Ok((n_gt, effort(rows_a) / denom))
}
