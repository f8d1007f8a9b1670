//! Acceptance suite. Each criterion prints one `criterion N ...: PASS/FAIL`
//! line and asserts its outcome. Instance sets are generated from fixed
//! seeds so every run sees the same data.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nts_bench::rows::{TrialRow, TERMINATION_PATH_EMPTY};
use nts_bench::{
    borda, per_instance_mean_gap, rtd, run_experiment, Algorithm, ExperimentSpec, Instance,
    InstanceData, Problem, TrialOutcome, TrialTrace,
};
use nts_core::lrp::{self, LrpInstance, LrpSolution};
use nts_core::smtwtp::{self, Schedule, SmtwtpInstance};
use nts_core::{
    decide_accept, run_nts, AcceptKind, BacktrackKind, Fitness, PathEntry, SearchConfig, StepKind,
};

fn verdict(criterion: usize, name: &str, pass: bool, detail: &str) {
    if pass {
        println!("criterion {criterion} ({name}): PASS");
    } else {
        println!("criterion {criterion} ({name}): FAIL ({detail})");
    }
    assert!(pass, "criterion {criterion} ({name}) failed: {detail}");
}

/// Weighted-tardiness instance in the usual benchmark style: processing
/// times 1..100, weights 1..10, due dates spread around a fraction of the
/// total processing time.
fn random_smtwtp(rng: &mut ChaCha8Rng, n: usize) -> SmtwtpInstance {
    let p: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=100)).collect();
    let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=10)).collect();
    let total: u64 = p.iter().sum();
    let lo = total / 5;
    let hi = total;
    let d: Vec<u64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    SmtwtpInstance::new(p, w, d).unwrap()
}

fn smtwtp_set(seed: u64, count: usize, n: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| Instance {
            id: format!("gen{n}-{i:02}"),
            data: InstanceData::Smtwtp(random_smtwtp(&mut rng, n)),
        })
        .collect()
}

/// Planar location-routing instance with depot capacities sized so that a
/// balanced assignment is feasible but careless ones are not.
fn random_lrp(rng: &mut ChaCha8Rng, n: usize, m: usize) -> LrpInstance {
    let coords: Vec<(f64, f64)> = (0..n + m)
        .map(|_| (rng.gen_range(0.0..100.0), rng.gen_range(0.0..100.0)))
        .collect();
    let demand: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0..10.0) as f64).collect();
    let total: f64 = demand.iter().sum();
    let capacity: Vec<f64> = (0..m).map(|_| 1.3 * total / m as f64).collect();
    let opening: Vec<f64> = (0..m).map(|_| rng.gen_range(50.0..150.0)).collect();
    LrpInstance::from_coords(demand, capacity, opening, &coords, None, false).unwrap()
}

fn nts_spec(
    problem: Problem,
    step: StepKind,
    accept: AcceptKind,
    backtrack: BacktrackKind,
    trials: u64,
    base_seed: u64,
    max_evals: u64,
) -> ExperimentSpec {
    ExperimentSpec {
        problem,
        algorithm: Algorithm::Nts { step, accept, backtrack },
        trials,
        base_seed,
        max_evals,
    }
}

fn exhaustive_optimum(inst: &SmtwtpInstance) -> f64 {
    let n = inst.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    // Heap's algorithm over all n! schedules.
    let mut c = vec![0usize; n];
    best = best.min(smtwtp::evaluate(inst, &Schedule::new(perm.clone()).unwrap()).value());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(smtwtp::evaluate(inst, &Schedule::new(perm.clone()).unwrap()).value());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

#[test]
fn criterion_1_oracle_equivalence() {
    // Independent timeline oracle against the evaluator.
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut mismatches = 0;
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=10usize);
        let inst = random_smtwtp(&mut rng, n);
        let s = smtwtp::random_schedule(&inst, &mut rng);
        let mut clock = 0u64;
        let mut oracle = 0.0;
        for &job in s.perm() {
            clock += inst.processing_times()[job];
            let late = clock.saturating_sub(inst.due_dates()[job]);
            oracle += (inst.weights()[job] * late) as f64;
        }
        if smtwtp::evaluate(&inst, &s).value() != oracle {
            mismatches += 1;
        }
    }

    // Search quality against exhaustive optima on small instances.
    let mut below = 0;
    let mut hits = 0;
    let count = 60;
    for i in 0..count {
        let n = 4 + (i % 5); // 4..=8 jobs
        let inst = random_smtwtp(&mut rng, n);
        let optimum = exhaustive_optimum(&inst);
        let adapter = smtwtp::SmtwtpAdapter::new(&inst);
        let config = SearchConfig::new(
            StepKind::FirstDescent,
            AcceptKind::Improving,
            BacktrackKind::Uniform,
            100_000,
            1_000 + i as u64,
        );
        let rec = run_nts(&adapter, &config);
        if rec.best_fitness.value() < optimum {
            below += 1;
        }
        if rec.best_fitness.value() == optimum {
            hits += 1;
        }
    }
    let rate = hits as f64 / count as f64;
    verdict(
        1,
        "oracle equivalence",
        mismatches == 0 && below == 0 && rate >= 0.95,
        &format!("{mismatches} oracle mismatches, {below} below optimum, hit rate {rate:.3}"),
    );
}

fn path_length_runs() -> Vec<TrialOutcome> {
    let instances = smtwtp_set(202, 10, 40);
    let spec = nts_spec(
        Problem::Smtwtp,
        StepKind::FirstDescent,
        AcceptKind::Improving,
        BacktrackKind::Uniform,
        30,
        500,
        10_000_000,
    );
    run_experiment(&spec, &instances).unwrap()
}

#[test]
fn criteria_2_and_3_path_length_and_termination() {
    let outcomes = path_length_runs();
    let rows: Vec<&TrialRow> = outcomes.iter().map(|o| &o.row).collect();

    let max_h = rows.iter().map(|r| r.h_max).max().unwrap();
    let mean_h = rows.iter().map(|r| r.h_max as f64).sum::<f64>() / rows.len() as f64;
    verdict(
        2,
        "path length bounds",
        max_h <= 16 && mean_h <= 8.0,
        &format!("max h {max_h}, mean h {mean_h:.2}"),
    );

    let exhausted = rows.iter().filter(|r| r.termination != TERMINATION_PATH_EMPTY).count();
    verdict(
        3,
        "full-descent runs end with an empty path",
        exhausted == 0,
        &format!("{exhausted} of {} trials hit the evaluation budget", rows.len()),
    );
}

#[test]
fn criterion_4_directional_comparison_against_vnd_restart() {
    let instances = smtwtp_set(303, 20, 100);
    let trials = 5;
    let budget = 1_000_000;
    let base_seed = 900;
    let nts = nts_spec(
        Problem::Smtwtp,
        StepKind::FirstImprovement,
        AcceptKind::Improving,
        BacktrackKind::Uniform,
        trials,
        base_seed,
        budget,
    );
    let vnd = ExperimentSpec {
        problem: Problem::Smtwtp,
        algorithm: Algorithm::Vnd {
            ordering: vec![1, 2, 3].into_iter().map(nts_core::NeighborhoodId::new).collect(),
            step: StepKind::FirstImprovement,
            restart: true,
        },
        trials,
        base_seed,
        max_evals: budget,
    };
    let rows_nts: Vec<TrialRow> =
        run_experiment(&nts, &instances).unwrap().into_iter().map(|o| o.row).collect();
    let rows_vnd: Vec<TrialRow> =
        run_experiment(&vnd, &instances).unwrap().into_iter().map(|o| o.row).collect();

    // Reference optima: best fitness observed by either algorithm.
    let mut best: BTreeMap<String, f64> = BTreeMap::new();
    for r in rows_nts.iter().chain(&rows_vnd) {
        let e = best.entry(r.instance.clone()).or_insert(f64::INFINITY);
        *e = e.min(r.best_fitness);
    }

    let group_stats = |rows: &[TrialRow], trial: u64| -> (f64, usize) {
        let group: Vec<&TrialRow> = rows.iter().filter(|r| r.trial == trial).collect();
        let dev = group
            .iter()
            .map(|r| 100.0 * (r.best_fitness - best[&r.instance]) / best[&r.instance].max(1.0))
            .sum::<f64>()
            / group.len() as f64;
        let n_opt = group.iter().filter(|r| r.best_fitness <= best[&r.instance]).count();
        (dev, n_opt)
    };

    let mut wins = 0;
    let mut detail = String::new();
    for t in 0..trials {
        let (dev_a, opt_a) = group_stats(&rows_nts, t);
        let (dev_b, opt_b) = group_stats(&rows_vnd, t);
        let win = dev_a <= dev_b && opt_a >= opt_b;
        wins += win as usize;
        detail.push_str(&format!(
            "[group {t}: dev {dev_a:.3} vs {dev_b:.3}, n_opt {opt_a} vs {opt_b}] "
        ));
    }
    verdict(4, "tree search beats restarted descent", wins >= 4, detail.trim());
}

#[test]
fn criterion_5_backtracking_effort_ordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let instances: Vec<Instance> = (0..10)
        .map(|i| Instance {
            id: format!("lrp20-5-{i:02}"),
            data: InstanceData::Lrp(random_lrp(&mut rng, 20, 5)),
        })
        .collect();
    let trials = 3;
    let total_evals = |backtrack: BacktrackKind| -> Vec<u64> {
        let spec = nts_spec(
            Problem::Lrp,
            StepKind::FirstDescent,
            AcceptKind::Improving,
            backtrack,
            trials,
            77,
            1_000_000,
        );
        let outcomes = run_experiment(&spec, &instances).unwrap();
        (0..instances.len())
            .map(|i| {
                outcomes[i * trials as usize..(i + 1) * trials as usize]
                    .iter()
                    .map(|o| o.row.evals_total)
                    .sum()
            })
            .collect()
    };
    let bh = total_evals(BacktrackKind::DepthTournament);
    let br = total_evals(BacktrackKind::Uniform);
    let bu = total_evals(BacktrackKind::UsageTournament);
    let ordered = (0..instances.len()).filter(|&i| bh[i] < br[i] && br[i] < bu[i]).count();
    verdict(
        5,
        "shallow backtracking is cheapest, usage-based dearest",
        ordered >= 8,
        &format!("ordering held on {ordered}/10 instances; bh={bh:?} br={br:?} bu={bu:?}"),
    );
}

#[test]
fn criterion_6_property_suites() {
    let mut failures: Vec<String> = Vec::new();

    // Neighbor-count closed forms.
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for n in 2..=8usize {
        let inst = random_smtwtp(&mut rng, n);
        let s = smtwtp::random_schedule(&inst, &mut rng);
        let counts = [
            (smtwtp::MoveKind::Exchange, n - 1),
            (smtwtp::MoveKind::Swap, n * (n - 1) / 2),
            (smtwtp::MoveKind::Insert, n * (n - 1)),
        ];
        for (kind, expected) in counts {
            let got =
                smtwtp::neighbors(&s, kind, nts_core::NeighborOrder::Deterministic).count();
            if got != expected {
                failures.push(format!("{kind:?} count {got} != {expected} at n={n}"));
            }
        }
    }
    for r in 2..=6usize {
        let routes = vec![(0..r).collect::<Vec<usize>>(), vec![], vec![]];
        let s = LrpSolution::new(routes, r).unwrap();
        let n1 = lrp::neighbors(&s, nts_core::NeighborhoodId::new(1), nts_core::NeighborOrder::Deterministic)
            .count();
        if n1 != r * (r - 1) {
            failures.push(format!("reinsert count {n1} != {} at r={r}", r * (r - 1)));
        }
    }

    // Client conservation over 10,000 random moves across all neighborhoods.
    let inst = random_lrp(&mut rng, 12, 3);
    let mut s = lrp::random_solution(&inst, &mut rng);
    for step in 0..10_000u64 {
        let id = nts_core::NeighborhoodId::new(1 + (step as usize % 11));
        let order = nts_core::NeighborOrder::Shuffled(step);
        if let Some(next) = lrp::neighbors(&s, id, order).next() {
            s = next;
        }
        let mut served: Vec<usize> = s.routes().iter().flatten().copied().collect();
        served.sort_unstable();
        if served != (0..12).collect::<Vec<_>>() {
            failures.push(format!("client set broken after move {step} in neighborhood {id:?}"));
            break;
        }
    }

    // Determinism: identical records for identical seeds.
    let inst40 = random_smtwtp(&mut rng, 30);
    let adapter = smtwtp::SmtwtpAdapter::new(&inst40);
    let config = SearchConfig::new(
        StepKind::FirstDescent,
        AcceptKind::Adaptive,
        BacktrackKind::UsageTournament,
        50_000,
        9,
    );
    if run_nts(&adapter, &config) != run_nts(&adapter, &config) {
        failures.push("repeated runs with one seed differ".into());
    }

    // Borda rank-sum conservation with ties.
    let gaps: BTreeMap<String, BTreeMap<String, f64>> = [
        ("a", vec![0.0, 2.0, 2.0, 1.0]),
        ("b", vec![1.0, 2.0, 0.0, 1.0]),
        ("c", vec![0.0, 5.0, 3.0, 1.0]),
    ]
    .into_iter()
    .map(|(algo, gs)| {
        (
            algo.to_string(),
            gs.into_iter().enumerate().map(|(i, g)| (format!("i{i}"), g)).collect(),
        )
    })
    .collect();
    let scores = borda(&gaps).unwrap();
    let sum: f64 = scores.values().sum();
    if sum != 4.0 * 6.0 {
        failures.push(format!("Borda rank sum {sum} != 24"));
    }

    // Run-time distribution monotonicity from real traces.
    let instances = smtwtp_set(707, 3, 20);
    let spec = nts_spec(
        Problem::Smtwtp,
        StepKind::FirstImprovement,
        AcceptKind::Improving,
        BacktrackKind::Uniform,
        10,
        1,
        20_000,
    );
    let outcomes = run_experiment(&spec, &instances).unwrap();
    let mut best: BTreeMap<String, f64> = BTreeMap::new();
    for o in &outcomes {
        let e = best.entry(o.row.instance.clone()).or_insert(f64::INFINITY);
        *e = e.min(o.row.best_fitness);
    }
    let traces: Vec<TrialTrace> = outcomes.into_iter().map(|o| o.trace).collect();
    let curve = rtd(&traces, &best, 10.0).unwrap();
    if curve.points.is_empty() {
        failures.push("empty run-time distribution".into());
    }
    for pair in curve.points.windows(2) {
        if pair[0].1 > pair[1].1 || pair[0].0 >= pair[1].0 {
            failures.push("run-time distribution is not monotone".into());
            break;
        }
    }
    if curve.points.last().is_some_and(|(_, p)| *p > 1.0) {
        failures.push("run-time distribution exceeds 1".into());
    }

    // per_instance_mean_gap feeds borda and h2h; sanity-check the averaging.
    let two_rows = |f1: f64, f2: f64| -> Vec<TrialRow> {
        [f1, f2]
            .iter()
            .enumerate()
            .map(|(t, &f)| TrialRow {
                instance: "x".into(),
                algorithm: "a".into(),
                trial: t as u64,
                seed: t as u64,
                best_fitness: f,
                evals_to_best: 1,
                evals_total: 2,
                h_max: 1,
                feasible: true,
                termination: TERMINATION_PATH_EMPTY.into(),
            })
            .collect()
    };
    let gaps = per_instance_mean_gap(
        &two_rows(102.0, 106.0),
        &[("x".to_string(), 100.0)].into_iter().collect(),
    )
    .unwrap();
    if gaps["x"] != 4.0 {
        failures.push(format!("mean gap {} != 4.0", gaps["x"]));
    }

    verdict(6, "property suites", failures.is_empty(), &failures.join("; "));
}

#[test]
fn criterion_7_formula_spot_checks() {
    // Penalty: alpha 100, load 15, capacity 10.
    let inst = LrpInstance::new(
        vec![6.0, 9.0],
        vec![10.0],
        vec![0.0],
        vec![0.0; 9],
        100.0,
    )
    .unwrap();
    let s = LrpSolution::new(vec![vec![0, 1]], 2).unwrap();
    let penalty = lrp::penalty(&inst, &s).value();

    // Depth-4 acceptance probability for a non-improving move.
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut accepted = 0u32;
    let trials = 10_000;
    for _ in 0..trials {
        let entry = PathEntry {
            solution: (),
            fitness: Fitness::new(10.0),
            usage: nts_core::UsageMask::new(3),
            best_child_fitness: Fitness::new(5.0),
            depth: 4,
        };
        // Worse than the best child seen, better than the entry itself.
        if decide_accept(AcceptKind::Adaptive, &entry, Fitness::new(8.0), &mut rng) {
            accepted += 1;
        }
    }
    let freq = accepted as f64 / trials as f64;
    verdict(
        7,
        "formula spot checks",
        penalty == 500.0 && (freq - 0.25).abs() <= 0.02,
        &format!("penalty {penalty}, depth-4 acceptance frequency {freq:.4}"),
    );
}
