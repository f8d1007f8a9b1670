//! Independent re-implementations of the two objective functions, checked
//! against the library evaluators on randomized and exhaustive inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nts_core::lrp::{self, LrpInstance, LrpSolution};
use nts_core::smtwtp::{self, SmtwtpInstance};

/// Brute-force timeline oracle: walk an explicit time axis unit by unit and
/// charge each job's weighted lateness once it finishes.
fn smtwtp_oracle(p: &[u64], w: &[u64], d: &[u64], perm: &[usize]) -> f64 {
    let mut clock: f64 = 0.0;
    let mut total: f64 = 0.0;
    for &job in perm {
        for _ in 0..p[job] {
            clock += 1.0;
        }
        let lateness = clock - d[job] as f64;
        if lateness > 0.0 {
            total += w[job] as f64 * lateness;
        }
    }
    total
}

#[test]
fn smtwtp_evaluate_matches_the_timeline_oracle_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=10usize);
        let p: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=10)).collect();
        let d: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=60)).collect();
        let inst = SmtwtpInstance::new(p.clone(), w.clone(), d.clone()).unwrap();
        let s = smtwtp::random_schedule(&inst, &mut rng);
        let expected = smtwtp_oracle(&p, &w, &d, s.perm());
        assert_eq!(smtwtp::evaluate(&inst, &s).value(), expected);
    }
}

/// Independent LRP oracle: collect the full edge list of every open route and
/// sum costs explicitly, then add penalties.
fn lrp_oracle(inst: &LrpInstance, routes: &[Vec<usize>]) -> f64 {
    let mut total = 0.0;
    for (j, route) in routes.iter().enumerate() {
        if route.is_empty() {
            continue;
        }
        total += inst.opening_cost()[j];
        let depot = inst.depot_index(j);
        let mut stops = vec![depot];
        stops.extend(route.iter().copied());
        stops.push(depot);
        for e in 0..stops.len() - 1 {
            total += inst.travel(stops[e], stops[e + 1]);
        }
        let load: f64 = route.iter().map(|&c| inst.demand()[c]).sum();
        let over = load - inst.capacity()[j];
        if over > 0.0 {
            total += inst.alpha() * over;
        }
    }
    total
}

fn random_lrp(rng: &mut ChaCha8Rng, n: usize, m: usize) -> LrpInstance {
    let coords: Vec<(f64, f64)> = (0..n + m)
        .map(|_| (rng.gen_range(0.0..100.0), rng.gen_range(0.0..100.0)))
        .collect();
    let demand: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0..20.0)).collect();
    let capacity: Vec<f64> = (0..m).map(|_| rng.gen_range(20.0..60.0)).collect();
    let opening: Vec<f64> = (0..m).map(|_| rng.gen_range(50.0..150.0)).collect();
    LrpInstance::from_coords(demand, capacity, opening, &coords, None, false).unwrap()
}

fn assignments(n: usize, m: usize) -> Vec<Vec<usize>> {
    // All m^n depot assignments.
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..m).map(move |d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

#[test]
fn lrp_evaluate_matches_the_oracle_over_all_small_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 4;
    let m = 2;
    let inst = random_lrp(&mut rng, n, m);
    let mut checked = 0;
    for assign in assignments(n, m) {
        let per_depot: Vec<Vec<usize>> = (0..m)
            .map(|d| (0..n).filter(|&c| assign[c] == d).collect())
            .collect();
        for order0 in permutations(&per_depot[0]) {
            for order1 in permutations(&per_depot[1]) {
                let routes = vec![order0.clone(), order1];
                let s = LrpSolution::new(routes.clone(), n).unwrap();
                let got = lrp::evaluate(&inst, &s).value();
                let want = lrp_oracle(&inst, &routes);
                assert!((got - want).abs() < 1e-9, "got {got}, oracle {want}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn single_out_and_back_route_costs_opening_plus_both_legs() {
    // travel(depot, client) = 7, opening 10 -> 10 + 7 + 7.
    let inst = LrpInstance::new(
        vec![1.0],
        vec![10.0],
        vec![10.0],
        vec![0.0, 7.0, 7.0, 0.0],
        5.0,
    )
    .unwrap();
    let s = LrpSolution::new(vec![vec![0]], 1).unwrap();
    assert_eq!(lrp::routing_and_opening_cost(&inst, &s).value(), 24.0);
    assert_eq!(lrp::evaluate(&inst, &s).value(), 24.0);
}

#[test]
fn penalty_formula_spot_check() {
    // alpha = 100, load 15 against capacity 10 -> 500.
    let inst = LrpInstance::new(
        vec![7.0, 8.0],
        vec![10.0],
        vec![0.0],
        vec![0.0; 9],
        100.0,
    )
    .unwrap();
    let s = LrpSolution::new(vec![vec![0, 1]], 2).unwrap();
    assert_eq!(lrp::penalty(&inst, &s).value(), 500.0);
    assert!(!lrp::is_feasible(&inst, &s));
}

#[test]
fn feasibility_is_zero_penalty() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let inst = random_lrp(&mut rng, 6, 3);
    for _ in 0..200 {
        let s = lrp::random_solution(&inst, &mut rng);
        assert_eq!(lrp::is_feasible(&inst, &s), lrp::penalty(&inst, &s).value() == 0.0);
        assert!(
            (lrp::evaluate(&inst, &s).value()
                - lrp::routing_and_opening_cost(&inst, &s).value()
                - lrp::penalty(&inst, &s).value())
            .abs()
                < 1e-9
        );
    }
}

#[test]
fn reversing_a_route_leaves_the_tour_cost_unchanged() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let inst = random_lrp(&mut rng, 6, 2);
    for _ in 0..100 {
        let s = lrp::random_solution(&inst, &mut rng);
        let mut reversed = s.routes().to_vec();
        for route in &mut reversed {
            route.reverse();
        }
        let r = LrpSolution::new(reversed, 6).unwrap();
        let a = lrp::routing_and_opening_cost(&inst, &s).value();
        let b = lrp::routing_and_opening_cost(&inst, &r).value();
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn random_lrp_solutions_are_uniform_over_assignments() {
    // n=2, m=2: 4 assignment patterns, chi-square at alpha = 0.01 (df=3).
    let inst = LrpInstance::new(
        vec![1.0, 1.0],
        vec![10.0, 10.0],
        vec![1.0, 1.0],
        vec![0.0; 16],
        1.0,
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut counts = [0u32; 4];
    for _ in 0..10_000 {
        let s = lrp::random_solution(&inst, &mut rng);
        let d0 = if s.routes()[0].contains(&0) { 0 } else { 1 };
        let d1 = if s.routes()[0].contains(&1) { 0 } else { 1 };
        counts[d0 * 2 + d1] += 1;
    }
    let expected = 2_500.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| {
            let diff = c as f64 - expected;
            diff * diff / expected
        })
        .sum();
    assert!(chi2 < 11.345, "chi-square {chi2} exceeds the 0.01 critical value");
}
