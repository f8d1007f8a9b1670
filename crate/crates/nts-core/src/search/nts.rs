//! The neighborhood tree search loop.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::accept::decide_accept;
use super::config::{RunRecord, SearchConfig, Termination, RNG_ALGORITHM};
use super::path::{backtrack, select_neighborhood, TrajectoryPath};
use super::step::{step_over, EvalCx};
use super::ProblemAdapter;

/// Run one NTS search. Deterministic for a fixed `(adapter, config)`.
///
/// The loop: take the path head, pick an unused neighborhood uniformly at
/// random, apply the step function, mark the neighborhood used, then either
/// push the stepped solution as the new head (acceptance), keep exploring the
/// head (unused neighborhoods remain), or backtrack. Terminates when the path
/// empties or the evaluation budget is reached.
pub fn run_nts<A: ProblemAdapter>(adapter: &A, config: &SearchConfig) -> RunRecord<A::Solution> {
    assert!(config.max_evals >= 1);
    let k = adapter.neighborhood_count();
    assert!(k >= 1, "adapter must expose at least one neighborhood");

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cx = EvalCx::new(adapter, config.max_evals);

    let s0 = adapter.random_solution(&mut rng);
    let f0 = cx.eval(&s0);
    let mut path = TrajectoryPath::new();
    path.push(s0, f0, k);
    let mut h_max = 1;

    let termination = loop {
        if cx.exhausted() {
            break Termination::BudgetExhausted;
        }
        if path.is_empty() {
            break Termination::PathEmpty;
        }

        let head = path.head().unwrap();
        let id = select_neighborhood(&head.usage, &mut rng);
        let head_solution = head.solution.clone();
        let head_fitness = head.fitness;

        let (stepped, f_sp) =
            step_over(&mut cx, &head_solution, head_fitness, &[id], config.step, &mut rng);

        let head = path.head_mut().unwrap();
        head.usage.mark(id);
        let accepted = decide_accept(config.accept, head, f_sp, &mut rng);
        head.best_child_fitness = head.best_child_fitness.min(f_sp);

        if accepted {
            path.push(stepped, f_sp, k);
            h_max = h_max.max(path.len());
        } else if path.head().unwrap().usage.all_used() {
            backtrack(&mut path, config.backtrack, &mut rng);
        }
    };

    let (best_solution, best_fitness, evals_total, evals_to_best, trace) = cx.into_parts();
    RunRecord {
        best_solution,
        best_fitness,
        evals_total,
        evals_to_best,
        h_max,
        trace,
        termination,
        rng_algorithm: RNG_ALGORITHM,
    }
}
