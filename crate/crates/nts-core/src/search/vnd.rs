//! Variable neighborhood descent baseline, with optional random restarts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::config::{RunRecord, StepKind, Termination, RNG_ALGORITHM};
use super::step::{step_over, EvalCx};
use super::{NeighborhoodId, ProblemAdapter};

/// Classical VND: descend through `ordering`, resetting to the first
/// neighborhood on every improvement and advancing on failure; done when the
/// last neighborhood fails. With `restart` the descent reinitializes from a
/// fresh random solution until the budget runs out, tracking the global best
/// across restarts.
pub fn run_vnd<A: ProblemAdapter>(
    adapter: &A,
    ordering: &[NeighborhoodId],
    step: StepKind,
    restart: bool,
    max_evals: u64,
    seed: u64,
) -> RunRecord<A::Solution> {
    let k = adapter.neighborhood_count();
    assert!(max_evals >= 1);
    assert_eq!(ordering.len(), k, "ordering must cover every neighborhood");
    {
        let mut seen = vec![false; k];
        for id in ordering {
            assert!(!seen[id.index0()], "ordering must be a permutation of 1..=k");
            seen[id.index0()] = true;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cx = EvalCx::new(adapter, max_evals);

    let termination = 'outer: loop {
        if cx.exhausted() {
            break Termination::BudgetExhausted;
        }
        let mut s = adapter.random_solution(&mut rng);
        let mut f = cx.eval(&s);

        let mut j = 0;
        while j < ordering.len() {
            if cx.exhausted() {
                break 'outer Termination::BudgetExhausted;
            }
            let (stepped, f_sp) = step_over(&mut cx, &s, f, &[ordering[j]], step, &mut rng);
            if f_sp < f {
                s = stepped;
                f = f_sp;
                j = 0;
            } else {
                j += 1;
            }
        }

        if !restart {
            break Termination::PathEmpty;
        }
    };

    let (best_solution, best_fitness, evals_total, evals_to_best, trace) = cx.into_parts();
    RunRecord {
        best_solution,
        best_fitness,
        evals_total,
        evals_to_best,
        h_max: 1,
        trace,
        termination,
        rng_algorithm: RNG_ALGORITHM,
    }
}
