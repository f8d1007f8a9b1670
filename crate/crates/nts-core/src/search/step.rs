//! Step functions: single first/best-improvement moves and their descent
//! iterations, with exact evaluation accounting against a budget.

use rand::RngCore;

use super::config::{StepKind, TracePoint};
use super::{NeighborOrder, NeighborhoodId, ProblemAdapter};
use crate::Fitness;

/// Counts every `evaluate` call, enforces the budget, and tracks the global
/// best over all evaluated solutions (including rejected neighbors).
pub(crate) struct EvalCx<'a, A: ProblemAdapter> {
    adapter: &'a A,
    max_evals: u64,
    count: u64,
    best: Option<(A::Solution, Fitness)>,
    evals_to_best: u64,
    trace: Vec<TracePoint>,
}

impl<'a, A: ProblemAdapter> EvalCx<'a, A> {
    pub fn new(adapter: &'a A, max_evals: u64) -> Self {
        EvalCx {
            adapter,
            max_evals,
            count: 0,
            best: None,
            evals_to_best: 0,
            trace: Vec::new(),
        }
    }

    pub fn eval(&mut self, s: &A::Solution) -> Fitness {
        debug_assert!(!self.exhausted(), "evaluation past the budget");
        self.count += 1;
        let f = self.adapter.evaluate(s);
        let improved = match &self.best {
            Some((_, bf)) => f < *bf,
            None => true,
        };
        if improved {
            self.best = Some((s.clone(), f));
            self.evals_to_best = self.count;
            self.trace.push(TracePoint { evals: self.count, fitness: f });
        }
        f
    }

    pub fn exhausted(&self) -> bool {
        self.count >= self.max_evals
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn into_parts(self) -> (A::Solution, Fitness, u64, u64, Vec<TracePoint>) {
        let (sol, fit) = self.best.expect("no evaluation performed");
        (sol, fit, self.count, self.evals_to_best, self.trace)
    }
}

/// Result of one step application.
#[derive(Clone, Debug, PartialEq)]
pub struct StepResult<S> {
    pub solution: S,
    pub fitness: Fitness,
    pub evals_used: u64,
}

/// Best evaluated neighbor over the concatenated streams of `ids`, in
/// deterministic order. Ties go to the first encountered. `None` when the
/// streams are empty or the budget is already gone.
fn best_neighbor<A: ProblemAdapter>(
    cx: &mut EvalCx<A>,
    s: &A::Solution,
    ids: &[NeighborhoodId],
) -> Option<(A::Solution, Fitness)> {
    let mut best: Option<(A::Solution, Fitness)> = None;
    for &id in ids {
        for nb in cx.adapter.neighbors(s, id, NeighborOrder::Deterministic) {
            if cx.exhausted() {
                return best;
            }
            let f = cx.eval(&nb);
            if best.as_ref().map_or(true, |(_, bf)| f < *bf) {
                best = Some((nb, f));
            }
        }
    }
    best
}

/// First neighbor strictly better than `f_s`, enumerating each stream in
/// shuffled order. `None` when no improving neighbor exists or the budget
/// runs out first.
fn first_improving<A: ProblemAdapter>(
    cx: &mut EvalCx<A>,
    s: &A::Solution,
    f_s: Fitness,
    ids: &[NeighborhoodId],
    rng: &mut dyn RngCore,
) -> Option<(A::Solution, Fitness)> {
    for &id in ids {
        let order = NeighborOrder::shuffled_from(rng);
        for nb in cx.adapter.neighbors(s, id, order) {
            if cx.exhausted() {
                return None;
            }
            let f = cx.eval(&nb);
            if f < f_s {
                return Some((nb, f));
            }
        }
    }
    None
}

/// Apply one step over a composite neighborhood (the concatenation of the
/// streams named by `ids`). For single neighborhoods pass one id.
pub(crate) fn step_over<A: ProblemAdapter>(
    cx: &mut EvalCx<A>,
    s: &A::Solution,
    f_s: Fitness,
    ids: &[NeighborhoodId],
    kind: StepKind,
    rng: &mut dyn RngCore,
) -> (A::Solution, Fitness) {
    match kind {
        StepKind::BestImprovement => {
            best_neighbor(cx, s, ids).unwrap_or_else(|| (s.clone(), f_s))
        }
        StepKind::FirstImprovement => {
            first_improving(cx, s, f_s, ids, rng).unwrap_or_else(|| (s.clone(), f_s))
        }
        StepKind::BestDescent => {
            let mut cur = s.clone();
            let mut f = f_s;
            while !cx.exhausted() {
                match best_neighbor(cx, &cur, ids) {
                    Some((nb, fnb)) if fnb < f => {
                        cur = nb;
                        f = fnb;
                    }
                    _ => break,
                }
            }
            (cur, f)
        }
        StepKind::FirstDescent => {
            let mut cur = s.clone();
            let mut f = f_s;
            while !cx.exhausted() {
                match first_improving(cx, &cur, f, ids, rng) {
                    Some((nb, fnb)) => {
                        cur = nb;
                        f = fnb;
                    }
                    None => break,
                }
            }
            (cur, f)
        }
    }
}

/// Standalone step application with its own evaluation budget.
///
/// `f_s` must be the fitness of `s`; it is not re-evaluated. The enumeration
/// stops early when `eval_budget` is exhausted and the incumbent is returned.
pub fn apply_step<A: ProblemAdapter>(
    adapter: &A,
    s: &A::Solution,
    f_s: Fitness,
    id: NeighborhoodId,
    kind: StepKind,
    rng: &mut dyn RngCore,
    eval_budget: u64,
) -> StepResult<A::Solution> {
    assert!(eval_budget >= 1, "eval_budget must be at least 1");
    let mut cx = EvalCx::new(adapter, eval_budget);
    let (solution, fitness) = step_over(&mut cx, s, f_s, &[id], kind, rng);
    StepResult { solution, fitness, evals_used: cx.count() }
}
