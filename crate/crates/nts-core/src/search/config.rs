//! Strategy enums, run configuration and the per-run result record.

use crate::Fitness;

/// Identifier of the seedable generator driving every stochastic choice.
pub const RNG_ALGORITHM: &str = "chacha8";

/// How a single neighborhood exploration produces a candidate.
///
/// `FirstImprovement` / `BestImprovement` apply one move; the descent variants
/// iterate them until the neighborhood holds no improving neighbor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// FI: first improving neighbor in shuffled order, or the solution itself.
    FirstImprovement,
    /// BI: neighbor with minimum fitness, ties to the first encountered in
    /// deterministic order. May be worse than the current solution.
    BestImprovement,
    /// FD: iterate FI until no improving neighbor exists.
    FirstDescent,
    /// BD: iterate BI until no improving neighbor exists.
    BestDescent,
}

impl StepKind {
    pub fn is_descent(self) -> bool {
        matches!(self, StepKind::FirstDescent | StepKind::BestDescent)
    }
}

/// Whether a stepped solution becomes the new path head.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcceptKind {
    /// AA: accept iff the candidate strictly improves the head.
    Improving,
    /// AI: accept iff the candidate improves the best child seen at the head.
    BestChild,
    /// AT: accept improvements over the best child unconditionally, other
    /// head improvements with probability 1/depth.
    Adaptive,
}

/// How the backtrack target is chosen among entries with unused neighborhoods.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BacktrackKind {
    /// BR: uniform over candidates.
    Uniform,
    /// BH: tournament of two, keep the shallower entry.
    DepthTournament,
    /// BU: tournament of two, keep the entry with fewer used neighborhoods.
    UsageTournament,
}

/// One NTS variant: strategy triple plus budget and seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub step: StepKind,
    pub accept: AcceptKind,
    pub backtrack: BacktrackKind,
    pub max_evals: u64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(
        step: StepKind,
        accept: AcceptKind,
        backtrack: BacktrackKind,
        max_evals: u64,
        seed: u64,
    ) -> Self {
        assert!(max_evals >= 1, "max_evals must be at least 1");
        SearchConfig { step, accept, backtrack, max_evals, seed }
    }
}

/// Why a run stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// Every path entry was fully explored and backtracking found no target.
    PathEmpty,
    /// The evaluation budget was used up.
    BudgetExhausted,
}

/// Global-best improvement observed at a given evaluation count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TracePoint {
    pub evals: u64,
    pub fitness: Fitness,
}

/// Complete result of one search run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord<S> {
    pub best_solution: S,
    pub best_fitness: Fitness,
    pub evals_total: u64,
    pub evals_to_best: u64,
    /// Maximum trajectory path length observed (1 for path-less baselines).
    pub h_max: usize,
    /// One point per strict improvement of the global best, starting with the
    /// initial solution.
    pub trace: Vec<TracePoint>,
    pub termination: Termination,
    pub rng_algorithm: &'static str,
}
