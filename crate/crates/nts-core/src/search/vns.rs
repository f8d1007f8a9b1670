//! Variable neighborhood search baseline: random shaking of increasing
//! strength followed by a VND over composite neighborhoods.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{RunRecord, StepKind, Termination, RNG_ALGORITHM};
use super::step::{step_over, EvalCx};
use super::{NeighborOrder, NeighborhoodId, ProblemAdapter};

/// VNS parameters. Each union group is treated as one composite neighborhood
/// whose neighbor stream is the concatenation of its members' streams.
#[derive(Clone, Debug)]
pub struct VnsParams {
    pub shake_ids: Vec<NeighborhoodId>,
    pub union_groups: Vec<Vec<NeighborhoodId>>,
    /// Step kind of the inner VND (first improvement by default).
    pub step: StepKind,
    /// Maximum shake strength; the strength cycles back to 1 past it.
    pub max_shake: u64,
    pub max_evals: u64,
    pub seed: u64,
}

impl VnsParams {
    /// The tuned LRP configuration: VND over the six route/location neighborhood
    /// unions, shaking with client moves and depot relocation, strength capped
    /// at `n + m`.
    pub fn lrp_default(n: usize, m: usize, max_evals: u64, seed: u64) -> Self {
        let id = NeighborhoodId::new;
        VnsParams {
            shake_ids: vec![id(1), id(2), id(11)],
            union_groups: vec![
                vec![id(1), id(2)],
                vec![id(3), id(4)],
                vec![id(5), id(6)],
                vec![id(7), id(8)],
                vec![id(9), id(10)],
                vec![id(11)],
            ],
            step: StepKind::FirstImprovement,
            max_shake: (n + m) as u64,
            max_evals,
            seed,
        }
    }
}

/// One shake of strength `ell`: apply `ell` sequential random moves, each
/// drawn by picking a shake neighborhood uniformly and then a uniformly random
/// member move. Costs no evaluations.
fn shake<A: ProblemAdapter>(
    adapter: &A,
    s: &A::Solution,
    ell: u64,
    shake_ids: &[NeighborhoodId],
    rng: &mut dyn RngCore,
) -> A::Solution {
    let mut cur = s.clone();
    for _ in 0..ell {
        let id = shake_ids[rng.gen_range(0..shake_ids.len())];
        let order = NeighborOrder::shuffled_from(rng);
        if let Some(nb) = adapter.neighbors(&cur, id, order).next() {
            cur = nb;
        }
    }
    cur
}

/// Run the VNS loop until the evaluation budget is exhausted.
pub fn run_vns<A: ProblemAdapter>(adapter: &A, params: &VnsParams) -> RunRecord<A::Solution> {
    assert!(!params.union_groups.is_empty(), "need at least one VND group");
    assert!(!params.shake_ids.is_empty(), "need at least one shake neighborhood");
    assert!(params.max_shake >= 1);
    assert!(params.max_evals >= 1);

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cx = EvalCx::new(adapter, params.max_evals);

    let mut s = adapter.random_solution(&mut rng);
    let mut f = cx.eval(&s);
    let mut ell: u64 = 1;

    'outer: while !cx.exhausted() {
        let shaken = shake(adapter, &s, ell, &params.shake_ids, &mut rng);
        if cx.exhausted() {
            break;
        }
        let mut cur = shaken;
        let mut f_cur = cx.eval(&cur);

        // VND over the composite neighborhoods.
        let mut j = 0;
        while j < params.union_groups.len() {
            if cx.exhausted() {
                break 'outer;
            }
            let (stepped, f_sp) =
                step_over(&mut cx, &cur, f_cur, &params.union_groups[j], params.step, &mut rng);
            if f_sp < f_cur {
                cur = stepped;
                f_cur = f_sp;
                j = 0;
            } else {
                j += 1;
            }
        }

        if f_cur < f {
            s = cur;
            f = f_cur;
            ell = 1;
        } else {
            ell += 1;
            if ell > params.max_shake {
                ell = 1;
            }
        }
    }

    let (best_solution, best_fitness, evals_total, evals_to_best, trace) = cx.into_parts();
    RunRecord {
        best_solution,
        best_fitness,
        evals_total,
        evals_to_best,
        h_max: 1,
        trace,
        termination: Termination::BudgetExhausted,
        rng_algorithm: RNG_ALGORITHM,
    }
}
