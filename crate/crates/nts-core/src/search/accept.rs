//! Acceptance / branching criteria.

use rand::{Rng, RngCore};

use super::config::AcceptKind;
use super::path::PathEntry;
use crate::Fitness;

/// Decide whether a stepped solution with fitness `f_sp` becomes the new head.
///
/// Evaluated against the head entry's state *before* the engine folds `f_sp`
/// into `best_child_fitness`. The adaptive rule accepts candidates beating the
/// best child unconditionally and other head improvements with probability
/// `1/depth`, so branching is certain at the root and increasingly unlikely
/// deeper in the tree.
pub fn decide_accept<S>(
    kind: AcceptKind,
    entry: &PathEntry<S>,
    f_sp: Fitness,
    rng: &mut dyn RngCore,
) -> bool {
    match kind {
        AcceptKind::Improving => f_sp < entry.fitness,
        AcceptKind::BestChild => f_sp < entry.best_child_fitness,
        AcceptKind::Adaptive => {
            if f_sp < entry.best_child_fitness {
                true
            } else if f_sp < entry.fitness {
                rng.gen_bool(1.0 / entry.depth as f64)
            } else {
                false
            }
        }
    }
}
