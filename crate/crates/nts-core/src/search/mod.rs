//! Problem-independent search engine: the neighborhood tree search itself and
//! the VND / VNS baselines it is compared against.

mod accept;
mod config;
mod nts;
mod path;
mod step;
mod vnd;
mod vns;

pub use accept::decide_accept;
pub use config::{AcceptKind, BacktrackKind, RunRecord, SearchConfig, StepKind, Termination, TracePoint, RNG_ALGORITHM};
pub use nts::run_nts;
pub use path::{backtrack, select_neighborhood, PathEntry, TrajectoryPath, UsageMask};
pub use step::{apply_step, StepResult};
pub use vnd::run_vnd;
pub use vns::{run_vns, VnsParams};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Fitness;

/// 1-based identifier of a neighborhood structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeighborhoodId(usize);

impl NeighborhoodId {
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "neighborhood ids are 1-based");
        NeighborhoodId(index)
    }

    /// 1-based index.
    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based index into usage masks and move tables.
    pub fn index0(self) -> usize {
        self.0 - 1
    }
}

/// Enumeration order requested from a neighbor stream.
///
/// `Shuffled` carries the seed of the per-call shuffle so that adapters stay
/// deterministic for a fixed engine seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborOrder {
    Deterministic,
    Shuffled(u64),
}

impl NeighborOrder {
    pub fn shuffled_from(rng: &mut dyn RngCore) -> Self {
        NeighborOrder::Shuffled(rng.next_u64())
    }
}

/// Interface a problem domain exposes to the engine.
///
/// `evaluate` must be deterministic for a fixed solution and `neighbors` must
/// yield each move of the named neighborhood exactly once per enumeration.
pub trait ProblemAdapter {
    type Solution: Clone;

    /// Number of neighborhood structures, `k`.
    fn neighborhood_count(&self) -> usize;

    fn evaluate(&self, solution: &Self::Solution) -> Fitness;

    fn random_solution(&self, rng: &mut dyn RngCore) -> Self::Solution;

    fn neighbors(
        &self,
        solution: &Self::Solution,
        id: NeighborhoodId,
        order: NeighborOrder,
    ) -> Box<dyn Iterator<Item = Self::Solution>>;
}

/// Iterator over a move list in the requested order.
///
/// The shuffled variant runs an incremental Fisher-Yates so that a stream
/// abandoned after a few items (first-improvement steps) does not pay for a
/// full shuffle.
pub struct MoveIter<T> {
    moves: Vec<T>,
    pos: usize,
    rng: Option<ChaCha8Rng>,
}

impl<T: Copy> MoveIter<T> {
    pub fn new(moves: Vec<T>, order: NeighborOrder) -> Self {
        let rng = match order {
            NeighborOrder::Deterministic => None,
            NeighborOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        MoveIter { moves, pos: 0, rng }
    }
}

impl<T: Copy> Iterator for MoveIter<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        if self.pos >= self.moves.len() {
            return None;
        }
        if let Some(rng) = &mut self.rng {
            let j = rng.gen_range(self.pos..self.moves.len());
            self.moves.swap(self.pos, j);
        }
        let item = self.moves[self.pos];
        self.pos += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.moves.len() - self.pos;
        (rest, Some(rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn shuffled_iter_is_a_permutation_of_the_moves() {
        let moves: Vec<u32> = (0..50).collect();
        let seen: HashSet<u32> =
            MoveIter::new(moves.clone(), NeighborOrder::Shuffled(7)).collect();
        assert_eq!(seen.len(), 50);
        let det: Vec<u32> = MoveIter::new(moves, NeighborOrder::Deterministic).collect();
        assert_eq!(det, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn shuffled_iter_is_reproducible_per_seed() {
        let moves: Vec<u32> = (0..20).collect();
        let a: Vec<u32> = MoveIter::new(moves.clone(), NeighborOrder::Shuffled(3)).collect();
        let b: Vec<u32> = MoveIter::new(moves, NeighborOrder::Shuffled(3)).collect();
        assert_eq!(a, b);
    }
}
