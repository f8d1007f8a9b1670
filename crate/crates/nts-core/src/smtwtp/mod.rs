//! Single Machine Total Weighted Tardiness Problem: minimize
//! `sum w_j * max(0, C_j - d_j)` over job permutations on one machine.
//!
//! Three standard permutation neighborhoods are provided: adjacent exchange,
//! general pairwise swap, and remove-reinsert.

mod moves;
mod parse;

pub use moves::{neighbors, MoveKind};
pub use parse::{
    format_single, load_optima, parse_orlib, parse_single, serialize_orlib, SmtwtpError,
    ORLIB_SET_SIZE,
};

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::search::{NeighborOrder, NeighborhoodId, ProblemAdapter};
use crate::Fitness;

/// Job data: processing times, weights and due dates, all of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmtwtpInstance {
    p: Vec<u64>,
    w: Vec<u64>,
    d: Vec<u64>,
}

impl SmtwtpInstance {
    pub fn new(p: Vec<u64>, w: Vec<u64>, d: Vec<u64>) -> Result<Self, SmtwtpError> {
        if p.len() != w.len() || p.len() != d.len() {
            return Err(SmtwtpError::LengthMismatch {
                p: p.len(),
                w: w.len(),
                d: d.len(),
            });
        }
        if let Some(j) = p.iter().position(|&t| t == 0) {
            return Err(SmtwtpError::ZeroProcessingTime { job: j });
        }
        Ok(SmtwtpInstance { p, w, d })
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn processing_times(&self) -> &[u64] {
        &self.p
    }

    pub fn weights(&self) -> &[u64] {
        &self.w
    }

    pub fn due_dates(&self) -> &[u64] {
        &self.d
    }
}

/// A job permutation (0-based job indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    perm: Vec<usize>,
}

impl Schedule {
    /// Validates that `perm` is a bijection on `0..n`.
    pub fn new(perm: Vec<usize>) -> Result<Self, SmtwtpError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &j in &perm {
            if j >= n || seen[j] {
                return Err(SmtwtpError::InvalidPermutation);
            }
            seen[j] = true;
        }
        Ok(Schedule { perm })
    }

    pub fn identity(n: usize) -> Self {
        Schedule { perm: (0..n).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub(crate) fn from_perm_unchecked(perm: Vec<usize>) -> Self {
        Schedule { perm }
    }
}

/// Total weighted tardiness of the schedule.
pub fn evaluate(inst: &SmtwtpInstance, s: &Schedule) -> Fitness {
    debug_assert_eq!(s.perm.len(), inst.n());
    let mut completion: u64 = 0;
    let mut total: u64 = 0;
    for &job in &s.perm {
        completion += inst.p[job];
        total += inst.w[job] * completion.saturating_sub(inst.d[job]);
    }
    Fitness::new(total as f64)
}

/// Uniformly random permutation (Fisher-Yates).
pub fn random_schedule(inst: &SmtwtpInstance, rng: &mut dyn RngCore) -> Schedule {
    let mut perm: Vec<usize> = (0..inst.n()).collect();
    perm.shuffle(rng);
    Schedule { perm }
}

/// Engine-facing adapter exposing the three neighborhoods as ids 1..=3
/// (exchange, swap, insert).
pub struct SmtwtpAdapter<'a> {
    inst: &'a SmtwtpInstance,
}

impl<'a> SmtwtpAdapter<'a> {
    pub fn new(inst: &'a SmtwtpInstance) -> Self {
        SmtwtpAdapter { inst }
    }
}

impl ProblemAdapter for SmtwtpAdapter<'_> {
    type Solution = Schedule;

    fn neighborhood_count(&self) -> usize {
        3
    }

    fn evaluate(&self, s: &Schedule) -> Fitness {
        evaluate(self.inst, s)
    }

    fn random_solution(&self, rng: &mut dyn RngCore) -> Schedule {
        random_schedule(self.inst, rng)
    }

    fn neighbors(
        &self,
        s: &Schedule,
        id: NeighborhoodId,
        order: NeighborOrder,
    ) -> Box<dyn Iterator<Item = Schedule>> {
        Box::new(neighbors(s, MoveKind::from_id(id), order))
    }
}
