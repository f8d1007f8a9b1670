//! Neighborhood tree search: a variable-neighborhood local search that keeps
//! the trajectory of accepted solutions, backtracks to earlier path positions
//! when the current head is exhausted, and prunes already-explored
//! neighborhood branches by preserving per-solution usage masks.
//!
//! The crate ships the problem-independent engine ([`search`]) together with
//! classical VND and VNS baselines, plus two benchmark domains: single machine
//! total weighted tardiness ([`smtwtp`]) and the capacitated-depot location
//! routing problem ([`lrp`]).

pub mod fitness;
pub mod lrp;
pub mod search;
pub mod smtwtp;

pub use fitness::Fitness;
pub use search::{
    apply_step, backtrack, decide_accept, run_nts, run_vnd, run_vns, select_neighborhood,
    AcceptKind, BacktrackKind, NeighborOrder, NeighborhoodId, PathEntry, ProblemAdapter,
    RunRecord, SearchConfig, StepKind, Termination, TrajectoryPath, UsageMask, VnsParams,
};
