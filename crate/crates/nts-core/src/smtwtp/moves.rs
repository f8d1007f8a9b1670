//! Permutation neighborhoods: adjacent exchange, pairwise swap, and
//! remove-reinsert.

use super::Schedule;
use crate::search::{MoveIter, NeighborOrder, NeighborhoodId};

/// The three SMTWTP neighborhoods, mapped to ids 1..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// Adjacent transpositions: n-1 neighbors.
    Exchange,
    /// General pairwise exchanges of positions i < j: n(n-1)/2 neighbors.
    Swap,
    /// Remove the job at position i and reinsert it so it ends up at position
    /// j != i: n(n-1) neighbors.
    Insert,
}

impl MoveKind {
    pub fn from_id(id: NeighborhoodId) -> Self {
        match id.get() {
            1 => MoveKind::Exchange,
            2 => MoveKind::Swap,
            3 => MoveKind::Insert,
            other => panic!("smtwtp has neighborhoods 1..=3, got {other}"),
        }
    }

    pub fn id(self) -> NeighborhoodId {
        match self {
            MoveKind::Exchange => NeighborhoodId::new(1),
            MoveKind::Swap => NeighborhoodId::new(2),
            MoveKind::Insert => NeighborhoodId::new(3),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Exchange(usize),
    Swap(usize, usize),
    Insert { from: usize, to: usize },
}

impl Move {
    fn apply(self, perm: &[usize]) -> Vec<usize> {
        let mut next = perm.to_vec();
        match self {
            Move::Exchange(i) => next.swap(i, i + 1),
            Move::Swap(i, j) => next.swap(i, j),
            Move::Insert { from, to } => {
                let job = next.remove(from);
                next.insert(to, job);
            }
        }
        next
    }
}

fn enumerate(n: usize, kind: MoveKind) -> Vec<Move> {
    let mut moves = Vec::new();
    if n < 2 {
        return moves;
    }
    match kind {
        MoveKind::Exchange => {
            moves.extend((0..n - 1).map(Move::Exchange));
        }
        MoveKind::Swap => {
            for i in 0..n {
                for j in i + 1..n {
                    moves.push(Move::Swap(i, j));
                }
            }
        }
        MoveKind::Insert => {
            for from in 0..n {
                for to in (0..n).filter(|&to| to != from) {
                    moves.push(Move::Insert { from, to });
                }
            }
        }
    }
    moves
}

/// Stream of neighboring schedules, in lexicographic move order or a seeded
/// shuffle. An n=1 schedule has no neighbors.
pub fn neighbors(
    s: &Schedule,
    kind: MoveKind,
    order: NeighborOrder,
) -> impl Iterator<Item = Schedule> {
    let perm = s.perm().to_vec();
    MoveIter::new(enumerate(perm.len(), kind), order)
        .map(move |m| Schedule::from_perm_unchecked(m.apply(&perm)))
}
