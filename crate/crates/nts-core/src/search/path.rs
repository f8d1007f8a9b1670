//! Trajectory path state: visited solutions, their neighborhood usage masks,
//! and the neighborhood-selection / backtracking moves over them.

use rand::seq::index::sample;
use rand::{Rng, RngCore};

use super::config::BacktrackKind;
use super::NeighborhoodId;
use crate::Fitness;

/// Per-solution record of which neighborhoods have been explored from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageMask {
    used: Vec<bool>,
}

impl UsageMask {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "need at least one neighborhood");
        UsageMask { used: vec![false; k] }
    }

    pub fn len(&self) -> usize {
        self.used.len()
    }

    pub fn is_empty(&self) -> bool {
        self.used.is_empty()
    }

    pub fn is_used(&self, id: NeighborhoodId) -> bool {
        self.used[id.index0()]
    }

    pub fn mark(&mut self, id: NeighborhoodId) {
        self.used[id.index0()] = true;
    }

    pub fn all_used(&self) -> bool {
        self.used.iter().all(|&u| u)
    }

    pub fn used_count(&self) -> usize {
        self.used.iter().filter(|&&u| u).count()
    }

    pub fn unused_ids(&self) -> impl Iterator<Item = NeighborhoodId> + '_ {
        self.used
            .iter()
            .enumerate()
            .filter(|(_, &u)| !u)
            .map(|(i, _)| NeighborhoodId::new(i + 1))
    }
}

/// One visited solution on the trajectory path.
#[derive(Clone, Debug, PartialEq)]
pub struct PathEntry<S> {
    pub solution: S,
    pub fitness: Fitness,
    pub usage: UsageMask,
    /// Best fitness observed among children stepped from this entry,
    /// initialized to the entry's own fitness. Non-increasing.
    pub best_child_fitness: Fitness,
    /// 1-based position in the path.
    pub depth: usize,
}

/// Ordered sequence of visited solutions; the last entry is the head.
#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryPath<S> {
    entries: Vec<PathEntry<S>>,
}

impl<S> TrajectoryPath<S> {
    pub fn new() -> Self {
        TrajectoryPath { entries: Vec::new() }
    }

    /// Push a freshly accepted solution as the new head.
    pub fn push(&mut self, solution: S, fitness: Fitness, k: usize) {
        let depth = self.entries.len() + 1;
        self.entries.push(PathEntry {
            solution,
            fitness,
            usage: UsageMask::new(k),
            best_child_fitness: fitness,
            depth,
        });
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn head(&self) -> Option<&PathEntry<S>> {
        self.entries.last()
    }

    pub fn head_mut(&mut self) -> Option<&mut PathEntry<S>> {
        self.entries.last_mut()
    }

    pub fn entries(&self) -> &[PathEntry<S>] {
        &self.entries
    }

    fn truncate(&mut self, len: usize) {
        self.entries.truncate(len);
    }

    fn clear(&mut self) {
        self.entries.clear();
    }
}

impl<S> Default for TrajectoryPath<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Pick an unused neighborhood uniformly at random.
///
/// Calling this with a fully used mask is a caller bug.
pub fn select_neighborhood(usage: &UsageMask, rng: &mut dyn RngCore) -> NeighborhoodId {
    let candidates: Vec<NeighborhoodId> = usage.unused_ids().collect();
    assert!(
        !candidates.is_empty(),
        "select_neighborhood called with all neighborhoods used"
    );
    candidates[rng.gen_range(0..candidates.len())]
}

/// Truncate the path down to a backtrack target chosen by `kind`.
///
/// Candidates are the entries that still have an unused neighborhood; the
/// head must be fully used before calling. If no candidate exists the path is
/// emptied and the search terminates. The target keeps its usage mask, which
/// is what prunes already-explored branches.
pub fn backtrack<S>(path: &mut TrajectoryPath<S>, kind: BacktrackKind, rng: &mut dyn RngCore) {
    let head = path.head().expect("backtrack on an empty path");
    assert!(
        head.usage.all_used(),
        "backtrack called while the head still has unused neighborhoods"
    );

    let candidates: Vec<usize> = path
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.usage.all_used())
        .map(|(i, _)| i)
        .collect();

    if candidates.is_empty() {
        path.clear();
        return;
    }

    let target = match kind {
        BacktrackKind::Uniform => candidates[rng.gen_range(0..candidates.len())],
        BacktrackKind::DepthTournament | BacktrackKind::UsageTournament => {
            if candidates.len() == 1 {
                candidates[0]
            } else {
                let picks = sample(rng, candidates.len(), 2);
                let a = candidates[picks.index(0)];
                let b = candidates[picks.index(1)];
                match kind {
                    // Entries are ordered by depth, so the smaller index is
                    // the shallower one.
                    BacktrackKind::DepthTournament => a.min(b),
                    BacktrackKind::UsageTournament => {
                        let ua = path.entries[a].usage.used_count();
                        let ub = path.entries[b].usage.used_count();
                        if ua < ub {
                            a
                        } else if ub < ua {
                            b
                        } else if rng.gen_bool(0.5) {
                            a
                        } else {
                            b
                        }
                    }
                    BacktrackKind::Uniform => unreachable!(),
                }
            }
        }
    };

    path.truncate(target + 1);
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mask(bits: &[bool]) -> UsageMask {
        let mut m = UsageMask::new(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                m.mark(NeighborhoodId::new(i + 1));
            }
        }
        m
    }

    fn path_with_masks(masks: &[&[bool]]) -> TrajectoryPath<u32> {
        let mut p = TrajectoryPath::new();
        for (i, bits) in masks.iter().enumerate() {
            p.push(i as u32, Fitness::new(100.0 - i as f64), bits.len());
            p.head_mut().unwrap().usage = mask(bits);
        }
        p
    }

    #[test]
    fn select_returns_the_only_unused_neighborhood() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let m = mask(&[true, true, false]);
        assert_eq!(select_neighborhood(&m, &mut rng), NeighborhoodId::new(3));
        let m = mask(&[false, true]);
        assert_eq!(select_neighborhood(&m, &mut rng), NeighborhoodId::new(1));
    }

    #[test]
    fn select_is_uniform_over_unused() {
        // chi-square over 10,000 draws, 3 categories, alpha = 0.01 (df=2).
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let m = mask(&[false, false, false]);
        let mut counts = [0u32; 3];
        for _ in 0..10_000 {
            counts[select_neighborhood(&m, &mut rng).index0()] += 1;
        }
        let expected = 10_000.0 / 3.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 9.210, "chi-square {chi2} exceeds the 0.01 critical value");
    }

    #[test]
    #[should_panic]
    fn select_panics_when_all_used() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        select_neighborhood(&mask(&[true, true]), &mut rng);
    }

    #[test]
    fn backtrack_single_candidate_keeps_its_mask() {
        let mut p = path_with_masks(&[&[true, false], &[true, true], &[true, true]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        backtrack(&mut p, BacktrackKind::Uniform, &mut rng);
        assert_eq!(p.len(), 1);
        let head = p.head().unwrap();
        assert!(head.usage.is_used(NeighborhoodId::new(1)));
        assert!(!head.usage.is_used(NeighborhoodId::new(2)));
    }

    #[test]
    fn backtrack_with_no_candidates_empties_the_path() {
        let mut p = path_with_masks(&[&[true, true], &[true, true]]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        backtrack(&mut p, BacktrackKind::Uniform, &mut rng);
        assert!(p.is_empty());
    }

    #[test]
    fn usage_tournament_prefers_fewer_used_bits() {
        // Two candidates with used-counts 1 and 2: both are always drawn, so
        // the count-1 entry must always win.
        for seed in 0..50 {
            let mut p = path_with_masks(&[
                &[true, false, false],
                &[true, true, false],
                &[true, true, true],
            ]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            backtrack(&mut p, BacktrackKind::UsageTournament, &mut rng);
            assert_eq!(p.len(), 1);
        }
    }

    #[test]
    fn depth_tournament_prefers_the_shallower_entry() {
        for seed in 0..50 {
            let mut p = path_with_masks(&[
                &[true, false, false],
                &[false, false, false],
                &[true, true, true],
            ]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            backtrack(&mut p, BacktrackKind::DepthTournament, &mut rng);
            assert_eq!(p.len(), 1);
        }
    }

    #[test]
    fn uniform_target_choice_passes_chi_square() {
        // 4 candidates, 10,000 draws, alpha = 0.01 (df=3 critical 11.345).
        let mut counts = [0u32; 4];
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10_000 {
            let mut p = path_with_masks(&[
                &[false, false],
                &[false, true],
                &[true, false],
                &[false, false],
                &[true, true],
            ]);
            backtrack(&mut p, BacktrackKind::Uniform, &mut rng);
            counts[p.len() - 1] += 1;
        }
        let expected = 2_500.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 11.345, "chi-square {chi2} exceeds the 0.01 critical value");
    }

    #[test]
    fn backtrack_result_is_a_prefix_of_the_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..8usize);
            let mut masks: Vec<Vec<bool>> = (0..n)
                .map(|_| (0..3).map(|_| rng.gen_bool(0.6)).collect())
                .collect();
            // Head must be fully used.
            masks[n - 1] = vec![true, true, true];
            let refs: Vec<&[bool]> = masks.iter().map(|m| m.as_slice()).collect();
            let before = path_with_masks(&refs);
            for kind in [
                BacktrackKind::Uniform,
                BacktrackKind::DepthTournament,
                BacktrackKind::UsageTournament,
            ] {
                let mut p = before.clone();
                backtrack(&mut p, kind, &mut rng);
                assert_eq!(p.entries(), &before.entries()[..p.len()]);
                if let Some(head) = p.head() {
                    assert!(!head.usage.all_used());
                }
            }
        }
    }
}
