//! The eleven LRP neighborhoods.
//!
//! Ids: 1 reinsert within a route, 2 reinsert into another route (may open a
//! closed depot), 3 swap within a route, 4 swap across routes, 5 2-opt
//! segment reversal within a route, 6 2-opt tail exchange across routes,
//! 7/8 sub-route ("bone") relocation within / across routes, 9/10 the same
//! with the bone reversed, 11 move a whole route to a closed depot.

use super::LrpSolution;
use crate::search::{MoveIter, NeighborOrder, NeighborhoodId};

#[derive(Clone, Copy, Debug)]
enum LrpMove {
    Reinsert { from_depot: usize, from_pos: usize, to_depot: usize, to_pos: usize },
    Swap { d1: usize, p1: usize, d2: usize, p2: usize },
    Reverse { depot: usize, i: usize, j: usize },
    TailExchange { d1: usize, c1: usize, d2: usize, c2: usize },
    Bone { from_depot: usize, start: usize, len: usize, to_depot: usize, to_pos: usize, reversed: bool },
    RelocateRoute { from: usize, to: usize },
}

impl LrpMove {
    fn apply(self, routes: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut r = routes.to_vec();
        match self {
            LrpMove::Reinsert { from_depot, from_pos, to_depot, to_pos } => {
                let client = r[from_depot].remove(from_pos);
                r[to_depot].insert(to_pos, client);
            }
            LrpMove::Swap { d1, p1, d2, p2 } => {
                if d1 == d2 {
                    r[d1].swap(p1, p2);
                } else {
                    let tmp = r[d1][p1];
                    r[d1][p1] = r[d2][p2];
                    r[d2][p2] = tmp;
                }
            }
            LrpMove::Reverse { depot, i, j } => {
                r[depot][i..=j].reverse();
            }
            LrpMove::TailExchange { d1, c1, d2, c2 } => {
                let tail1 = r[d1].split_off(c1);
                let tail2 = r[d2].split_off(c2);
                r[d1].extend(tail2);
                r[d2].extend(tail1);
            }
            LrpMove::Bone { from_depot, start, len, to_depot, to_pos, reversed } => {
                let mut bone: Vec<usize> = r[from_depot].drain(start..start + len).collect();
                if reversed {
                    bone.reverse();
                }
                r[to_depot].splice(to_pos..to_pos, bone);
            }
            LrpMove::RelocateRoute { from, to } => {
                r[to] = std::mem::take(&mut r[from]);
            }
        }
        r
    }
}

fn reinsert_within(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        let r = route.len();
        for from_pos in 0..r {
            for to_pos in (0..r).filter(|&t| t != from_pos) {
                out.push(LrpMove::Reinsert { from_depot: d, from_pos, to_depot: d, to_pos });
            }
        }
    }
}

fn reinsert_across(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        for from_pos in 0..route.len() {
            for (d2, target) in routes.iter().enumerate() {
                if d2 == d {
                    continue;
                }
                for to_pos in 0..=target.len() {
                    out.push(LrpMove::Reinsert { from_depot: d, from_pos, to_depot: d2, to_pos });
                }
            }
        }
    }
}

fn swap_within(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        for p1 in 0..route.len() {
            for p2 in p1 + 1..route.len() {
                out.push(LrpMove::Swap { d1: d, p1, d2: d, p2 });
            }
        }
    }
}

fn swap_across(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for d1 in 0..routes.len() {
        for d2 in d1 + 1..routes.len() {
            for p1 in 0..routes[d1].len() {
                for p2 in 0..routes[d2].len() {
                    out.push(LrpMove::Swap { d1, p1, d2, p2 });
                }
            }
        }
    }
}

fn two_opt_within(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        for i in 0..route.len() {
            for j in i + 1..route.len() {
                out.push(LrpMove::Reverse { depot: d, i, j });
            }
        }
    }
}

fn tail_exchange(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for d1 in 0..routes.len() {
        for d2 in d1 + 1..routes.len() {
            let (l1, l2) = (routes[d1].len(), routes[d2].len());
            for c1 in 0..=l1 {
                for c2 in 0..=l2 {
                    // Swapping two empty tails is the identity.
                    if c1 == l1 && c2 == l2 {
                        continue;
                    }
                    out.push(LrpMove::TailExchange { d1, c1, d2, c2 });
                }
            }
        }
    }
}

// Bones are proper sub-routes: length 2 up to route length - 1, so single
// clients stay with the reinsertion neighborhoods.
fn bones_within(routes: &[Vec<usize>], reversed: bool, out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        let r = route.len();
        for len in 2..r {
            for start in 0..=r - len {
                for to_pos in (0..=r - len).filter(|&t| t != start) {
                    out.push(LrpMove::Bone {
                        from_depot: d,
                        start,
                        len,
                        to_depot: d,
                        to_pos,
                        reversed,
                    });
                }
            }
        }
    }
}

fn bones_across(routes: &[Vec<usize>], reversed: bool, out: &mut Vec<LrpMove>) {
    for (d, route) in routes.iter().enumerate() {
        let r = route.len();
        for len in 2..r {
            for start in 0..=r - len {
                for (d2, target) in routes.iter().enumerate() {
                    if d2 == d {
                        continue;
                    }
                    for to_pos in 0..=target.len() {
                        out.push(LrpMove::Bone {
                            from_depot: d,
                            start,
                            len,
                            to_depot: d2,
                            to_pos,
                            reversed,
                        });
                    }
                }
            }
        }
    }
}

fn relocate_route(routes: &[Vec<usize>], out: &mut Vec<LrpMove>) {
    for (from, route) in routes.iter().enumerate() {
        if route.is_empty() {
            continue;
        }
        for (to, target) in routes.iter().enumerate() {
            if to != from && target.is_empty() {
                out.push(LrpMove::RelocateRoute { from, to });
            }
        }
    }
}

fn enumerate(routes: &[Vec<usize>], id: NeighborhoodId) -> Vec<LrpMove> {
    let mut out = Vec::new();
    match id.get() {
        1 => reinsert_within(routes, &mut out),
        2 => reinsert_across(routes, &mut out),
        3 => swap_within(routes, &mut out),
        4 => swap_across(routes, &mut out),
        5 => two_opt_within(routes, &mut out),
        6 => tail_exchange(routes, &mut out),
        7 => bones_within(routes, false, &mut out),
        8 => bones_across(routes, false, &mut out),
        9 => bones_within(routes, true, &mut out),
        10 => bones_across(routes, true, &mut out),
        11 => relocate_route(routes, &mut out),
        other => panic!("lrp has neighborhoods 1..=11, got {other}"),
    }
    out
}

/// Stream of neighboring solutions under neighborhood `id`.
pub fn neighbors(
    s: &LrpSolution,
    id: NeighborhoodId,
    order: NeighborOrder,
) -> impl Iterator<Item = LrpSolution> {
    let routes = s.routes().to_vec();
    MoveIter::new(enumerate(&routes, id), order)
        .map(move |m| LrpSolution::from_routes_unchecked(m.apply(&routes)))
}
