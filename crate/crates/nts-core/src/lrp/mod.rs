//! Capacitated-depot, uncapacitated-vehicle Location Routing Problem:
//! jointly choose which depots to open and how to route clients, minimizing
//! opening plus routing cost. Capacity violations are penalized, not
//! filtered, so neighborhoods may traverse infeasible solutions.

mod moves;
mod parse;

pub use moves::neighbors;
pub use parse::{load_reference_values, parse_lrp, serialize_lrp, LrpError};

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::search::{NeighborOrder, NeighborhoodId, ProblemAdapter};
use crate::Fitness;

/// Number of LRP neighborhoods.
pub const NEIGHBORHOOD_COUNT: usize = 11;

/// Instance data: `n` clients (indices `0..n`) and `m` depots
/// (indices `n..n+m` in the travel matrix).
#[derive(Clone, Debug, PartialEq)]
pub struct LrpInstance {
    demand: Vec<f64>,
    capacity: Vec<f64>,
    opening_cost: Vec<f64>,
    /// Flattened symmetric (n+m) x (n+m) travel cost matrix.
    travel: Vec<f64>,
    alpha: f64,
}

impl LrpInstance {
    pub fn new(
        demand: Vec<f64>,
        capacity: Vec<f64>,
        opening_cost: Vec<f64>,
        travel: Vec<f64>,
        alpha: f64,
    ) -> Result<Self, LrpError> {
        let n = demand.len();
        let m = capacity.len();
        if opening_cost.len() != m {
            return Err(LrpError::Invalid("opening_cost length differs from capacity".into()));
        }
        let dim = n + m;
        if travel.len() != dim * dim {
            return Err(LrpError::Invalid(format!(
                "travel matrix must be {dim}x{dim}, got {} entries",
                travel.len()
            )));
        }
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(LrpError::Invalid("alpha must be positive and finite".into()));
        }
        for (name, xs) in [("demand", &demand), ("capacity", &capacity), ("opening_cost", &opening_cost)] {
            if xs.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(LrpError::Invalid(format!("{name} values must be non-negative")));
            }
        }
        for a in 0..dim {
            if travel[a * dim + a] != 0.0 {
                return Err(LrpError::Invalid(format!("travel diagonal entry {a} is nonzero")));
            }
            for b in 0..dim {
                let t = travel[a * dim + b];
                if !t.is_finite() || t < 0.0 {
                    return Err(LrpError::Invalid(format!("travel({a},{b}) must be non-negative")));
                }
                if t != travel[b * dim + a] {
                    return Err(LrpError::Invalid(format!("travel matrix asymmetric at ({a},{b})")));
                }
            }
        }
        Ok(LrpInstance { demand, capacity, opening_cost, travel, alpha })
    }

    /// Build an instance from planar coordinates (clients first, then
    /// depots) with Euclidean travel costs, optionally rounded to the
    /// nearest integer.
    pub fn from_coords(
        demand: Vec<f64>,
        capacity: Vec<f64>,
        opening_cost: Vec<f64>,
        coords: &[(f64, f64)],
        alpha: Option<f64>,
        round_to_integer: bool,
    ) -> Result<Self, LrpError> {
        let dim = coords.len();
        if dim != demand.len() + capacity.len() {
            return Err(LrpError::Invalid("need one coordinate per client and depot".into()));
        }
        let mut travel = vec![0.0; dim * dim];
        for a in 0..dim {
            for b in a + 1..dim {
                let dx = coords[a].0 - coords[b].0;
                let dy = coords[a].1 - coords[b].1;
                let mut t = (dx * dx + dy * dy).sqrt();
                if round_to_integer {
                    t = t.round();
                }
                travel[a * dim + b] = t;
                travel[b * dim + a] = t;
            }
        }
        let alpha = alpha.unwrap_or_else(|| default_alpha(&travel));
        LrpInstance::new(demand, capacity, opening_cost, travel, alpha)
    }

    pub fn n(&self) -> usize {
        self.demand.len()
    }

    pub fn m(&self) -> usize {
        self.capacity.len()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn demand(&self) -> &[f64] {
        &self.demand
    }

    pub fn capacity(&self) -> &[f64] {
        &self.capacity
    }

    pub fn opening_cost(&self) -> &[f64] {
        &self.opening_cost
    }

    /// Travel cost between two matrix indices (clients `0..n`, depots `n..n+m`).
    pub fn travel(&self, a: usize, b: usize) -> f64 {
        self.travel[a * (self.n() + self.m()) + b]
    }

    /// Matrix index of depot `j`.
    pub fn depot_index(&self, j: usize) -> usize {
        self.n() + j
    }
}

/// Default penalty weight: ten times the largest travel cost, so any capacity
/// violation dominates typical routing savings.
pub fn default_alpha(travel: &[f64]) -> f64 {
    let max = travel.iter().cloned().fold(0.0, f64::max);
    if max > 0.0 {
        10.0 * max
    } else {
        1.0
    }
}

/// One route per depot; a depot is open iff its route is nonempty. Every
/// client appears in exactly one route exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrpSolution {
    routes: Vec<Vec<usize>>,
}

impl LrpSolution {
    pub fn new(routes: Vec<Vec<usize>>, n: usize) -> Result<Self, LrpError> {
        let mut seen = vec![false; n];
        let mut count = 0;
        for route in &routes {
            for &c in route {
                if c >= n {
                    return Err(LrpError::Invalid(format!("client index {c} out of range")));
                }
                if seen[c] {
                    return Err(LrpError::Invalid(format!("client {c} served twice")));
                }
                seen[c] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(LrpError::Invalid(format!("{} of {n} clients unassigned", n - count)));
        }
        Ok(LrpSolution { routes })
    }

    pub fn routes(&self) -> &[Vec<usize>] {
        &self.routes
    }

    pub fn open_depots(&self) -> usize {
        self.routes.iter().filter(|r| !r.is_empty()).count()
    }

    pub(crate) fn from_routes_unchecked(routes: Vec<Vec<usize>>) -> Self {
        LrpSolution { routes }
    }
}

/// Depot opening costs plus tour costs of the open routes.
pub fn routing_and_opening_cost(inst: &LrpInstance, s: &LrpSolution) -> Fitness {
    let mut total = 0.0;
    for (j, route) in s.routes.iter().enumerate() {
        if route.is_empty() {
            continue;
        }
        let depot = inst.depot_index(j);
        total += inst.opening_cost[j];
        total += inst.travel(depot, route[0]);
        for pair in route.windows(2) {
            total += inst.travel(pair[0], pair[1]);
        }
        total += inst.travel(*route.last().unwrap(), depot);
    }
    Fitness::new(total)
}

/// `alpha * sum_j max(0, Q_j - b_j)` where `Q_j` is the demand served by depot `j`.
pub fn penalty(inst: &LrpInstance, s: &LrpSolution) -> Fitness {
    let mut total = 0.0;
    for (j, route) in s.routes.iter().enumerate() {
        let load: f64 = route.iter().map(|&c| inst.demand[c]).sum();
        total += inst.alpha * (load - inst.capacity[j]).max(0.0);
    }
    Fitness::new(total)
}

/// Penalized objective: routing and opening cost plus capacity penalty.
pub fn evaluate(inst: &LrpInstance, s: &LrpSolution) -> Fitness {
    Fitness::new(routing_and_opening_cost(inst, s).value() + penalty(inst, s).value())
}

pub fn is_feasible(inst: &LrpInstance, s: &LrpSolution) -> bool {
    penalty(inst, s).value() == 0.0
}

/// Assign each client to a uniformly random depot and shuffle every route.
/// Capacities are not enforced; the penalty handles them.
pub fn random_solution(inst: &LrpInstance, rng: &mut dyn RngCore) -> LrpSolution {
    let mut routes = vec![Vec::new(); inst.m()];
    for c in 0..inst.n() {
        routes[rng.gen_range(0..inst.m())].push(c);
    }
    for route in &mut routes {
        route.shuffle(rng);
    }
    LrpSolution { routes }
}

/// Engine-facing adapter exposing the eleven neighborhoods as ids 1..=11.
pub struct LrpAdapter<'a> {
    inst: &'a LrpInstance,
}

impl<'a> LrpAdapter<'a> {
    pub fn new(inst: &'a LrpInstance) -> Self {
        LrpAdapter { inst }
    }
}

impl ProblemAdapter for LrpAdapter<'_> {
    type Solution = LrpSolution;

    fn neighborhood_count(&self) -> usize {
        NEIGHBORHOOD_COUNT
    }

    fn evaluate(&self, s: &LrpSolution) -> Fitness {
        evaluate(self.inst, s)
    }

    fn random_solution(&self, rng: &mut dyn RngCore) -> LrpSolution {
        random_solution(self.inst, rng)
    }

    fn neighbors(
        &self,
        s: &LrpSolution,
        id: NeighborhoodId,
        order: NeighborOrder,
    ) -> Box<dyn Iterator<Item = LrpSolution>> {
        Box::new(neighbors(s, id, order))
    }
}
