//! Experiment descriptions: which problem, which algorithm and strategy,
//! how many trials, which seeds.

use anyhow::{bail, Result};
use nts_core::{AcceptKind, BacktrackKind, NeighborhoodId, StepKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Smtwtp,
    Lrp,
}

/// Algorithm plus its strategy knobs. The label written to rows is derived
/// from these fields so analysis can group rows without extra bookkeeping.
#[derive(Clone, Debug)]
pub enum Algorithm {
    Nts {
        step: StepKind,
        accept: AcceptKind,
        backtrack: BacktrackKind,
    },
    Vnd {
        ordering: Vec<NeighborhoodId>,
        step: StepKind,
        restart: bool,
    },
    Vns {
        step: StepKind,
    },
}

#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub problem: Problem,
    pub algorithm: Algorithm,
    pub trials: u64,
    pub base_seed: u64,
    pub max_evals: u64,
}

impl ExperimentSpec {
    pub fn label(&self) -> String {
        match &self.algorithm {
            Algorithm::Nts { step, accept, backtrack } => format!(
                "nts-{}-{}-{}",
                step_code(*step),
                accept_code(*accept),
                backtrack_code(*backtrack)
            ),
            Algorithm::Vnd { ordering, step, restart } => {
                let ids: Vec<String> = ordering.iter().map(|i| i.get().to_string()).collect();
                let base = if *restart { "vnd-restart" } else { "vnd" };
                format!("{base}-{}-{}", ids.join(","), step_code(*step))
            }
            Algorithm::Vns { step } => format!("vns-{}", step_code(*step)),
        }
    }
}

pub fn step_code(k: StepKind) -> &'static str {
    match k {
        StepKind::FirstImprovement => "fi",
        StepKind::BestImprovement => "bi",
        StepKind::FirstDescent => "fd",
        StepKind::BestDescent => "bd",
    }
}

pub fn accept_code(k: AcceptKind) -> &'static str {
    match k {
        AcceptKind::Improving => "aa",
        AcceptKind::BestChild => "ai",
        AcceptKind::Adaptive => "at",
    }
}

pub fn backtrack_code(k: BacktrackKind) -> &'static str {
    match k {
        BacktrackKind::Uniform => "br",
        BacktrackKind::DepthTournament => "bh",
        BacktrackKind::UsageTournament => "bu",
    }
}

pub fn parse_step(s: &str) -> Result<StepKind> {
    Ok(match s {
        "fi" => StepKind::FirstImprovement,
        "bi" => StepKind::BestImprovement,
        "fd" => StepKind::FirstDescent,
        "bd" => StepKind::BestDescent,
        other => bail!("unknown step kind {other:?} (expected fi, bi, fd, or bd)"),
    })
}

pub fn parse_accept(s: &str) -> Result<AcceptKind> {
    Ok(match s {
        "aa" => AcceptKind::Improving,
        "ai" => AcceptKind::BestChild,
        "at" => AcceptKind::Adaptive,
        other => bail!("unknown acceptance kind {other:?} (expected aa, ai, or at)"),
    })
}

pub fn parse_backtrack(s: &str) -> Result<BacktrackKind> {
    Ok(match s {
        "br" => BacktrackKind::Uniform,
        "bh" => BacktrackKind::DepthTournament,
        "bu" => BacktrackKind::UsageTournament,
        other => bail!("unknown backtracking kind {other:?} (expected br, bh, or bu)"),
    })
}

/// Neighborhood ordering, either as letters (`ESI` for the scheduling
/// neighborhoods exchange/swap/insert) or comma-separated ids (`1,3,2`).
pub fn parse_ordering(s: &str) -> Result<Vec<NeighborhoodId>> {
    if s.contains(',') || s.chars().all(|c| c.is_ascii_digit()) {
        let mut out = Vec::new();
        for tok in s.split(',') {
            let id: usize = tok
                .trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("bad neighborhood id {tok:?} in ordering"))?;
            if id == 0 {
                bail!("neighborhood ids are 1-based");
            }
            out.push(NeighborhoodId::new(id));
        }
        Ok(out)
    } else {
        s.chars()
            .map(|c| {
                Ok(NeighborhoodId::new(match c.to_ascii_uppercase() {
                    'E' => 1,
                    'S' => 2,
                    'I' => 3,
                    other => bail!("unknown ordering letter {other:?} (expected E, S, or I)"),
                }))
            })
            .collect()
    }
}
