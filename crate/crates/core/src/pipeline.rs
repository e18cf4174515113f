use thiserror::Error;

use crate::decomposition::{exact_decompose_small, heuristic_decompose, make_nice, DecompError, ExactError};
use crate::few_cliques::{derive_fcd, DeriveError};
use crate::graph_core::{half_square, parse_witness, ParseError};
use crate::solvers::{solve, Problem, SolveOptions, SolveResult};
use crate::{BipartiteWitness, FewCliquesDecomposition, MapGraph, NiceTreeDecomposition, TreeDecomposition};

/// How the witness is decomposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposer {
    Heuristic { seed: u64 },
    Exact { budget: usize },
}

impl Default for Decomposer {
    fn default() -> Self {
        Decomposer::Heuristic { seed: 0 }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Derive(#[from] DeriveError),
}

/// A witness with everything derived from it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub witness: BipartiteWitness,
    pub map: MapGraph,
    pub td: TreeDecomposition,
    pub nice: NiceTreeDecomposition,
    pub fcd: FewCliquesDecomposition,
}

impl Instance {
    pub fn build(witness: BipartiteWitness, how: Decomposer) -> Result<Self, PipelineError> {
        let map = half_square(&witness);
        let td = match how {
            Decomposer::Heuristic { seed } => heuristic_decompose(witness.graph(), seed),
            Decomposer::Exact { budget } => exact_decompose_small(witness.graph(), budget)?,
        };
        let nice = make_nice(&td)?;
        let fcd = derive_fcd(&nice, &map)?;
        Ok(Instance { witness, map, td, nice, fcd })
    }

    pub fn from_text(text: &str, how: Decomposer) -> Result<Self, PipelineError> {
        Self::build(parse_witness(text)?, how)
    }

    pub fn solve(&self, problem: Problem, opts: &SolveOptions) -> SolveResult {
        solve(problem, &self.map, &self.fcd, opts)
    }
}
