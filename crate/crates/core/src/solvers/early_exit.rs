use super::{finish, Certificate, Problem, SolveResult, Stats};
use crate::graph_core::MapGraph;

/// Answers directly when some special clique is large enough to settle the
/// question: FVS needs `k + 3`, longest cycle `k`, packing `3k`.
pub fn check_early_exit(m: &MapGraph, problem: Problem, k: usize) -> Option<SolveResult> {
    let big = |need: usize| m.special_cliques().iter().find(|c| c.len() >= need);
    let stats = Stats { early_exit: Some("clique"), ..Default::default() };
    match problem {
        Problem::Fvs => {
            let c = big(k + 3)?;
            let mut r = finish(problem, Some(k), None, Certificate::Clique(c[..k + 3].to_vec()), stats);
            r.optimal = false;
            Some(r)
        }
        Problem::LongestCycle => {
            let len = k.max(3);
            let c = big(len)?;
            let mut r = finish(problem, Some(k), Some(len), Certificate::Cycle(c[..len].to_vec()), stats);
            r.optimal = false;
            Some(r)
        }
        Problem::CyclePacking if k >= 1 => {
            let c = big(3 * k)?;
            let cycles = c[..3 * k].chunks(3).map(<[usize]>::to_vec).collect();
            let mut r = finish(problem, Some(k), Some(k), Certificate::Cycles(cycles), stats);
            r.optimal = false;
            Some(r)
        }
        _ => None,
    }
}
