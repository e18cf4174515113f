//! Crossing-capped dynamic programming over a few-cliques decomposition.

mod bounds;
mod certificate;
mod cycles;
mod early_exit;
mod engine;
mod fvs;
mod packing;
mod plan;
mod vc;

pub use certificate::{verify_certificate, Certificate};
pub use early_exit::check_early_exit;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::MapGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    VertexCover,
    Fvs,
    LongestCycle,
    LongestPath,
    CyclePacking,
}

impl Problem {
    pub const ALL: [Problem; 5] =
        [Problem::VertexCover, Problem::Fvs, Problem::LongestCycle, Problem::LongestPath, Problem::CyclePacking];

    pub fn name(self) -> &'static str {
        match self {
            Problem::VertexCover => "vc",
            Problem::Fvs => "fvs",
            Problem::LongestCycle => "longest-cycle",
            Problem::LongestPath => "longest-path",
            Problem::CyclePacking => "cycle-packing",
        }
    }

    /// Deletion problems ask for a value at most `k`; the others at least `k`.
    pub fn is_minimization(self) -> bool {
        matches!(self, Problem::VertexCover | Problem::Fvs)
    }

    /// Whether `value` answers the decision question for `k`.
    pub fn accepts(self, value: usize, k: usize) -> bool {
        if self.is_minimization() {
            value <= k
        } else {
            value >= k
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown problem `{s}`"))
    }
}

/// Per-node bound on the number of path endpoints in a cycle/packing state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CapOverride {
    /// `2|original| + 4|cliques|` for cycles and paths, `24 (width + 1)` for packing.
    #[default]
    Default,
    Uniform(usize),
    Unbounded,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub k: Option<usize>,
    pub cap: CapOverride,
    pub skip_early_exit: bool,
    /// Turn off pruning against a greedy lower bound, so that state counts
    /// reflect the capped DP alone.
    pub exhaustive: bool,
}

impl SolveOptions {
    pub fn with_k(k: usize) -> Self {
        SolveOptions { k: Some(k), ..Default::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub width_d: usize,
    pub maxbag_dprime: usize,
    /// Largest per-node cap that was in force, if any.
    pub cap: Option<usize>,
    pub node_states: Vec<usize>,
    pub max_states: usize,
    pub early_exit: Option<&'static str>,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    pub k: Option<usize>,
    /// Value of the certificate; `None` when a deletion problem has no solution within `k`.
    pub value: Option<usize>,
    /// Whether `value` is known to be optimal.
    pub optimal: bool,
    pub decision: Option<bool>,
    pub certificate: Certificate,
    pub stats: Stats,
}

impl SolveResult {
    /// `YES`, `NO`, or `OPT=<v>` when no `k` was given.
    pub fn headline(&self) -> String {
        match (self.decision, self.value) {
            (Some(true), _) => "YES".into(),
            (Some(false), _) => "NO".into(),
            (None, Some(v)) => format!("OPT={v}"),
            (None, None) => "NO".into(),
        }
    }

    /// `SOLUTION <problem> k=<k> value=<v>` plus one line per set or cycle, 1-based.
    pub fn certificate_text(&self) -> String {
        let k = self.k.map_or("-".to_string(), |k| k.to_string());
        let v = self.value.map_or("-".to_string(), |v| v.to_string());
        let mut out = format!("SOLUTION {} k={} value={}\n", self.problem, k, v);
        for line in self.certificate.lines() {
            let ids: Vec<String> = line.iter().map(|x| (x + 1).to_string()).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Runs the early-exit check and then the DP for `problem`.
pub fn solve(problem: Problem, m: &MapGraph, f: &FewCliquesDecomposition, opts: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let mut r = if let Some(r) = (!opts.skip_early_exit).then(|| opts.k.and_then(|k| check_early_exit(m, problem, k))).flatten() {
        r
    } else {
        match problem {
            Problem::VertexCover => vc::solve_vertex_cover(m, f, opts.k),
            Problem::Fvs => fvs::solve_fvs(m, f, opts.k),
            Problem::LongestCycle => cycles::solve_longest_cycle(m, f, opts),
            Problem::LongestPath => cycles::solve_longest_path(m, f, opts),
            Problem::CyclePacking => packing::solve_cycle_packing(m, f, opts),
        }
    };
    r.stats.width_d = f.width_d();
    r.stats.maxbag_dprime = f.max_bag();
    r.stats.millis = start.elapsed().as_millis();
    r
}

pub fn solve_vertex_cover(m: &MapGraph, f: &FewCliquesDecomposition, k: usize) -> SolveResult {
    solve(Problem::VertexCover, m, f, &SolveOptions::with_k(k))
}

pub fn solve_fvs(m: &MapGraph, f: &FewCliquesDecomposition, k: usize) -> SolveResult {
    solve(Problem::Fvs, m, f, &SolveOptions::with_k(k))
}

pub fn solve_longest_cycle(m: &MapGraph, f: &FewCliquesDecomposition, k: usize, cap: CapOverride) -> SolveResult {
    solve(Problem::LongestCycle, m, f, &SolveOptions { k: Some(k), cap, ..Default::default() })
}

pub fn solve_longest_path(m: &MapGraph, f: &FewCliquesDecomposition, k: usize) -> SolveResult {
    solve(Problem::LongestPath, m, f, &SolveOptions::with_k(k))
}

pub fn solve_cycle_packing(m: &MapGraph, f: &FewCliquesDecomposition, k: usize, cap: CapOverride) -> SolveResult {
    solve(Problem::CyclePacking, m, f, &SolveOptions { k: Some(k), cap, ..Default::default() })
}

pub(crate) fn finish(
    problem: Problem,
    k: Option<usize>,
    value: Option<usize>,
    certificate: Certificate,
    stats: Stats,
) -> SolveResult {
    let decision = k.map(|k| value.is_some_and(|v| problem.accepts(v, k)));
    SolveResult { problem, k, value, optimal: value.is_some(), decision, certificate, stats }
}
