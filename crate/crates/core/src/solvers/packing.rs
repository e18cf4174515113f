use super::bounds::greedy_triangles;
use super::cycles::{bound_hit, caps, cycles_from_edges, stats_for, CycleDp, Mode};
use super::engine::{edges, run};
use super::plan::build;
use super::{finish, Certificate, Problem, SolveOptions, SolveResult};
use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::MapGraph;

pub(crate) fn solve_cycle_packing(
    m: &MapGraph,
    f: &FewCliquesDecomposition,
    opts: &SolveOptions,
) -> SolveResult {
    let greedy = if opts.exhaustive { Vec::new() } else { greedy_triangles(m.graph()) };
    if !opts.skip_early_exit && !greedy.is_empty() && greedy.len() == m.n() / 3 {
        return bound_hit(Problem::CyclePacking, opts.k, greedy.len(), Certificate::Cycles(greedy));
    }
    let floor = greedy.len();
    let plan = build(f);
    let uniform = 24 * (f.width_d() + 1);
    let caps = caps(&plan.nodes, opts.cap, |_| uniform);
    let r = run(&CycleDp { mode: Mode::Packing, caps: caps.clone(), floor: floor as i64 }, &plan);
    let best = r.root.best(|_, score| Some(score));
    let stats = stats_for(r.node_states, &caps);
    let cycles = best.map(|(_, _, tr)| cycles_from_edges(&edges(&tr.items()))).unwrap_or_default();
    finish(Problem::CyclePacking, opts.k, Some(cycles.len()), Certificate::Cycles(cycles), stats)
}
