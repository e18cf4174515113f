use super::engine::{run, vertices, Dp, Item};
use super::plan::{build, PlanNode};
use super::{finish, Certificate, Problem, SolveResult, Stats};
use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::MapGraph;

/// Bag vertices with a flag telling whether they are in the cover.
type State = Vec<(usize, bool)>;

struct Vc {
    budget: Option<usize>,
}

impl Dp for Vc {
    type S = State;

    fn empty(&self) -> State {
        Vec::new()
    }

    fn introduce(&self, s: &State, v: usize, out: &mut Vec<(State, i64)>) {
        let i = s.partition_point(|&(x, _)| x < v);
        for inside in [true, false] {
            let mut n = s.clone();
            n.insert(i, (v, inside));
            out.push((n, 0));
        }
    }

    fn forget(&self, s: &State, v: usize) -> Option<(State, i64, Option<Item>)> {
        let i = s.binary_search_by_key(&v, |&(x, _)| x).ok()?;
        let mut n = s.clone();
        let (_, inside) = n.remove(i);
        Some(if inside { (n, -1, Some(Item::Vertex(v))) } else { (n, 0, None) })
    }

    fn edge(&self, s: &State, a: usize, b: usize, out: &mut Vec<(State, i64, Option<Item>)>) {
        let get = |x: usize| s[s.binary_search_by_key(&x, |&(y, _)| y).unwrap()].1;
        if get(a) || get(b) {
            out.push((s.clone(), 0, None));
        }
    }

    fn join_key(&self, s: &State, shared: &[usize]) -> Vec<u8> {
        s.iter().filter(|(x, _)| shared.binary_search(x).is_ok()).map(|&(_, c)| c as u8).collect()
    }

    fn join(&self, a: &State, b: &State) -> Option<(State, i64)> {
        let mut n: State = a.iter().chain(b).copied().collect();
        n.sort_unstable();
        n.dedup();
        (n.windows(2).all(|w| w[0].0 != w[1].0)).then_some((n, 0))
    }

    fn admissible(&self, s: &State, _t: usize, node: &PlanNode, score: i64) -> bool {
        if let Some(k) = self.budget {
            let pending = s.iter().filter(|&&(_, c)| c).count() as i64;
            if -score + pending > k as i64 {
                return false;
            }
        }
        node.clique_parts.iter().all(|part| {
            part.iter()
                .filter(|&&v| !s[s.binary_search_by_key(&v, |&(x, _)| x).unwrap()].1)
                .count()
                <= 1
        })
    }
}

pub(crate) fn solve_vertex_cover(_m: &MapGraph, f: &FewCliquesDecomposition, k: Option<usize>) -> SolveResult {
    let plan = build(f);
    let r = run(&Vc { budget: k }, &plan);
    let best = r.root.best(|_, score| Some(score)).map(|(_, _, tr)| vertices(&tr.items()));
    let stats = Stats {
        max_states: r.node_states.iter().copied().max().unwrap_or(0),
        node_states: r.node_states,
        ..Default::default()
    };
    match best {
        Some(set) => finish(Problem::VertexCover, k, Some(set.len()), Certificate::Vertices(set), stats),
        None => finish(Problem::VertexCover, k, None, Certificate::None, stats),
    }
}
