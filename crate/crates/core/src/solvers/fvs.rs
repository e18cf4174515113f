use super::engine::{run, vertices, Dp, Item};
use super::plan::{build, PlanNode};
use super::{finish, Certificate, Problem, SolveResult, Stats};
use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::MapGraph;

/// Bag vertices with code 0 for deleted, otherwise the id of their tree in
/// the surviving forest (ids renumbered by first appearance).
type State = Vec<(usize, u16)>;

fn canonical(s: &mut State) {
    let mut map: Vec<(u16, u16)> = Vec::new();
    for (_, c) in s.iter_mut() {
        if *c == 0 {
            continue;
        }
        let id = match map.iter().find(|(old, _)| old == c) {
            Some(&(_, new)) => new,
            None => {
                let new = map.len() as u16 + 1;
                map.push((*c, new));
                new
            }
        };
        *c = id;
    }
}

fn code(s: &State, v: usize) -> u16 {
    s[s.binary_search_by_key(&v, |&(x, _)| x).unwrap()].1
}

struct Fvs {
    budget: Option<usize>,
}

impl Dp for Fvs {
    type S = State;

    fn empty(&self) -> State {
        Vec::new()
    }

    fn introduce(&self, s: &State, v: usize, out: &mut Vec<(State, i64)>) {
        let i = s.partition_point(|&(x, _)| x < v);
        let fresh = s.iter().map(|&(_, c)| c).max().unwrap_or(0) + 1;
        for c in [0, fresh] {
            let mut n = s.clone();
            n.insert(i, (v, c));
            canonical(&mut n);
            out.push((n, 0));
        }
    }

    fn forget(&self, s: &State, v: usize) -> Option<(State, i64, Option<Item>)> {
        let i = s.binary_search_by_key(&v, |&(x, _)| x).ok()?;
        let mut n = s.clone();
        let (_, c) = n.remove(i);
        canonical(&mut n);
        Some(if c == 0 { (n, -1, Some(Item::Vertex(v))) } else { (n, 0, None) })
    }

    fn edge(&self, s: &State, a: usize, b: usize, out: &mut Vec<(State, i64, Option<Item>)>) {
        let (ca, cb) = (code(s, a), code(s, b));
        if ca == 0 || cb == 0 {
            out.push((s.clone(), 0, None));
        } else if ca != cb {
            let mut n = s.clone();
            for (_, c) in n.iter_mut() {
                if *c == cb {
                    *c = ca;
                }
            }
            canonical(&mut n);
            out.push((n, 0, None));
        }
    }

    fn join_key(&self, s: &State, shared: &[usize]) -> Vec<u8> {
        s.iter().filter(|(x, _)| shared.binary_search(x).is_ok()).map(|&(_, c)| (c == 0) as u8).collect()
    }

    fn join(&self, a: &State, b: &State) -> Option<(State, i64)> {
        let off = a.iter().map(|&(_, c)| c).max().unwrap_or(0);
        let size = (off + b.iter().map(|&(_, c)| c).max().unwrap_or(0) + 1) as usize;
        let mut uf: Vec<usize> = (0..size).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(x, cb) in b {
            if cb == 0 {
                continue;
            }
            if let Ok(i) = a.binary_search_by_key(&x, |&(y, _)| y) {
                let ca = a[i].1 as usize;
                let (ra, rb) = (find(&mut uf, ca), find(&mut uf, (cb + off) as usize));
                if ra == rb {
                    return None;
                }
                uf[rb] = ra;
            }
        }
        let mut n: State = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 <= b[j].0);
            let (x, c) = if take_a {
                let e = a[i];
                if j < b.len() && b[j].0 == e.0 {
                    j += 1;
                }
                i += 1;
                (e.0, if e.1 == 0 { 0 } else { find(&mut uf, e.1 as usize) as u16 })
            } else {
                let e = b[j];
                j += 1;
                (e.0, if e.1 == 0 { 0 } else { find(&mut uf, (e.1 + off) as usize) as u16 })
            };
            n.push((x, c));
        }
        canonical(&mut n);
        Some((n, 0))
    }

    fn admissible(&self, s: &State, _t: usize, node: &PlanNode, score: i64) -> bool {
        if let Some(k) = self.budget {
            let pending = s.iter().filter(|&&(_, c)| c == 0).count() as i64;
            if -score + pending > k as i64 {
                return false;
            }
        }
        node.clique_parts.iter().all(|part| part.iter().filter(|&&v| code(s, v) != 0).count() <= 2)
    }
}

pub(crate) fn solve_fvs(_m: &MapGraph, f: &FewCliquesDecomposition, k: Option<usize>) -> SolveResult {
    let plan = build(f);
    let r = run(&Fvs { budget: k }, &plan);
    let best = r.root.best(|_, score| Some(score)).map(|(_, _, tr)| vertices(&tr.items()));
    let stats = Stats {
        max_states: r.node_states.iter().copied().max().unwrap_or(0),
        node_states: r.node_states,
        ..Default::default()
    };
    match best {
        Some(set) => finish(Problem::Fvs, k, Some(set.len()), Certificate::Vertices(set), stats),
        None => finish(Problem::Fvs, k, None, Certificate::None, stats),
    }
}
