use std::collections::HashMap;

use thiserror::Error;

use crate::graph_core::{Graph, MapGraph};
use crate::solvers::{Certificate, Problem};

pub const ORACLE_MAX_DELETION: usize = 18;
pub const ORACLE_MAX_CYCLE: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{problem} oracle is limited to {limit} vertices, graph has {n}")]
pub struct OracleError {
    pub problem: Problem,
    pub n: usize,
    pub limit: usize,
}

/// Exact optimum by exhaustive search, with a certificate.
pub fn brute_force_solve(m: &MapGraph, problem: Problem) -> Result<(usize, Certificate), OracleError> {
    let g = m.graph();
    let limit = if problem.is_minimization() { ORACLE_MAX_DELETION } else { ORACLE_MAX_CYCLE };
    if g.n() > limit {
        return Err(OracleError { problem, n: g.n(), limit });
    }
    let adj: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    Ok(match problem {
        Problem::VertexCover => {
            let s = min_set(g.n(), |mask| (0..g.n()).all(|v| mask >> v & 1 == 1 || adj[v] & !mask == 0));
            (s.len(), Certificate::Vertices(s))
        }
        Problem::Fvs => {
            let s = min_set(g.n(), |mask| forest_outside(g, mask));
            (s.len(), Certificate::Vertices(s))
        }
        Problem::LongestCycle => match longest_cycle(&adj) {
            Some(c) => (c.len(), Certificate::Cycle(c)),
            None => (0, Certificate::None),
        },
        Problem::LongestPath => match longest_path(&adj) {
            Some(p) => (p.len(), Certificate::Path(p)),
            None => (0, Certificate::None),
        },
        Problem::CyclePacking => {
            let mut memo = HashMap::new();
            let full = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
            packing(&adj, full, &mut memo);
            let mut cycles = Vec::new();
            let mut mask = full;
            while mask != 0 {
                match &memo[&mask].1 {
                    Some(c) => {
                        mask = c.iter().fold(mask, |m, &x| m & !(1 << x));
                        cycles.push(c.clone());
                    }
                    None => mask &= mask - 1,
                }
            }
            (cycles.len(), Certificate::Cycles(cycles))
        }
    })
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Smallest set (by size, then numerically) satisfying `ok`.
fn min_set(n: usize, ok: impl Fn(u32) -> bool) -> Vec<usize> {
    let mut best: Option<u32> = None;
    for mask in 0..(1u32 << n) {
        if best.is_some_and(|b| mask.count_ones() >= b.count_ones()) {
            continue;
        }
        if ok(mask) {
            best = Some(mask);
        }
    }
    bits(best.unwrap())
}

fn forest_outside(g: &Graph, removed: u32) -> bool {
    let mut p: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in g.edges() {
        if removed >> a & 1 == 1 || removed >> b & 1 == 1 {
            continue;
        }
        let (ra, rb) = (find(&mut p, a), find(&mut p, b));
        if ra == rb {
            return false;
        }
        p[ra] = rb;
    }
    true
}

/// `ends[mask]`: vertices `v` such that some path covers exactly `mask` and ends
/// at `v`; paths start at the lowest vertex of `mask` when `anchored`.
fn path_table(adj: &[u32], anchored: bool) -> Vec<u32> {
    let n = adj.len();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1u32..(1 << n) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let low = mask.trailing_zeros();
        for v in bits(e) {
            let mut ext = adj[v] & !mask;
            if anchored {
                ext &= !((1u32 << low) - 1);
            }
            for w in bits(ext) {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    ends
}

fn unwind(adj: &[u32], ends: &[u32], mut mask: u32, mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << v);
        let u = bits(ends[rest as usize] & adj[v]).into_iter().next().unwrap();
        out.push(u);
        mask = rest;
        v = u;
    }
    out.reverse();
    out
}

fn longest_cycle(adj: &[u32]) -> Option<Vec<usize>> {
    let ends = path_table(adj, true);
    let mut best: Option<(u32, usize)> = None;
    for mask in 1u32..(1 << adj.len()) {
        if mask.count_ones() < 3 || best.is_some_and(|(b, _)| b.count_ones() >= mask.count_ones()) {
            continue;
        }
        let low = mask.trailing_zeros() as usize;
        if let Some(v) = bits(ends[mask as usize] & adj[low]).into_iter().next() {
            best = Some((mask, v));
        }
    }
    best.map(|(mask, v)| unwind(adj, &ends, mask, v))
}

fn longest_path(adj: &[u32]) -> Option<Vec<usize>> {
    let ends = path_table(adj, false);
    let mut best: Option<(u32, usize)> = None;
    for mask in 1u32..(1 << adj.len()) {
        if best.is_some_and(|(b, _)| b.count_ones() >= mask.count_ones()) {
            continue;
        }
        if let Some(v) = bits(ends[mask as usize]).into_iter().next() {
            best = Some((mask, v));
        }
    }
    best.map(|(mask, v)| unwind(adj, &ends, mask, v))
}

/// Maximum number of disjoint cycles inside `mask`; memo stores the value and
/// the cycle through the lowest vertex that was used, if any.
fn packing(adj: &[u32], mask: u32, memo: &mut HashMap<u32, (usize, Option<Vec<usize>>)>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&(v, _)) = memo.get(&mask) {
        return v;
    }
    let v = mask.trailing_zeros() as usize;
    let mut best = (packing(adj, mask & !(1 << v), memo), None);
    let mut cycles = Vec::new();
    let mut path = vec![v];
    induced_cycles(adj, mask, &mut path, &mut cycles);
    for c in cycles {
        let rest = c.iter().fold(mask, |m, &x| m & !(1 << x));
        let val = 1 + packing(adj, rest, memo);
        if val > best.0 {
            best = (val, Some(c));
        }
    }
    memo.insert(mask, best.clone());
    best.0
}

/// Chordless cycles through `path[0]` extending `path`, within `mask`.
fn induced_cycles(adj: &[u32], mask: u32, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let start = path[0];
    let last = *path.last().unwrap();
    let on_path = path.iter().fold(0u32, |m, &x| m | 1 << x);
    let inner = on_path & !(1 << start) & !(1 << last);
    for w in bits(adj[last] & mask & !on_path) {
        if adj[w] & inner != 0 {
            continue;
        }
        if path.len() >= 2 && adj[w] >> start & 1 == 1 {
            let mut c = path.clone();
            c.push(w);
            out.push(c);
            continue;
        }
        path.push(w);
        induced_cycles(adj, mask, path, out);
        path.pop();
    }
}
