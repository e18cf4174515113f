use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::engine::{edges, run, Dp, Item};
use super::plan::{build, PlanNode};
use super::bounds::{greedy_cycle, greedy_path};
use super::{finish, CapOverride, Certificate, Problem, SolveOptions, SolveResult, Stats};
use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::MapGraph;

/// Degree status of a bag vertex in the partial solution. `End(p)`: degree one,
/// and `p` is the other end of the same path. `Tail`: degree one, and the other
/// end of the path has already been forgotten as a final path endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum St {
    Absent,
    End(u32),
    Tail,
    Sat,
}

impl St {
    fn degree(self) -> usize {
        match self {
            St::Absent => 0,
            St::End(_) | St::Tail => 1,
            St::Sat => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct CState {
    st: SmallVec<[(u32, St); 14]>,
    closed: bool,
}

impl CState {
    fn pos(&self, v: usize) -> usize {
        self.st.binary_search_by_key(&(v as u32), |&(x, _)| x).unwrap()
    }

    fn get(&self, v: usize) -> St {
        self.st[self.pos(v)].1
    }

    fn set(&mut self, v: usize, s: St) {
        let i = self.pos(v);
        self.st[i].1 = s;
    }

    fn tails(&self) -> usize {
        self.st.iter().filter(|(_, s)| *s == St::Tail).count()
    }

    fn is_blank(&self) -> bool {
        !self.closed && self.st.iter().all(|(_, s)| *s == St::Absent)
    }

    /// No partial path left open.
    fn settled(&self) -> bool {
        self.st.iter().all(|(_, s)| matches!(s, St::Absent | St::Sat))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// One cycle; score counts edges.
    Cycle,
    /// One path; score counts edges.
    Path,
    /// Any number of disjoint cycles; score counts closed cycles.
    Packing,
}

pub(crate) struct CycleDp {
    pub mode: Mode,
    /// Per-node limit on degree-one statuses.
    pub caps: Vec<usize>,
    /// Score of a known solution; states that cannot reach it are dropped.
    pub floor: i64,
}

impl CycleDp {
    fn edge_score(&self) -> i64 {
        match self.mode {
            Mode::Packing => 0,
            _ => 1,
        }
    }

    /// Marks a completed single cycle or path; nothing else may remain open.
    fn close(&self, mut n: CState) -> Option<CState> {
        if !n.settled() {
            return None;
        }
        n.closed = true;
        Some(n)
    }
}

impl Dp for CycleDp {
    type S = CState;

    fn empty(&self) -> CState {
        CState { st: SmallVec::new(), closed: false }
    }

    fn introduce(&self, s: &CState, v: usize, out: &mut Vec<(CState, i64)>) {
        let mut n = s.clone();
        let i = n.st.partition_point(|&(x, _)| (x as usize) < v);
        n.st.insert(i, (v as u32, St::Absent));
        out.push((n, 0));
    }

    fn forget(&self, s: &CState, v: usize) -> Option<(CState, i64, Option<Item>)> {
        let i = s.pos(v);
        let st = s.st[i].1;
        let mut n = s.clone();
        n.st.remove(i);
        match (st, self.mode) {
            (St::Absent | St::Sat, _) => Some((n, 0, None)),
            (St::End(p), Mode::Path) if n.tails() < 2 => {
                n.set(p as usize, St::Tail);
                Some((n, 0, None))
            }
            (St::Tail, Mode::Path) if !s.closed => Some((self.close(n)?, 0, None)),
            _ => None,
        }
    }

    fn edge(&self, s: &CState, a: usize, b: usize, out: &mut Vec<(CState, i64, Option<Item>)>) {
        out.push((s.clone(), 0, None));
        if s.closed {
            return;
        }
        let item = Some(Item::Edge(a, b));
        let mut n = s.clone();
        let delta = self.edge_score();
        let (a32, b32) = (a as u32, b as u32);
        match (s.get(a), s.get(b)) {
            (St::Absent, St::Absent) => {
                n.set(a, St::End(b32));
                n.set(b, St::End(a32));
            }
            (St::Absent, St::End(p)) | (St::End(p), St::Absent) => {
                let (x, y) = if s.get(a) == St::Absent { (a, b) } else { (b, a) };
                n.set(x, St::End(p));
                n.set(p as usize, St::End(x as u32));
                n.set(y, St::Sat);
            }
            (St::Absent, St::Tail) | (St::Tail, St::Absent) => {
                let (x, y) = if s.get(a) == St::Absent { (a, b) } else { (b, a) };
                n.set(x, St::Tail);
                n.set(y, St::Sat);
            }
            (St::End(p), St::End(q)) => {
                n.set(a, St::Sat);
                n.set(b, St::Sat);
                if p == b32 {
                    match self.mode {
                        Mode::Cycle => match self.close(n) {
                            Some(c) => n = c,
                            None => return,
                        },
                        Mode::Packing => {
                            out.push((n, 1, item));
                            return;
                        }
                        Mode::Path => return,
                    }
                } else {
                    n.set(p as usize, St::End(q));
                    n.set(q as usize, St::End(p));
                }
            }
            (St::End(p), St::Tail) | (St::Tail, St::End(p)) => {
                n.set(a, St::Sat);
                n.set(b, St::Sat);
                n.set(p as usize, St::Tail);
            }
            (St::Tail, St::Tail) => {
                n.set(a, St::Sat);
                n.set(b, St::Sat);
                match self.close(n) {
                    Some(c) => n = c,
                    None => return,
                }
            }
            _ => return,
        }
        out.push((n, delta, item));
    }

    fn join_sig(&self, s: &CState, node: &PlanNode, shared: &[usize]) -> u128 {
        const OPAQUE: u128 = 1 << 127;
        if shared.len() > 60 {
            return OPAQUE;
        }
        let (mut used, mut sat) = (0u64, 0u64);
        for (i, &v) in shared.iter().enumerate() {
            match s.get(v) {
                St::Absent => {}
                St::Sat => {
                    used |= 1 << i;
                    sat |= 1 << i;
                }
                _ => used |= 1 << i,
            }
        }
        used |= u64::from(!s.is_blank()) << 61;
        sat |= u64::from(s.closed) << 61;
        if self.mode == Mode::Path {
            let terminals = (self.scan(s, node, &node.edges, true).stranded + s.tails()).min(3);
            used |= (terminals as u64) << 62;
        }
        u128::from(used) | u128::from(sat) << 64
    }

    fn join_compatible(&self, a: u128, b: u128) -> bool {
        const MASK: u64 = (1 << 62) - 1;
        if (a | b) >> 127 == 1 {
            return true;
        }
        let (au, as_) = (a as u64, (a >> 64) as u64);
        let (bu, bs) = (b as u64, (b >> 64) as u64);
        // bit 61 of `used` marks a non-blank state, of `sat` a closed one;
        // bits 62.. count path ends that can no longer grow
        (au & bs & MASK) == 0 && (as_ & bu & MASK) == 0 && (au >> 62) + (bu >> 62) <= 2
    }

    fn join(&self, a: &CState, b: &CState) -> Option<(CState, i64)> {
        if (a.closed || b.closed) && !(a.is_blank() || b.is_blank()) {
            return None;
        }
        let mut deg: BTreeMap<u32, usize> = BTreeMap::new();
        // virtual edges; `u32::MAX - i` stands for the forgotten endpoint behind a tail
        let mut virt: Vec<(u32, u32)> = Vec::new();
        let mut stubs = 0u32;
        for s in [a, b] {
            for &(x, st) in &s.st {
                *deg.entry(x).or_insert(0) += st.degree();
                match st {
                    St::End(p) if x < p => virt.push((x, p)),
                    St::Tail => {
                        virt.push((x, u32::MAX - stubs));
                        stubs += 1;
                    }
                    _ => {}
                }
            }
        }
        if deg.values().any(|&d| d > 2) || stubs > 2 {
            return None;
        }
        let mut adj: BTreeMap<u32, Vec<(usize, u32)>> = BTreeMap::new();
        for (i, &(x, p)) in virt.iter().enumerate() {
            adj.entry(x).or_default().push((i, p));
            adj.entry(p).or_default().push((i, x));
        }
        let mut used = vec![false; virt.len()];
        let walk = |from: u32, used: &mut Vec<bool>| -> u32 {
            let mut cur = from;
            while let Some(&(e, y)) = adj[&cur].iter().find(|(e, _)| !used[*e]) {
                used[e] = true;
                cur = y;
            }
            cur
        };
        let is_stub = |x: u32| x > u32::MAX - 2;
        let mut partner: BTreeMap<u32, u32> = BTreeMap::new();
        let mut finished_paths = 0;
        for (&x, nb) in &adj {
            if nb.len() == 1 && !partner.contains_key(&x) {
                let y = walk(x, &mut used);
                partner.insert(x, y);
                partner.insert(y, x);
                if is_stub(x) && is_stub(y) {
                    finished_paths += 1;
                }
            }
        }
        let mut cycles = 0usize;
        for e in 0..virt.len() {
            if !used[e] {
                cycles += 1;
                walk(virt[e].0, &mut used);
            }
        }
        let st: SmallVec<[(u32, St); 14]> = deg
            .iter()
            .map(|(&x, &d)| {
                let s = match d {
                    0 => St::Absent,
                    1 if is_stub(partner[&x]) => St::Tail,
                    1 => St::End(partner[&x]),
                    _ => St::Sat,
                };
                (x, s)
            })
            .collect();
        let mut out = CState { st, closed: a.closed || b.closed };
        let mut delta = 0;
        match self.mode {
            Mode::Cycle if cycles > 0 => {
                if cycles > 1 || out.closed {
                    return None;
                }
                out = self.close(out)?;
            }
            Mode::Packing => delta = cycles as i64,
            Mode::Path if cycles > 0 => return None,
            Mode::Path if finished_paths > 0 => {
                if out.closed {
                    return None;
                }
                out = self.close(out)?;
            }
            _ => {}
        }
        Some((out, delta))
    }

    fn viable(&self, s: &CState, score: i64, t: usize, node: &PlanNode, pending: &[(usize, usize)]) -> bool {
        self.ceiling(s, node, score) >= self.floor && self.completable(s, t, node, pending, false)
    }

    fn viable_child(&self, s: &CState, t: usize, node: &PlanNode) -> bool {
        self.completable(s, t, node, &node.edges, true)
    }

    fn normalize(&self, s: &mut CState, node: &PlanNode, pending: &[(usize, usize)]) {
        // a non-original vertex without unseen neighbours or pending edges gets
        // no further edges, so whether it was used no longer matters
        let aligned = s.st.len() == node.bag.len();
        for (k, (v, st)) in s.st.iter_mut().enumerate() {
            if *st != St::Sat {
                continue;
            }
            let i = if aligned { k } else { node.bag.binary_search(&(*v as usize)).expect("state vertex in bag") };
            if !node.is_original[i] && node.outside[i].is_empty() && !node.has_pending(i, pending) {
                *st = St::Absent;
            }
        }
    }

    fn admissible(&self, s: &CState, t: usize, node: &PlanNode, score: i64) -> bool {
        self.ceiling(s, node, score) >= self.floor && self.completable(s, t, node, &[], false)
    }
}

impl CycleDp {
    /// Upper bound on the final score of any completion of `s`.
    fn ceiling(&self, s: &CState, node: &PlanNode, score: i64) -> i64 {
        if s.closed {
            return score;
        }
        let fresh = s.st.iter().filter(|(_, st)| *st == St::Absent).count() + node.unseen;
        let ends = s.st.iter().filter(|(_, st)| matches!(st, St::End(_))).count();
        let pieces = ends / 2 + s.tails();
        let more = match self.mode {
            Mode::Cycle | Mode::Path => fresh + pieces,
            Mode::Packing => pieces + fresh / 3,
        };
        score + more as i64
    }

    /// Necessary condition for extending `s`: the degree-one vertices fit under
    /// the cap, and each one not touched by a `pending` edge of this node can
    /// still receive an edge from an unseen vertex or an original bag vertex.
    /// `partial`: `s` covers one side of a join, so originals may still gain
    /// edges from the other side and the cap is not yet in force.
    fn completable(&self, s: &CState, t: usize, node: &PlanNode, pending: &[(usize, usize)], partial: bool) -> bool {
        let (mut ends, mut tails) = (0, 0);
        for &(_, st) in &s.st {
            match st {
                St::End(_) => ends += 1,
                St::Tail => {
                    ends += 1;
                    tails += 1;
                }
                _ => {}
            }
        }
        if ends > self.caps[t] && !partial {
            return false;
        }
        // a path has two final ends; each tail has already used one
        let slack = if self.mode == Mode::Path { 2 - tails } else { 0 };
        if ends <= slack {
            return true;
        }
        let w = self.scan(s, node, pending, partial);
        if w.waiting <= slack {
            return true;
        }
        if w.stranded > slack {
            return false;
        }
        let aligned = s.st.len() == node.bag.len();
        let room: usize = if aligned {
            s.st.iter().zip(&node.is_original).filter(|(_, &o)| o).map(|((_, st), _)| 2 - st.degree()).sum()
        } else {
            node.original.iter().map(|&v| 2 - s.get(v).degree()).sum()
        };
        w.waiting <= room + w.hits + slack
    }

    /// Degree-one vertices that no `pending` edge touches: how many there are,
    /// how many of them can never gain another edge, and how many edges unseen
    /// vertices could still give them.
    fn scan(&self, s: &CState, node: &PlanNode, pending: &[(usize, usize)], partial: bool) -> Waiting {
        let aligned = s.st.len() == node.bag.len();
        let degree = |j: usize| if aligned { s.st[j].1.degree() } else { s.get(node.bag[j]).degree() };
        let mut out = Waiting::default();
        let mut hits: SmallVec<[(usize, usize); 16]> = SmallVec::new();
        for (k, &(v, st)) in s.st.iter().enumerate() {
            if st.degree() != 1 {
                continue;
            }
            let i = if aligned { k } else { node.bag.binary_search(&(v as usize)).expect("state vertex in bag") };
            if (partial && node.is_original[i]) || node.has_pending(i, pending) {
                continue;
            }
            out.waiting += 1;
            if node.outside[i].is_empty() {
                let inner = node.is_original[i] && node.original_adj[i].iter().any(|&j| degree(j) < 2);
                if !inner {
                    out.stranded += 1;
                }
            }
            for &w in &node.outside[i] {
                match hits.iter_mut().find(|(x, _)| *x == w) {
                    Some((_, h)) => *h += 1,
                    None => hits.push((w, 1)),
                }
            }
        }
        out.hits = hits.iter().map(|&(_, h)| h.min(2)).sum();
        out
    }
}

#[derive(Default)]
struct Waiting {
    waiting: usize,
    stranded: usize,
    hits: usize,
}

pub(crate) fn caps(plan_nodes: &[PlanNode], cap: CapOverride, default: impl Fn(&PlanNode) -> usize) -> Vec<usize> {
    plan_nodes
        .iter()
        .map(|n| match cap {
            CapOverride::Default => default(n),
            CapOverride::Uniform(c) => c,
            CapOverride::Unbounded => usize::MAX,
        })
        .collect()
}

pub(crate) fn cycle_cap(n: &PlanNode) -> usize {
    2 * n.original.len() + 4 * n.clique_parts.len()
}

/// A path is a cycle with its two endpoints treated as original everywhere.
pub(crate) fn path_cap(n: &PlanNode) -> usize {
    cycle_cap(n) + 4
}

/// Result for a greedy solution that already meets the trivial upper bound.
pub(crate) fn bound_hit(problem: Problem, k: Option<usize>, value: usize, c: Certificate) -> SolveResult {
    let stats = Stats { early_exit: Some("bound"), ..Default::default() };
    finish(problem, k, Some(value), c, stats)
}

pub(crate) fn stats_for(node_states: Vec<usize>, caps: &[usize]) -> Stats {
    Stats {
        max_states: node_states.iter().copied().max().unwrap_or(0),
        node_states,
        cap: caps.iter().copied().filter(|&c| c != usize::MAX).max(),
        ..Default::default()
    }
}

/// Splits a set of vertex-disjoint cycles (as edges) into vertex sequences,
/// each starting at its smallest vertex.
pub(crate) fn cycles_from_edges(es: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in es {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut c = vec![start];
        seen.insert(start);
        let mut prev = start;
        let mut cur = *adj[&start].iter().min().unwrap();
        while cur != start {
            seen.insert(cur);
            c.push(cur);
            let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        out.push(c);
    }
    out
}

fn path_from_edges(es: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in es {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let u = adj.iter().find(|(_, nb)| nb.len() == 1).map_or(0, |(&x, _)| x);
    let mut out = vec![u];
    let mut prev = usize::MAX;
    let mut cur = u;
    while let Some(&next) = adj.get(&cur).and_then(|nb| nb.iter().find(|&&x| x != prev)) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

pub(crate) fn solve_longest_cycle(m: &MapGraph, f: &FewCliquesDecomposition, opts: &SolveOptions) -> SolveResult {
    let k = opts.k;
    let greedy = if opts.exhaustive { Vec::new() } else { greedy_cycle(m.graph()) };
    if !opts.skip_early_exit && !greedy.is_empty() && greedy.len() == m.n() {
        return bound_hit(Problem::LongestCycle, k, greedy.len(), Certificate::Cycle(greedy));
    }
    let floor = greedy.len();
    let plan = build(f);
    let caps = caps(&plan.nodes, opts.cap, cycle_cap);
    let r = run(&CycleDp { mode: Mode::Cycle, caps: caps.clone(), floor: floor as i64 }, &plan);
    let best = r.root.best(|s, score| {
        if s.closed {
            Some(score)
        } else if s.is_blank() {
            Some(0)
        } else {
            None
        }
    });
    let stats = stats_for(r.node_states, &caps);
    match best {
        Some((v, _, tr)) if v > 0 => {
            let c = cycles_from_edges(&edges(&tr.items())).pop().unwrap();
            finish(Problem::LongestCycle, k, Some(c.len()), Certificate::Cycle(c), stats)
        }
        _ => finish(Problem::LongestCycle, k, Some(0), Certificate::None, stats),
    }
}

pub(crate) fn solve_longest_path(m: &MapGraph, f: &FewCliquesDecomposition, opts: &SolveOptions) -> SolveResult {
    let k = opts.k;
    if m.n() == 0 {
        return finish(Problem::LongestPath, k, Some(0), Certificate::None, Stats::default());
    }
    let greedy = if opts.exhaustive { Vec::new() } else { greedy_path(m.graph()) };
    if !opts.skip_early_exit && greedy.len() == m.n() {
        return bound_hit(Problem::LongestPath, k, greedy.len(), Certificate::Path(greedy));
    }
    // the DP scores edges, one less than the vertex count
    let floor = greedy.len().saturating_sub(1);
    let plan = build(f);
    let caps = caps(&plan.nodes, opts.cap, path_cap);
    let r = run(&CycleDp { mode: Mode::Path, caps: caps.clone(), floor: floor as i64 }, &plan);
    let best = r.root.best(|s, score| s.closed.then_some(score + 1));
    let stats = stats_for(r.node_states, &caps);
    let path = match best {
        Some((_, _, tr)) => path_from_edges(&edges(&tr.items())),
        None => vec![0],
    };
    finish(Problem::LongestPath, k, Some(path.len()), Certificate::Path(path), stats)
}
