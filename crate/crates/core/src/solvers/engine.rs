use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use indexmap::map::Entry;
use indexmap::IndexMap;
use rustc_hash::FxBuildHasher;

use super::plan::{Kind, Plan, PlanNode};

type FixedState = FxBuildHasher;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Item {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug)]
pub(crate) enum Trace {
    Nil,
    Push(Item, Arc<Trace>),
    Join(Arc<Trace>, Arc<Trace>),
}

impl Trace {
    pub fn items(self: &Arc<Self>) -> Vec<Item> {
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            match &*t {
                Trace::Nil => {}
                Trace::Push(i, rest) => {
                    out.push(*i);
                    stack.push(rest.clone());
                }
                Trace::Join(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
            }
        }
        out
    }
}

pub(crate) trait Dp {
    type S: Clone + Eq + Hash;

    fn empty(&self) -> Self::S;
    /// Pushes every way of adding `v` to the bag, with score deltas.
    fn introduce(&self, s: &Self::S, v: usize, out: &mut Vec<(Self::S, i64)>);
    fn forget(&self, s: &Self::S, v: usize) -> Option<(Self::S, i64, Option<Item>)>;
    /// Pushes every way of deciding edge `ab`, including not using it.
    fn edge(&self, s: &Self::S, a: usize, b: usize, out: &mut Vec<(Self::S, i64, Option<Item>)>);
    /// States of the two children only combine when their keys are equal.
    fn join_key(&self, _s: &Self::S, _shared: &[usize]) -> Vec<u8> {
        Vec::new()
    }
    /// Cheap summary used to skip pairs before calling `join`.
    fn join_sig(&self, _s: &Self::S, _node: &PlanNode, _shared: &[usize]) -> u128 {
        0
    }
    fn join_compatible(&self, _a: u128, _b: u128) -> bool {
        true
    }
    fn join(&self, a: &Self::S, b: &Self::S) -> Option<(Self::S, i64)>;
    /// Early rejection while the node's edges are still being decided; must not
    /// reject anything that some completion over `pending` would admit.
    fn viable(&self, _s: &Self::S, _score: i64, _t: usize, _node: &PlanNode, _pending: &[(usize, usize)]) -> bool {
        true
    }
    /// Early rejection of a child state entering join node `t`.
    fn viable_child(&self, _s: &Self::S, _t: usize, _node: &PlanNode) -> bool {
        true
    }
    /// Canonical form at the end of a node; states that differ only in ways the
    /// rest of the run cannot observe should map to the same value.
    fn normalize(&self, _s: &mut Self::S, _node: &PlanNode, _pending: &[(usize, usize)]) {}
    fn admissible(&self, s: &Self::S, t: usize, node: &PlanNode, score: i64) -> bool;
}

/// Insertion-ordered table keeping the best score per state; ties keep the first.
pub(crate) struct Table<S> {
    map: IndexMap<S, (i64, Arc<Trace>), FixedState>,
}

impl<S: Eq + Hash> Table<S> {
    fn new() -> Self {
        Table { map: IndexMap::default() }
    }

    fn offer(&mut self, s: S, score: i64, trace: Arc<Trace>) {
        match self.map.entry(s) {
            Entry::Occupied(mut e) => {
                let slot = e.get_mut();
                if score > slot.0 {
                    *slot = (score, trace);
                }
            }
            Entry::Vacant(e) => {
                e.insert((score, trace));
            }
        }
    }
}

pub(crate) struct Run<S> {
    pub root: Table<S>,
    pub node_states: Vec<usize>,
}

pub(crate) fn run<D: Dp>(d: &D, plan: &Plan) -> Run<D::S> {
    let n = plan.nodes.len();
    let mut tables: Vec<Option<Table<D::S>>> = (0..n).map(|_| None).collect();
    let mut node_states = vec![0; n];
    for t in 0..n {
        let node = &plan.nodes[t];
        let mut table = match &node.kind {
            Kind::Leaf => {
                let mut tb = Table::new();
                tb.offer(d.empty(), 0, Arc::new(Trace::Nil));
                introduce_all(d, tb, &node.bag)
            }
            Kind::Step { child, forget, intro } => {
                let tb = tables[*child].take().expect("child table");
                let tb = forget_all(d, tb, forget);
                introduce_all(d, tb, intro)
            }
            Kind::Join(a, b) => {
                let keep = |tb: Table<D::S>| {
                    let mut out = Table::new();
                    for (s, score, tr) in tb.into_entries() {
                        if d.viable_child(&s, t, node) {
                            out.offer(s, score, tr);
                        }
                    }
                    out
                };
                let ta = keep(tables[*a].take().expect("left table"));
                let tbb = keep(tables[*b].take().expect("right table"));
                let shared: Vec<usize> = plan.nodes[*a]
                    .bag
                    .iter()
                    .copied()
                    .filter(|x| plan.nodes[*b].bag.binary_search(x).is_ok())
                    .collect();
                let joined = join(d, node, &ta, &tbb, &shared);
                let mut tb = Table::new();
                for (mut s, score, tr) in joined.into_entries() {
                    d.normalize(&mut s, node, &node.edges);
                    if d.viable(&s, score, t, node, &node.edges) {
                        tb.offer(s, score, tr);
                    }
                }
                tb
            }
        };
        for (i, &(a, b)) in node.edges.iter().enumerate() {
            let pending = &node.edges[i + 1..];
            let mut next = Table::new();
            let mut out = Vec::new();
            for (s, score, tr) in table.iter() {
                out.clear();
                d.edge(s, a, b, &mut out);
                for (mut ns, delta, item) in out.drain(..) {
                    d.normalize(&mut ns, node, pending);
                    if !d.viable(&ns, score + delta, t, node, pending) {
                        continue;
                    }
                    let trace = match item {
                        Some(i) => Arc::new(Trace::Push(i, tr.clone())),
                        None => tr.clone(),
                    };
                    next.offer(ns, score + delta, trace);
                }
            }
            table = next;
        }
        let mut kept = Table::new();
        for (mut s, score, tr) in table.into_entries() {
            d.normalize(&mut s, node, &[]);
            if d.admissible(&s, t, node, score) {
                kept.offer(s, score, tr);
            }
        }
        node_states[t] = kept.len();
        tables[t] = Some(kept);
    }
    Run { root: tables[plan.root].take().expect("root table"), node_states }
}

fn introduce_all<D: Dp>(d: &D, mut tb: Table<D::S>, vs: &[usize]) -> Table<D::S> {
    let mut out = Vec::new();
    for &v in vs {
        let mut next = Table::new();
        for (s, score, tr) in tb.iter() {
            out.clear();
            d.introduce(s, v, &mut out);
            for (ns, delta) in out.drain(..) {
                next.offer(ns, score + delta, tr.clone());
            }
        }
        tb = next;
    }
    tb
}

fn forget_all<D: Dp>(d: &D, mut tb: Table<D::S>, vs: &[usize]) -> Table<D::S> {
    for &v in vs {
        let mut next = Table::new();
        for (s, score, tr) in tb.iter() {
            if let Some((ns, delta, item)) = d.forget(s, v) {
                let trace = match item {
                    Some(i) => Arc::new(Trace::Push(i, tr.clone())),
                    None => tr.clone(),
                };
                next.offer(ns, score + delta, trace);
            }
        }
        tb = next;
    }
    tb
}

fn join<D: Dp>(d: &D, node: &PlanNode, ta: &Table<D::S>, tb: &Table<D::S>, shared: &[usize]) -> Table<D::S> {
    type Groups = HashMap<Vec<u8>, HashMap<u128, Vec<usize>, FixedState>, FixedState>;
    let mut groups: Groups = HashMap::default();
    let mut order: HashMap<Vec<u8>, Vec<u128>, FixedState> = HashMap::default();
    for (i, (s, _, _)) in tb.iter().enumerate() {
        let key = d.join_key(s, shared);
        let sig = d.join_sig(s, node, shared);
        let g = groups.entry(key.clone()).or_default();
        if !g.contains_key(&sig) {
            order.entry(key).or_default().push(sig);
        }
        g.entry(sig).or_default().push(i);
    }
    let mut out = Table::new();
    for (sa, pa, ra) in ta.iter() {
        let key = d.join_key(sa, shared);
        let Some(group) = groups.get(&key) else { continue };
        let sig_a = d.join_sig(sa, node, shared);
        for sig_b in &order[&key] {
            if !d.join_compatible(sig_a, *sig_b) {
                continue;
            }
            for &j in &group[sig_b] {
                let (sb, pb, rb) = tb.get_index(j);
                if let Some((s, delta)) = d.join(sa, sb) {
                    out.offer(s, pa + pb + delta, Arc::new(Trace::Join(ra.clone(), rb.clone())));
                }
            }
        }
    }
    out
}

impl<S> Table<S> {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    fn iter(&self) -> impl Iterator<Item = (&S, i64, &Arc<Trace>)> {
        self.map.iter().map(|(s, (score, tr))| (s, *score, tr))
    }

    fn into_entries(self) -> impl Iterator<Item = (S, i64, Arc<Trace>)> {
        self.map.into_iter().map(|(s, (score, tr))| (s, score, tr))
    }

    fn get_index(&self, i: usize) -> (&S, i64, &Arc<Trace>) {
        let (s, (score, tr)) = self.map.get_index(i).expect("index in table");
        (s, *score, tr)
    }

    /// First entry with the highest accepted value.
    pub fn best(&self, accept: impl Fn(&S, i64) -> Option<i64>) -> Option<(i64, &S, &Arc<Trace>)> {
        let mut best: Option<(i64, &S, &Arc<Trace>)> = None;
        for (s, score, tr) in self.iter() {
            if let Some(v) = accept(s, score) {
                if best.is_none_or(|b| v > b.0) {
                    best = Some((v, s, tr));
                }
            }
        }
        best
    }
}

pub(crate) fn vertices(items: &[Item]) -> Vec<usize> {
    let mut v: Vec<usize> = items.iter().filter_map(|i| if let Item::Vertex(v) = i { Some(*v) } else { None }).collect();
    v.sort_unstable();
    v
}

pub(crate) fn edges(items: &[Item]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> =
        items.iter().filter_map(|i| if let Item::Edge(a, b) = i { Some((*a, *b)) } else { None }).collect();
    e.sort_unstable();
    e
}
