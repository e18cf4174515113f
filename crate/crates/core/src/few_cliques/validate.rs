use std::fmt;

use super::{crossing_classification, FcdLabel, FewCliquesDecomposition};
use crate::decomposition::{validate_td, TdViolation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcdViolation {
    /// Tree-decomposition axiom failure for `G`.
    Axiom(TdViolation),
    OriginalFakeOverlap(usize),
    BagBudget { node: usize, size: usize, limit: usize },
    /// `{t : v ∈ Fake(t), s ∈ β(t)}` is not the path from `Forget(v)` to below `Forget(s)`.
    FakePath { vertex: usize, special: usize },
    RedundantChanged(usize),
    JoinOriginal(usize),
    JoinCliques(usize),
    JoinFakeOverlap(usize),
    JoinFakeUnion(usize),
    FakeIntroduceCount { vertex: usize, count: usize },
    FakeIntroduceShape { vertex: usize, node: usize },
    Unclassified { node: usize, inside: usize, outside: usize },
    Label(usize),
}

impl fmt::Display for FcdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FcdViolation::*;
        match self {
            Axiom(v) => write!(f, "{v}"),
            OriginalFakeOverlap(t) => write!(f, "node {t}: original and fake overlap"),
            BagBudget { node, size, limit } => write!(f, "node {node}: |original|+|cliques| = {size} > {limit}"),
            FakePath { vertex, special } => write!(f, "fake path of vertex {vertex} via special {special} is broken"),
            RedundantChanged(t) => write!(f, "redundant node {t} changes original or fake"),
            JoinOriginal(t) => write!(f, "join {t}: original differs across children"),
            JoinCliques(t) => write!(f, "join {t}: cliques differ across children"),
            JoinFakeOverlap(t) => write!(f, "join {t}: children share fake vertices"),
            JoinFakeUnion(t) => write!(f, "join {t}: fake is not the union of the children's"),
            FakeIntroduceCount { vertex, count } => write!(f, "vertex {vertex} is fake-introduced {count} times"),
            FakeIntroduceShape { vertex, node } => write!(f, "fake introduce of {vertex} at node {node} is malformed"),
            Unclassified { node, inside, outside } => write!(f, "node {node}: edge {inside}-{outside} fits neither crossing class"),
            Label(t) => write!(f, "node {t}: label disagrees with bags"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FcdReport {
    pub violations: Vec<FcdViolation>,
}

impl FcdReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

pub fn validate_fcd(f: &FewCliquesDecomposition) -> FcdReport {
    let mut v = Vec::new();
    let g = f.map_graph().graph();
    v.extend(validate_td(&f.as_td(), g).violations.into_iter().map(FcdViolation::Axiom));
    let limit = f.width_d() + 1;
    for t in 0..f.node_count() {
        if f.original(t).iter().any(|x| f.fake(t).binary_search(x).is_ok()) {
            v.push(FcdViolation::OriginalFakeOverlap(t));
        }
        let size = f.original(t).len() + f.cliques(t).len();
        if size > limit {
            v.push(FcdViolation::BagBudget { node: t, size, limit });
        }
        if union(f.original(t), f.fake(t)) != f.bag(t) {
            v.push(FcdViolation::Label(t));
        }
        let ch = f.children(t);
        match f.label(t) {
            FcdLabel::Redundant => {
                let c = ch[0];
                if f.original(c) != f.original(t) || f.fake(c) != f.fake(t) {
                    v.push(FcdViolation::RedundantChanged(t));
                }
            }
            FcdLabel::Join => {
                let (a, b) = (ch[0], ch[1]);
                if f.original(a) != f.original(t) || f.original(b) != f.original(t) {
                    v.push(FcdViolation::JoinOriginal(t));
                }
                if f.cliques(a) != f.cliques(t) || f.cliques(b) != f.cliques(t) {
                    v.push(FcdViolation::JoinCliques(t));
                }
                if f.fake(a).iter().any(|x| f.fake(b).binary_search(x).is_ok()) {
                    v.push(FcdViolation::JoinFakeOverlap(t));
                }
                if union(f.fake(a), f.fake(b)) != f.fake(t) {
                    v.push(FcdViolation::JoinFakeUnion(t));
                }
            }
            FcdLabel::Introduce(x) => {
                if union(f.bag(ch[0]), &[*x]) != f.bag(t) || f.bag(ch[0]).contains(x) {
                    v.push(FcdViolation::Label(t));
                }
            }
            FcdLabel::Forget(x) => {
                if minus(f.bag(ch[0]), &[*x]) != f.bag(t) || !f.bag(ch[0]).contains(x) {
                    v.push(FcdViolation::Label(t));
                }
            }
            FcdLabel::ForgetSet(s) => {
                if minus(f.bag(ch[0]), s) != f.bag(t) || minus(f.bag(ch[0]), f.bag(t)) != *s {
                    v.push(FcdViolation::Label(t));
                }
            }
            FcdLabel::FakeIntroduce(x) => {
                let c = ch[0];
                let ok = f.bag(c) == f.bag(t)
                    && f.original(c).binary_search(x).is_ok()
                    && f.fake(t).binary_search(x).is_ok();
                if !ok {
                    v.push(FcdViolation::FakeIntroduceShape { vertex: *x, node: t });
                }
            }
            FcdLabel::Leaf => {
                if !ch.is_empty() {
                    v.push(FcdViolation::Label(t));
                }
            }
        }
    }
    fake_introduce_checks(f, &mut v);
    fake_path_checks(f, &mut v);
    for t in 0..f.node_count() {
        if let Err(e) = crossing_classification(f, t) {
            v.push(FcdViolation::Unclassified { node: t, inside: e.inside, outside: e.outside });
        }
    }
    FcdReport { violations: v }
}

/// At most one `FakeIntroduce(v)`; the nodes where `v` is fake form the
/// upward path starting there.
fn fake_introduce_checks(f: &FewCliquesDecomposition, v: &mut Vec<FcdViolation>) {
    let n = f.nation_count();
    let mut count = vec![0usize; n];
    let mut at = vec![None; n];
    for t in 0..f.node_count() {
        if let FcdLabel::FakeIntroduce(x) = f.label(t) {
            count[*x] += 1;
            at[*x] = Some(t);
        }
    }
    for x in 0..n {
        if count[x] > 1 {
            v.push(FcdViolation::FakeIntroduceCount { vertex: x, count: count[x] });
            continue;
        }
        let fake_nodes: Vec<usize> = (0..f.node_count()).filter(|&t| f.fake(t).binary_search(&x).is_ok()).collect();
        match at[x] {
            None if !fake_nodes.is_empty() => v.push(FcdViolation::FakeIntroduceCount { vertex: x, count: 0 }),
            None => {}
            Some(t0) => {
                let mut path = Vec::new();
                let mut t = Some(t0);
                while let Some(u) = t {
                    if f.fake(u).binary_search(&x).is_err() {
                        break;
                    }
                    path.push(u);
                    t = f.parent(u);
                }
                path.sort_unstable();
                if path != fake_nodes {
                    v.push(FcdViolation::FakeIntroduceShape { vertex: x, node: t0 });
                }
            }
        }
    }
}

fn fake_path_checks(f: &FewCliquesDecomposition, v: &mut Vec<FcdViolation>) {
    let d = f.source();
    let w = f.nation_count();
    for (s, k) in f.map_graph().special_cliques().iter().enumerate() {
        let Some(fs) = d.forget_node(w + s) else { continue };
        for &x in k {
            let q: Vec<usize> = (0..f.node_count())
                .filter(|&t| f.fake(t).binary_search(&x).is_ok() && f.cliques(t).binary_search(&s).is_ok())
                .collect();
            if q.is_empty() {
                continue;
            }
            let Some(fv) = d.forget_node(x) else {
                v.push(FcdViolation::FakePath { vertex: x, special: s });
                continue;
            };
            let mut path = Vec::new();
            let mut t = Some(fv);
            while let Some(u) = t {
                if u == fs {
                    break;
                }
                path.push(u);
                t = f.parent(u);
            }
            path.sort_unstable();
            if t != Some(fs) || path != q {
                v.push(FcdViolation::FakePath { vertex: x, special: s });
            }
        }
    }
}
