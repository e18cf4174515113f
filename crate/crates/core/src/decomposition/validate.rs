use std::fmt;

use super::{NiceLabel, NiceTreeDecomposition, TreeDecomposition};
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree,
    BagOutOfRange { node: usize, vertex: usize },
    UnsortedBag(usize),
    /// axiom (a)
    VertexMissing(usize),
    /// axiom (b)
    EdgeUncovered(usize, usize),
    /// axiom (c)
    Disconnected(usize),
    RootNotEmpty,
    LeafNotEmpty(usize),
    NotBinary(usize),
    BadLabel { node: usize, label: NiceLabel },
    ForgetCount { vertex: usize, count: usize },
    ChildrenMismatch(usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TdViolation::*;
        match self {
            NotATree => write!(f, "parent pointers do not form a rooted tree"),
            BagOutOfRange { node, vertex } => write!(f, "bag {node} contains unknown vertex {vertex}"),
            UnsortedBag(t) => write!(f, "bag {t} is not sorted and duplicate-free"),
            VertexMissing(v) => write!(f, "axiom (a): vertex {v} is in no bag"),
            EdgeUncovered(u, v) => write!(f, "axiom (b): edge {u}-{v} is in no bag"),
            Disconnected(v) => write!(f, "axiom (c): bags containing {v} are disconnected"),
            RootNotEmpty => write!(f, "root bag is not empty"),
            LeafNotEmpty(t) => write!(f, "leaf {t} has a nonempty bag"),
            NotBinary(t) => write!(f, "node {t} has more than two children"),
            BadLabel { node, label } => write!(f, "node {node} does not match label {label:?}"),
            ForgetCount { vertex, count } => write!(f, "vertex {vertex} is forgotten {count} times"),
            ChildrenMismatch(t) => write!(f, "child list of node {t} disagrees with parent pointers"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TdReport {
    pub violations: Vec<TdViolation>,
}

impl TdReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three decomposition axioms against `g`.
pub fn validate_td(td: &TreeDecomposition, g: &Graph) -> TdReport {
    let mut v = Vec::new();
    let Ok(pre) = td.preorder() else {
        return TdReport { violations: vec![TdViolation::NotATree] };
    };
    let n = g.n();
    for (t, bag) in td.bags.iter().enumerate() {
        if bag.windows(2).any(|w| w[0] >= w[1]) {
            v.push(TdViolation::UnsortedBag(t));
        }
        for &x in bag.iter().filter(|&&x| x >= n) {
            v.push(TdViolation::BagOutOfRange { node: t, vertex: x });
        }
    }
    if !v.is_empty() {
        return TdReport { violations: v };
    }
    let mut tops = vec![0usize; n];
    for &t in &pre {
        for &x in &td.bags[t] {
            let p_has = td.parent[t].is_some_and(|p| td.bags[p].binary_search(&x).is_ok());
            if !p_has {
                tops[x] += 1;
            }
        }
    }
    for (x, &c) in tops.iter().enumerate() {
        if c == 0 {
            v.push(TdViolation::VertexMissing(x));
        } else if c > 1 {
            v.push(TdViolation::Disconnected(x));
        }
    }
    for (a, b) in g.edges() {
        let covered = td
            .bags
            .iter()
            .any(|bag| bag.binary_search(&a).is_ok() && bag.binary_search(&b).is_ok());
        if !covered {
            v.push(TdViolation::EdgeUncovered(a, b));
        }
    }
    TdReport { violations: v }
}

/// Axioms plus the nice label grammar and forget uniqueness.
pub fn validate_nice(nice: &NiceTreeDecomposition, g: &Graph) -> TdReport {
    let mut report = validate_td(&nice.td, g);
    if report.violations.contains(&TdViolation::NotATree) {
        return report;
    }
    let v = &mut report.violations;
    let td = &nice.td;
    let ch = td.children();
    if !nice.td.bags[td.root].is_empty() {
        v.push(TdViolation::RootNotEmpty);
    }
    let mut forgets = vec![0usize; g.n()];
    for t in 0..nice.node_count() {
        let mut mine = nice.children[t].clone();
        mine.sort_unstable();
        if mine != ch[t] {
            v.push(TdViolation::ChildrenMismatch(t));
            continue;
        }
        let kids = &nice.children[t];
        if kids.len() > 2 {
            v.push(TdViolation::NotBinary(t));
            continue;
        }
        let bag = &td.bags[t];
        let label = nice.labels[t];
        let ok = match (label, kids.as_slice()) {
            (NiceLabel::Leaf, []) => {
                if !bag.is_empty() {
                    v.push(TdViolation::LeafNotEmpty(t));
                }
                true
            }
            (NiceLabel::Introduce(x), [c]) => {
                let cb = &td.bags[*c];
                cb.binary_search(&x).is_err() && with(cb, x) == *bag
            }
            (NiceLabel::Forget(x), [c]) => {
                let cb = &td.bags[*c];
                if x < forgets.len() {
                    forgets[x] += 1;
                }
                bag.binary_search(&x).is_err() && with(bag, x) == *cb
            }
            (NiceLabel::Join, [a, b]) => td.bags[*a] == *bag && td.bags[*b] == *bag,
            _ => false,
        };
        if !ok {
            v.push(TdViolation::BadLabel { node: t, label });
        }
    }
    for (x, &c) in forgets.iter().enumerate() {
        if c != 1 {
            v.push(TdViolation::ForgetCount { vertex: x, count: c });
        }
    }
    report
}

fn with(bag: &[usize], x: usize) -> Vec<usize> {
    let mut b = bag.to_vec();
    let i = b.binary_search(&x).unwrap_or_else(|i| i);
    b.insert(i, x);
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)])
    }

    #[test]
    fn valid_td_empty_report() {
        let td = TreeDecomposition { parent: vec![None, Some(0)], bags: vec![vec![0, 1], vec![1, 2]], root: 0 };
        assert!(validate_td(&td, &path3()).is_valid());
    }

    #[test]
    fn disconnected_named() {
        let td = TreeDecomposition {
            parent: vec![None, Some(0), Some(1)],
            bags: vec![vec![0, 1], vec![1, 2], vec![0]],
            root: 0,
        };
        assert_eq!(validate_td(&td, &path3()).violations, vec![TdViolation::Disconnected(0)]);
    }

    #[test]
    fn missing_edge_named() {
        let td = TreeDecomposition { parent: vec![None, Some(0)], bags: vec![vec![0, 1], vec![2]], root: 0 };
        assert_eq!(validate_td(&td, &path3()).violations, vec![TdViolation::EdgeUncovered(1, 2)]);
    }

    #[test]
    fn cyclic_parents_rejected() {
        let td = TreeDecomposition { parent: vec![None, Some(2), Some(1)], bags: vec![vec![0, 1, 2]; 3], root: 0 };
        assert_eq!(validate_td(&td, &path3()).violations, vec![TdViolation::NotATree]);
    }
}
