use fixedbitset::FixedBitSet;

use crate::few_cliques::{decision_points, FewCliquesDecomposition};

pub(crate) enum Kind {
    Leaf,
    Step { child: usize, forget: Vec<usize>, intro: Vec<usize> },
    Join(usize, usize),
}

pub(crate) struct PlanNode {
    pub bag: Vec<usize>,
    pub original: Vec<usize>,
    /// `K_s ∩ bag` for every active special.
    pub clique_parts: Vec<Vec<usize>>,
    pub kind: Kind,
    /// Edges decided at this node.
    pub edges: Vec<(usize, usize)>,
    /// Per bag vertex: neighbours that no bag of the subtree has seen yet.
    pub outside: Vec<Vec<usize>>,
    /// Per bag vertex: bag indices of its original neighbours.
    pub original_adj: Vec<Vec<usize>>,
    /// Vertices of the graph that no bag of the subtree contains.
    pub unseen: usize,
    /// Per bag vertex: whether it is original.
    pub is_original: Vec<bool>,
    /// `touched[i]`: bag vertices incident to `edges[i..]`.
    pub touched: Vec<FixedBitSet>,
}

impl PlanNode {
    /// Whether the bag vertex at index `i` has an edge among `pending`, which
    /// must be a suffix of `edges`.
    pub fn has_pending(&self, i: usize, pending: &[(usize, usize)]) -> bool {
        self.touched[self.edges.len() - pending.len()].contains(i)
    }
}

pub(crate) struct Plan {
    pub nodes: Vec<PlanNode>,
    pub root: usize,
}

fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

/// Reorders edges so that vertices run out of pending edges as early as
/// possible: repeatedly take all remaining edges of a vertex of least
/// remaining degree.
fn finishing_order(es: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut left: Vec<(usize, usize)> = es.to_vec();
    let mut out = Vec::with_capacity(es.len());
    while !left.is_empty() {
        let mut deg: std::collections::BTreeMap<usize, usize> = Default::default();
        for &(a, b) in &left {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        let (&v, _) = deg.iter().min_by_key(|&(&v, &d)| (d, v)).unwrap();
        let (mine, rest): (Vec<_>, Vec<_>) = left.into_iter().partition(|&(a, b)| a == v || b == v);
        out.extend(mine);
        left = rest;
    }
    out
}

/// Node-by-node transitions of `f`.
pub(crate) fn build(f: &FewCliquesDecomposition) -> Plan {
    let count = f.node_count();
    let bags: Vec<Vec<usize>> = (0..count).map(|t| f.bag(t).to_vec()).collect();
    let depth: Vec<usize> = (0..count).map(|t| f.depth(t)).collect();
    let mut points = decision_points(&bags, |t| f.children(t).to_vec(), &depth, f.map_graph().graph())
        .expect("few-cliques decomposition covers every edge");
    let mut edges = vec![Vec::new(); count];
    for ((a, b), t) in std::mem::take(&mut points) {
        edges[t].push((a, b));
    }
    for es in &mut edges {
        *es = finishing_order(es);
    }
    let nodes = (0..count)
        .map(|t| {
            let bag = bags[t].clone();
            let kind = match f.children(t) {
                [] => Kind::Leaf,
                [c] => Kind::Step { child: *c, forget: minus(&bags[*c], &bag), intro: minus(&bag, &bags[*c]) },
                [a, b] => Kind::Join(*a, *b),
                _ => unreachable!("binary tree"),
            };
            let clique_parts = f
                .cliques(t)
                .iter()
                .map(|&s| f.map_graph().clique(s).iter().copied().filter(|v| bag.binary_search(v).is_ok()).collect())
                .collect();
            let g = f.map_graph().graph();
            let original = f.original(t).to_vec();
            let outside = bag
                .iter()
                .map(|&v| g.neighbors(v).iter().copied().filter(|&w| !f.gamma(t).contains(w)).collect())
                .collect();
            let original_adj = bag
                .iter()
                .map(|&v| {
                    (0..bag.len()).filter(|&j| original.binary_search(&bag[j]).is_ok() && g.has_edge(v, bag[j])).collect()
                })
                .collect();
            let unseen = g.n() - f.gamma(t).count_ones(..);
            let is_original = bag.iter().map(|v| original.binary_search(v).is_ok()).collect();
            let edges = std::mem::take(&mut edges[t]);
            let mut touched = vec![FixedBitSet::with_capacity(bag.len()); edges.len() + 1];
            for i in (0..edges.len()).rev() {
                let (a, b) = edges[i];
                let mut set = touched[i + 1].clone();
                set.insert(bag.binary_search(&a).expect("edge inside bag"));
                set.insert(bag.binary_search(&b).expect("edge inside bag"));
                touched[i] = set;
            }
            PlanNode { original, bag, clique_parts, kind, edges, outside, original_adj, unseen, is_original, touched }
        })
        .collect();
    Plan { nodes, root: f.root() }
}
