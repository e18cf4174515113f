use std::collections::BTreeMap;

use thiserror::Error;

use super::FewCliquesDecomposition;
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge {inside}-{outside} leaves the subtree but is neither incident to an original vertex nor inside an active clique")]
pub struct ClassifyError {
    pub inside: usize,
    pub outside: usize,
}

/// Boundary edges at a node, as `(inside, outside)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Classification {
    /// Incident to `original(t)`.
    pub original: Vec<(usize, usize)>,
    /// Inside `K_s` for some `s ∈ cliques(t)`; the third entry is that `s`.
    pub clique: Vec<(usize, usize, usize)>,
}

impl Classification {
    pub fn len(&self) -> usize {
        self.original.len() + self.clique.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Splits the edges leaving `γ′(t)` into the two kinds.
pub fn crossing_classification(f: &FewCliquesDecomposition, t: usize) -> Result<Classification, ClassifyError> {
    let g = f.map_graph().graph();
    let gamma = f.gamma(t);
    let mut out = Classification::default();
    for x in gamma.ones() {
        for &y in g.neighbors(x) {
            if gamma.contains(y) {
                continue;
            }
            if f.original(t).binary_search(&x).is_ok() {
                out.original.push((x, y));
                continue;
            }
            let host = f.cliques(t).iter().copied().find(|&s| {
                let k = f.map_graph().clique(s);
                k.binary_search(&x).is_ok() && k.binary_search(&y).is_ok()
            });
            match host {
                Some(s) => out.clique.push((x, y, s)),
                None => return Err(ClassifyError { inside: x, outside: y }),
            }
        }
    }
    Ok(out)
}

/// For each edge of `g`, the deepest node whose bag holds both endpoints
/// (ties: smallest id). Nodes are assumed numbered in postorder.
pub fn decision_points(
    bags: &[Vec<usize>],
    children: impl Fn(usize) -> Vec<usize>,
    depth: &[usize],
    g: &Graph,
) -> Result<BTreeMap<(usize, usize), usize>, (usize, usize)> {
    let mut best: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (t, bag) in bags.iter().enumerate() {
        let ch = children(t);
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                if !g.has_edge(a, b) {
                    continue;
                }
                let below = ch
                    .iter()
                    .any(|&c| bags[c].binary_search(&a).is_ok() && bags[c].binary_search(&b).is_ok());
                if below {
                    continue;
                }
                best.entry((a, b))
                    .and_modify(|cur| {
                        if depth[t] > depth[*cur] || (depth[t] == depth[*cur] && t < *cur) {
                            *cur = t;
                        }
                    })
                    .or_insert(t);
            }
        }
    }
    if let Some(e) = g.edges().find(|e| !best.contains_key(e)) {
        return Err(e);
    }
    Ok(best)
}

pub fn edge_decision_points(f: &FewCliquesDecomposition) -> Result<BTreeMap<(usize, usize), usize>, (usize, usize)> {
    let bags: Vec<Vec<usize>> = (0..f.node_count()).map(|t| f.bag(t).to_vec()).collect();
    let depth: Vec<usize> = (0..f.node_count()).map(|t| f.depth(t)).collect();
    decision_points(&bags, |t| f.children(t).to_vec(), &depth, f.map_graph().graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::few_cliques::FcdLabel;
    use crate::testbench::fig4_instance;

    #[test]
    fn root_boundary_empty() {
        let f = fig4_instance();
        assert!(crossing_classification(&f, f.root()).unwrap().is_empty());
    }

    #[test]
    fn fake_v1_edges_in_clique() {
        let f = fig4_instance();
        let t = (0..f.node_count()).find(|&t| f.label(t) == &FcdLabel::FakeIntroduce(0)).unwrap();
        let c = crossing_classification(&f, t).unwrap();
        assert!(c.original.is_empty());
        assert_eq!(c.clique, vec![(0, 1, 0), (0, 2, 0), (0, 3, 0)]);
    }

    #[test]
    fn k4_decided_below_forget_set() {
        let f = fig4_instance();
        let dp = edge_decision_points(&f).unwrap();
        assert_eq!(dp.len(), 6);
        let top = (0..f.node_count()).find(|&t| matches!(f.label(t), FcdLabel::ForgetSet(_))).unwrap();
        for (&(a, b), &t) in &dp {
            assert!(f.is_ancestor(top, t) && t != top);
            assert!(f.bag(t).contains(&a) && f.bag(t).contains(&b));
        }
    }
}
