use crate::few_cliques::FewCliquesDecomposition;

/// Per-node count of edges with one endpoint in the bag and the other outside
/// the subtree's vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingProfile {
    pub counts: Vec<usize>,
}

impl CrossingProfile {
    pub fn max(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// `node,crossing` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("node,crossing\n");
        for (t, c) in self.counts.iter().enumerate() {
            s.push_str(&format!("{},{}\n", t + 1, c));
        }
        s
    }
}

fn crosses(f: &FewCliquesDecomposition, t: usize, a: usize, b: usize) -> bool {
    let inside = |x: usize| f.bag(t).binary_search(&x).is_ok();
    let g = f.gamma(t);
    (inside(a) && !g.contains(b)) || (inside(b) && !g.contains(a))
}

pub fn crossing_profile(edges: &[(usize, usize)], f: &FewCliquesDecomposition) -> CrossingProfile {
    let counts = (0..f.node_count())
        .map(|t| edges.iter().filter(|&&(a, b)| crosses(f, t, a, b)).count())
        .collect();
    CrossingProfile { counts }
}

/// Per node, edges of `K_s` among `edges` with one endpoint in `Fake(t) ∩ K_s`
/// and the other outside the subtree.
pub fn clique_fake_crossing(edges: &[(usize, usize)], s: usize, f: &FewCliquesDecomposition) -> Vec<usize> {
    let k = f.map_graph().clique(s);
    let in_k = |x: usize| k.binary_search(&x).is_ok();
    let mine: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| in_k(a) && in_k(b)).collect();
    (0..f.node_count())
        .map(|t| {
            let fake = |x: usize| f.fake(t).binary_search(&x).is_ok();
            let g = f.gamma(t);
            mine.iter()
                .filter(|&&(a, b)| (fake(a) && !g.contains(b)) || (fake(b) && !g.contains(a)))
                .count()
        })
        .collect()
}
