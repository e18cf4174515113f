mod decision;
mod derive;
mod validate;

pub use decision::{crossing_classification, decision_points, edge_decision_points, Classification, ClassifyError};
pub use derive::{derive_fcd, DeriveError};
pub use validate::{validate_fcd, FcdReport, FcdViolation};

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::decomposition::{io::write_pace, NiceTreeDecomposition, TreeDecomposition};
use crate::graph_core::{BipartiteWitness, MapGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FcdLabel {
    Leaf,
    Introduce(usize),
    FakeIntroduce(usize),
    Forget(usize),
    /// Nations removed when a special is forgotten, ascending.
    ForgetSet(Vec<usize>),
    Join,
    Redundant,
}

/// Few-cliques decomposition of a map graph, sharing the tree of the nice
/// decomposition of its witness it was derived from.
#[derive(Clone, Debug)]
pub struct FewCliquesDecomposition {
    source: NiceTreeDecomposition,
    map: MapGraph,
    nations: usize,
    original: Vec<Vec<usize>>,
    fake: Vec<Vec<usize>>,
    cliques: Vec<Vec<usize>>,
    labels: Vec<FcdLabel>,
    bags: Vec<Vec<usize>>,
    gamma: Vec<FixedBitSet>,
    depth: Vec<usize>,
    fake_intro: Vec<Option<usize>>,
}

impl FewCliquesDecomposition {
    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn root(&self) -> usize {
        self.source.root()
    }

    pub fn source(&self) -> &NiceTreeDecomposition {
        &self.source
    }

    pub fn map_graph(&self) -> &MapGraph {
        &self.map
    }

    pub fn nation_count(&self) -> usize {
        self.nations
    }

    pub fn children(&self, t: usize) -> &[usize] {
        self.source.children(t)
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.source.parent(t)
    }

    pub fn depth(&self, t: usize) -> usize {
        self.depth[t]
    }

    pub fn original(&self, t: usize) -> &[usize] {
        &self.original[t]
    }

    pub fn fake(&self, t: usize) -> &[usize] {
        &self.fake[t]
    }

    /// Specials `s` whose vertex lies in the source bag of `t`.
    pub fn cliques(&self, t: usize) -> &[usize] {
        &self.cliques[t]
    }

    pub fn label(&self, t: usize) -> &FcdLabel {
        &self.labels[t]
    }

    /// `original(t) ∪ fake(t)`, ascending.
    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    /// Nations in the bags of the subtree rooted at `t`.
    pub fn gamma(&self, t: usize) -> &FixedBitSet {
        &self.gamma[t]
    }

    /// The node labelled `FakeIntroduce(v)`, if there is one.
    pub fn fake_introduce_node(&self, v: usize) -> Option<usize> {
        self.fake_intro[v]
    }

    pub fn width_d(&self) -> usize {
        self.source.width()
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `a` is an ancestor of `d` (or equal to it).
    pub fn is_ancestor(&self, a: usize, mut d: usize) -> bool {
        while self.depth[d] > self.depth[a] {
            d = self.parent(d).unwrap();
        }
        a == d
    }

    /// The decomposition of `G` as a plain tree decomposition.
    pub fn as_td(&self) -> TreeDecomposition {
        TreeDecomposition {
            parent: self.source.td.parent.clone(),
            bags: self.bags.clone(),
            root: self.root(),
        }
    }

    /// PACE-style text with `original`, `fake`, `cliques` and `label` comment lines.
    pub fn to_text(&self) -> String {
        let td = self.as_td();
        write_pace(&td, self.nations, |t, out| {
            let list = |xs: &[usize]| xs.iter().map(|x| format!(" {}", x + 1)).collect::<String>();
            let _ = writeln!(out, "c original {}{}", t + 1, list(&self.original[t]));
            let _ = writeln!(out, "c fake {}{}", t + 1, list(&self.fake[t]));
            let _ = writeln!(out, "c cliques {}{}", t + 1, list(&self.cliques[t]));
            let l = match &self.labels[t] {
                FcdLabel::Leaf => "LEAF".to_string(),
                FcdLabel::Introduce(v) => format!("INTRODUCE {}", v + 1),
                FcdLabel::FakeIntroduce(v) => format!("FAKE_INTRODUCE {}", v + 1),
                FcdLabel::Forget(v) => format!("FORGET {}", v + 1),
                FcdLabel::ForgetSet(s) => format!("FORGET_SET{}", list(s)),
                FcdLabel::Join => "JOIN".to_string(),
                FcdLabel::Redundant => "REDUNDANT".to_string(),
            };
            let _ = writeln!(out, "c label {} {}", t + 1, l);
        })
    }
}

pub(crate) fn witness_of(map: &MapGraph) -> BipartiteWitness {
    let inc = map
        .special_cliques()
        .iter()
        .enumerate()
        .flat_map(|(s, k)| k.iter().map(move |&v| (v, s)));
    BipartiteWitness::new(map.n(), map.special_cliques().len(), inc).expect("cliques are a valid incidence list")
}
