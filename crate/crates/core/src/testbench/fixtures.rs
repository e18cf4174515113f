use crate::decomposition::{NiceLabel, NiceTreeDecomposition, TreeDecomposition};
use crate::few_cliques::{derive_fcd, FewCliquesDecomposition};
use crate::graph_core::{half_square, BipartiteWitness};

/// Nations `0..leaves` all incident to a single special.
pub fn star_witness(leaves: usize) -> BipartiteWitness {
    BipartiteWitness::new(leaves, 1, (0..leaves).map(|v| (v, 0))).expect("star witness")
}

/// Nice decomposition of the four-leaf star where every nation sits in its
/// own branch with the special `r = 4`, and the branches are joined pairwise.
pub fn fig4_nice() -> NiceTreeDecomposition {
    const R: usize = 4;
    let mut b = Nb::default();
    let mut tops = Vec::new();
    for v in 0..4 {
        let leaf = b.push(vec![], NiceLabel::Leaf, vec![]);
        let a = b.push(vec![v], NiceLabel::Introduce(v), vec![leaf]);
        let c = b.push(vec![v, R], NiceLabel::Introduce(R), vec![a]);
        tops.push(b.push(vec![R], NiceLabel::Forget(v), vec![c]));
        if v % 2 == 1 {
            let (y, x) = (tops.pop().unwrap(), tops.pop().unwrap());
            tops.push(b.push(vec![R], NiceLabel::Join, vec![x, y]));
        }
    }
    let j = b.push(vec![R], NiceLabel::Join, tops);
    let root = b.push(vec![], NiceLabel::Forget(R), vec![j]);
    NiceTreeDecomposition { td: TreeDecomposition { parent: b.parent, bags: b.bags, root }, children: b.children, labels: b.labels }
}

#[derive(Default)]
struct Nb {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    labels: Vec<NiceLabel>,
}

impl Nb {
    fn push(&mut self, bag: Vec<usize>, label: NiceLabel, children: Vec<usize>) -> usize {
        let id = self.bags.len();
        for &c in &children {
            self.parent[c] = Some(id);
        }
        self.parent.push(None);
        self.bags.push(bag);
        self.children.push(children);
        self.labels.push(label);
        id
    }
}

/// Few-cliques decomposition derived from [`fig4_nice`].
pub fn fig4_instance() -> FewCliquesDecomposition {
    let m = half_square(&star_witness(4));
    derive_fcd(&fig4_nice(), &m).expect("fixture is a valid nice decomposition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate_nice;
    use crate::few_cliques::FcdLabel;

    #[test]
    fn fixture_is_nice() {
        let d = fig4_nice();
        let r = validate_nice(&d, star_witness(4).graph());
        assert!(r.is_valid(), "{:?}", r.violations);
    }

    #[test]
    fn forget_v1_is_fake_introduce() {
        let f = fig4_instance();
        assert_eq!(f.label(3), &FcdLabel::FakeIntroduce(0));
        assert_eq!(f.original(3), &[] as &[usize]);
        assert_eq!(f.fake(3), &[0]);
        assert_eq!(f.cliques(3), &[0]);
        assert_eq!(f.label(19), &FcdLabel::ForgetSet(vec![0, 1, 2, 3]));
    }
}
