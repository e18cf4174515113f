use super::{DecompError, TreeDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NiceLabel {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// Nice tree decomposition with node ids in postorder (left subtree first);
/// the root is the last node and has an empty bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub td: TreeDecomposition,
    pub children: Vec<Vec<usize>>,
    pub labels: Vec<NiceLabel>,
}

impl NiceTreeDecomposition {
    pub fn node_count(&self) -> usize {
        self.td.node_count()
    }

    pub fn root(&self) -> usize {
        self.td.root
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.td.bags[t]
    }

    pub fn label(&self, t: usize) -> NiceLabel {
        self.labels[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.td.parent[t]
    }

    pub fn width(&self) -> usize {
        self.td.width()
    }

    /// Node with label `Forget(v)`, if any.
    pub fn forget_node(&self, v: usize) -> Option<usize> {
        self.labels.iter().position(|l| *l == NiceLabel::Forget(v))
    }
}

struct Builder {
    bags: Vec<Vec<usize>>,
    labels: Vec<NiceLabel>,
    children: Vec<Vec<usize>>,
}

impl Builder {
    fn push(&mut self, bag: Vec<usize>, label: NiceLabel, children: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.labels.push(label);
        self.children.push(children);
        self.bags.len() - 1
    }

    /// Walks from the bag of `top` to `target`: forgets first, then introduces, ascending.
    fn transition(&mut self, mut top: usize, target: &[usize]) -> usize {
        let cur = self.bags[top].clone();
        let mut bag = cur.clone();
        for &v in cur.iter().filter(|v| target.binary_search(v).is_err()) {
            bag.retain(|&x| x != v);
            top = self.push(bag.clone(), NiceLabel::Forget(v), vec![top]);
        }
        for &v in target.iter().filter(|v| cur.binary_search(v).is_err()) {
            let i = bag.binary_search(&v).unwrap_err();
            bag.insert(i, v);
            top = self.push(bag.clone(), NiceLabel::Introduce(v), vec![top]);
        }
        top
    }
}

/// Converts a decomposition to nice form without changing its width.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition, DecompError> {
    let pre = td.preorder()?;
    check_connected(td, &pre)?;
    let ch = td.children();
    let mut b = Builder { bags: Vec::new(), labels: Vec::new(), children: Vec::new() };
    let mut top = vec![usize::MAX; td.node_count()];
    for &x in pre.iter().rev() {
        let target = &td.bags[x];
        let tops: Vec<usize> = ch[x].iter().map(|&c| b.transition(top[c], target)).collect();
        let mut tops = tops.into_iter();
        let t = match tops.next() {
            None => {
                let leaf = b.push(Vec::new(), NiceLabel::Leaf, Vec::new());
                b.transition(leaf, target)
            }
            Some(first) => {
                let mut acc = first;
                for next in tops {
                    acc = b.push(target.clone(), NiceLabel::Join, vec![acc, next]);
                }
                acc
            }
        };
        top[x] = t;
    }
    let root = b.transition(top[td.root], &[]);
    Ok(renumber_postorder(b, root))
}

fn renumber_postorder(b: Builder, root: usize) -> NiceTreeDecomposition {
    let n = b.bags.len();
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![(root, false)];
    while let Some((t, done)) = stack.pop() {
        if done {
            order.push(t);
        } else {
            stack.push((t, true));
            for &c in b.children[t].iter().rev() {
                stack.push((c, false));
            }
        }
    }
    let mut id = vec![usize::MAX; n];
    for (i, &t) in order.iter().enumerate() {
        id[t] = i;
    }
    let mut parent = vec![None; order.len()];
    let mut bags = Vec::with_capacity(order.len());
    let mut labels = Vec::with_capacity(order.len());
    let mut children = Vec::with_capacity(order.len());
    for &t in &order {
        for &c in &b.children[t] {
            parent[id[c]] = Some(id[t]);
        }
        bags.push(b.bags[t].clone());
        labels.push(b.labels[t]);
        children.push(b.children[t].iter().map(|&c| id[c]).collect());
    }
    NiceTreeDecomposition {
        td: TreeDecomposition { parent, bags, root: id[root] },
        children,
        labels,
    }
}

fn check_connected(td: &TreeDecomposition, pre: &[usize]) -> Result<(), DecompError> {
    let mut tops = std::collections::HashMap::new();
    for &t in pre {
        for &v in &td.bags[t] {
            let p_has = td.parent[t].is_some_and(|p| td.bags[p].binary_search(&v).is_ok());
            if !p_has && tops.insert(v, t).is_some() {
                return Err(DecompError::Disconnected(v));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{heuristic_decompose, validate_nice};
    use crate::graph_core::Graph;
    use NiceLabel::*;

    #[test]
    fn single_bag_chain() {
        let td = TreeDecomposition { parent: vec![None], bags: vec![vec![0, 1]], root: 0 };
        let nice = make_nice(&td).unwrap();
        assert_eq!(nice.labels, vec![Leaf, Introduce(0), Introduce(1), Forget(0), Forget(1)]);
        assert_eq!(nice.root(), 4);
        assert!(nice.bag(4).is_empty());
        assert!(validate_nice(&nice, &Graph::from_edges(2, [(0, 1)])).is_valid());
    }

    #[test]
    fn branching_becomes_binary() {
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (2, 5), (1, 6)]);
        let td = heuristic_decompose(&g, 3);
        let nice = make_nice(&td).unwrap();
        assert_eq!(nice.width(), td.width());
        let r = validate_nice(&nice, &g);
        assert!(r.is_valid(), "{r:?}");
        for t in 0..nice.node_count() {
            assert!(nice.children(t).len() <= 2);
            for &c in nice.children(t) {
                assert!(c < t, "postorder ids");
            }
        }
    }

    #[test]
    fn rejects_disconnected() {
        let td = TreeDecomposition {
            parent: vec![None, Some(0), Some(1)],
            bags: vec![vec![0], vec![1], vec![0]],
            root: 0,
        };
        assert_eq!(make_nice(&td), Err(DecompError::Disconnected(0)));
    }
}
