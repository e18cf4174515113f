mod exact;
mod heuristic;
pub mod io;
mod nice;
mod validate;

pub use exact::{exact_decompose_small, ExactError, EXACT_MAX_VERTICES};
pub use heuristic::{elimination_order, heuristic_decompose, td_from_order};
pub use nice::{make_nice, NiceLabel, NiceTreeDecomposition};
pub use validate::{validate_nice, validate_td, TdReport, TdViolation};

use thiserror::Error;

/// Rooted tree decomposition. `parent[root]` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub parent: Vec<Option<usize>>,
    /// Sorted bags.
    pub bags: Vec<Vec<usize>>,
    pub root: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("decomposition has no nodes")]
    Empty,
    #[error("parent pointers do not form a tree rooted at {0}")]
    NotATree(usize),
    #[error("occurrences of vertex {0} are not connected")]
    Disconnected(usize),
}

impl TreeDecomposition {
    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 for decompositions with only empty bags).
    pub fn width(&self) -> usize {
        max_bag(&self.bags).saturating_sub(1)
    }

    pub fn max_bag(&self) -> usize {
        max_bag(&self.bags)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.node_count()];
        for (t, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                ch[p].push(t);
            }
        }
        ch
    }

    /// Checks that parent pointers form a single tree rooted at `root` and
    /// returns a preorder of it.
    pub(crate) fn preorder(&self) -> Result<Vec<usize>, DecompError> {
        let n = self.node_count();
        if n == 0 {
            return Err(DecompError::Empty);
        }
        if self.parent.len() != n || self.root >= n || self.parent[self.root].is_some() {
            return Err(DecompError::NotATree(self.root));
        }
        let ch = self.children();
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![self.root];
        let mut seen = vec![false; n];
        while let Some(t) = stack.pop() {
            if seen[t] {
                return Err(DecompError::NotATree(self.root));
            }
            seen[t] = true;
            order.push(t);
            stack.extend(ch[t].iter().rev());
        }
        if order.len() != n {
            return Err(DecompError::NotATree(self.root));
        }
        Ok(order)
    }
}

pub(crate) fn max_bag(bags: &[Vec<usize>]) -> usize {
    bags.iter().map(Vec::len).max().unwrap_or(0)
}
