use std::collections::HashSet;

use thiserror::Error;

use super::{td_from_order, TreeDecomposition};
use crate::graph_core::Graph;

pub const EXACT_MAX_VERTICES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {0} vertices; exact search is limited to {EXACT_MAX_VERTICES}")]
    TooLarge(usize),
    #[error("treewidth exceeds budget {0}")]
    ExceedsBudget(usize),
}

/// Minimum-width decomposition by elimination-order search, memoizing
/// eliminated sets that are known to fail.
pub fn exact_decompose_small(g: &Graph, width_budget: usize) -> Result<TreeDecomposition, ExactError> {
    let n = g.n();
    if n > EXACT_MAX_VERTICES {
        return Err(ExactError::TooLarge(n));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    for w in 0..=width_budget {
        let mut s = Search { n, adj: &adj, width: w, failed: HashSet::new(), order: Vec::new() };
        if s.run(0) {
            let mut order = s.order;
            let rest = (0..n).filter(|v| !order.contains(v)).collect::<Vec<_>>();
            order.extend(rest);
            return Ok(td_from_order(g, &order));
        }
        if w + 1 >= n {
            break;
        }
    }
    Err(ExactError::ExceedsBudget(width_budget))
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    width: usize,
    failed: HashSet<u32>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// Vertices outside `elim` reachable from `v` through `elim`.
    fn reach(&self, elim: u32, v: usize) -> u32 {
        let mut out = 0u32;
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let mut nb = self.adj[x] & !seen;
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << y;
                if elim >> y & 1 == 1 {
                    stack.push(y);
                } else {
                    out |= 1 << y;
                }
            }
        }
        out
    }

    fn run(&mut self, elim: u32) -> bool {
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let rest = all & !elim;
        if (rest.count_ones() as usize) <= self.width + 1 {
            return true;
        }
        if self.failed.contains(&elim) {
            return false;
        }
        let mut cands = Vec::new();
        let mut r = rest;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let q = self.reach(elim, v);
            if q.count_ones() as usize <= self.width {
                if self.is_clique(elim, q) {
                    cands = vec![v];
                    break;
                }
                cands.push(v);
            }
        }
        for v in cands {
            self.order.push(v);
            if self.run(elim | 1 << v) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(elim);
        false
    }

    fn is_clique(&self, elim: u32, q: u32) -> bool {
        let mut r = q;
        while r != 0 {
            let a = r.trailing_zeros() as usize;
            r &= r - 1;
            let others = q & !(1 << a);
            if self.reach(elim, a) & others != others {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{heuristic_decompose, validate_td};

    fn grid(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a * b);
        for i in 0..a {
            for j in 0..b {
                if i + 1 < a {
                    g.add_edge(i * b + j, (i + 1) * b + j);
                }
                if j + 1 < b {
                    g.add_edge(i * b + j, i * b + j + 1);
                }
            }
        }
        g
    }

    #[test]
    fn cycle_width_two() {
        let g = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        let td = exact_decompose_small(&g, 4).unwrap();
        assert!(validate_td(&td, &g).is_valid());
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn grid3_width_three() {
        let g = grid(3, 3);
        let td = exact_decompose_small(&g, 3).unwrap();
        assert!(validate_td(&td, &g).is_valid());
        assert_eq!(td.width(), 3);
        assert_eq!(heuristic_decompose(&g, 3).width(), 3);
        assert_eq!(exact_decompose_small(&g, 2), Err(ExactError::ExceedsBudget(2)));
    }

    #[test]
    fn k4_exceeds_two() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exact_decompose_small(&g, 2), Err(ExactError::ExceedsBudget(2)));
        assert_eq!(exact_decompose_small(&g, 3).unwrap().width(), 3);
    }

    #[test]
    fn size_guard() {
        assert_eq!(exact_decompose_small(&Graph::new(26), 3), Err(ExactError::TooLarge(26)));
    }

    #[test]
    fn grid4_width_four() {
        let g = grid(4, 4);
        assert_eq!(exact_decompose_small(&g, 6).unwrap().width(), 4);
    }
}
