use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::TreeDecomposition;
use crate::graph_core::Graph;

/// Greedy min-degree elimination with min-fill tie-break; remaining ties are
/// broken by a seeded shuffle, then vertex id.
pub fn elimination_order(g: &Graph, seed: u64) -> Vec<usize> {
    let n = g.n();
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let deg = adj[v].len();
            if let Some((bd, _, _, _)) = best {
                if deg > bd {
                    continue;
                }
            }
            let fill = fill_in(&adj, v);
            let key = (deg, fill, rank[v], v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.unwrap().3;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    order
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    let mut fill = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[a].contains(&b) {
                fill += 1;
            }
        }
    }
    fill
}

/// Tree decomposition induced by an elimination order. Node 0 is the root.
pub fn td_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n, "order must list every vertex once");
    if n == 0 {
        return TreeDecomposition { parent: vec![None], bags: vec![Vec::new()], root: 0 };
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    // node i of the elimination = bag of order[i]; renumbered to n-1-i at the end
    let mut bags = Vec::with_capacity(n);
    let mut parent_elim: Vec<Option<usize>> = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for (j, &a) in later.iter().enumerate() {
            for &b in &later[j + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent_elim[i] = later.iter().map(|&w| pos[w]).min();
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // chain component roots onto the last eliminated vertex
    for i in 0..n - 1 {
        if parent_elim[i].is_none() {
            parent_elim[i] = Some(n - 1);
        }
    }
    let id = |i: usize| n - 1 - i;
    let mut parent = vec![None; n];
    let mut out_bags = vec![Vec::new(); n];
    for i in 0..n {
        parent[id(i)] = parent_elim[i].map(id);
        out_bags[id(i)] = std::mem::take(&mut bags[i]);
    }
    TreeDecomposition { parent, bags: out_bags, root: 0 }
}

pub fn heuristic_decompose(g: &Graph, seed: u64) -> TreeDecomposition {
    td_from_order(g, &elimination_order(g, seed))
}
