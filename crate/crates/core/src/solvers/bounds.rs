//! Cheap feasible solutions used as lower bounds for pruning.

use crate::graph_core::Graph;

/// Walk from `start`, always stepping to the unvisited neighbour with the fewest
/// unvisited neighbours (smallest id on ties).
fn warnsdorff(g: &Graph, start: usize, seen: &mut [bool]) -> Vec<usize> {
    seen.iter_mut().for_each(|s| *s = false);
    let mut walk = vec![start];
    seen[start] = true;
    let mut cur = start;
    loop {
        let free = |v: usize, seen: &[bool]| g.neighbors(v).iter().filter(|&&w| !seen[w]).count();
        let Some(&next) = g.neighbors(cur).iter().filter(|&&w| !seen[w]).min_by_key(|&&w| (free(w, seen), w)) else {
            break;
        };
        seen[next] = true;
        walk.push(next);
        cur = next;
    }
    walk
}

/// Some path of `g`, as a vertex sequence.
pub(crate) fn greedy_path(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut best = Vec::new();
    for s in 0..g.n() {
        let walk = warnsdorff(g, s, &mut seen);
        if walk.len() > best.len() {
            best = walk;
        }
    }
    best
}

/// Some cycle of `g`, closed by the longest chord of a greedy walk, or an
/// empty vector.
pub(crate) fn greedy_cycle(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut best = Vec::new();
    for s in 0..g.n() {
        let walk = warnsdorff(g, s, &mut seen);
        for (k, &last) in walk.iter().enumerate().skip(2) {
            if let Some(j) = walk[..k - 1].iter().position(|&x| g.has_edge(x, last)) {
                if k - j + 1 > best.len() {
                    best = walk[j..=k].to_vec();
                }
            }
        }
    }
    best
}

/// Greedy packing of disjoint triangles.
pub(crate) fn greedy_triangles(g: &Graph) -> Vec<Vec<usize>> {
    let mut used = vec![false; g.n()];
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if used[u] || used[v] {
            continue;
        }
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| !used[w] && w != v && g.has_edge(v, w)) {
            used[u] = true;
            used[v] = true;
            used[w] = true;
            let mut t = vec![u, v, w];
            t.sort_unstable();
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_on_small_graphs() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(greedy_cycle(&c5).len(), 5);
        assert_eq!(greedy_path(&c5).len(), 5);
        assert!(greedy_triangles(&c5).is_empty());
        let tree = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(greedy_cycle(&tree).is_empty());
        assert_eq!(greedy_path(&tree).len(), 3);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(greedy_triangles(&two), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(greedy_path(&Graph::new(0)).is_empty());
    }
}
