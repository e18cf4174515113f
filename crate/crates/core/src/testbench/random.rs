use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::crossing::Triangle;
use crate::graph_core::{Graph, MapGraph};

/// A cycle found by a non-backtracking random walk, or `None` after repeated
/// dead ends (e.g. when `g` is a forest).
pub fn random_cycle<R: Rng>(g: &Graph, rng: &mut R) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return None;
    }
    for _ in 0..64 {
        let mut walk = vec![rng.random_range(0..g.n())];
        let mut pos = vec![usize::MAX; g.n()];
        pos[walk[0]] = 0;
        loop {
            let cur = *walk.last().unwrap();
            let prev = if walk.len() >= 2 { Some(walk[walk.len() - 2]) } else { None };
            let options: Vec<usize> = g.neighbors(cur).iter().copied().filter(|&w| Some(w) != prev).collect();
            let Some(&next) = options.choose(rng) else { break };
            if pos[next] != usize::MAX {
                return Some(walk[pos[next]..].to_vec());
            }
            pos[next] = walk.len();
            walk.push(next);
        }
    }
    None
}

/// Disjoint triangles, each inside a special clique, chosen at random.
pub fn random_triangle_packing<R: Rng>(m: &MapGraph, rng: &mut R) -> Vec<Triangle> {
    let mut used = vec![false; m.n()];
    let mut specials: Vec<usize> = (0..m.special_cliques().len()).collect();
    specials.shuffle(rng);
    let mut out = Vec::new();
    for s in specials {
        let mut free: Vec<usize> = m.clique(s).iter().copied().filter(|&v| !used[v]).collect();
        free.shuffle(rng);
        let take = rng.random_range(0..=free.len() / 3);
        for c in free.chunks_exact(3).take(take) {
            for &v in c {
                used[v] = true;
            }
            out.push(Triangle { vertices: [c[0], c[1], c[2]], host: s });
        }
    }
    out
}
