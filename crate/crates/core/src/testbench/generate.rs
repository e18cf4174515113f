use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph_core::BipartiteWitness;

#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    /// One special adjacent to `leaves` nations: the map graph is a clique.
    Star { leaves: usize },
    /// One degree-2 special per grid edge: the map graph is the grid.
    Grid { rows: usize, cols: usize },
    /// Nations are the vertices of a random stacked triangulation; each edge
    /// and each face becomes a special with probability `p`.
    RandomIncidence { n: usize, p: f64, seed: u64 },
    /// Random stacked triangulation with each vertex made special with
    /// probability `special_ratio`; same-side edges are dropped.
    RandomPlanarBipartite { n: usize, special_ratio: f64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Params(String),
}

pub fn generate(spec: &GenSpec) -> Result<BipartiteWitness, GenError> {
    let bad = |m: &str| Err(GenError::Params(m.to_string()));
    match *spec {
        GenSpec::Star { leaves } => {
            if leaves == 0 {
                return bad("star needs at least one leaf");
            }
            Ok(BipartiteWitness::new(leaves, 1, (0..leaves).map(|v| (v, 0))).unwrap())
        }
        GenSpec::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return bad("grid dimensions must be positive");
            }
            let mut edges = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    let v = i * cols + j;
                    if j + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            edges.sort_unstable();
            let inc = edges.iter().enumerate().flat_map(|(s, &(a, b))| [(a, s), (b, s)]);
            Ok(BipartiteWitness::new(rows * cols, edges.len(), inc).unwrap())
        }
        GenSpec::RandomIncidence { n, p, seed } => {
            if n == 0 || !(0.0..=1.0).contains(&p) {
                return bad("random incidence needs n >= 1 and 0 <= p <= 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (edges, faces) = stacked_triangulation(n, &mut rng);
            let mut specials: Vec<Vec<usize>> = Vec::new();
            for (a, b) in edges {
                if rng.random_bool(p) {
                    specials.push(vec![a, b]);
                }
            }
            for f in faces {
                if rng.random_bool(p) {
                    specials.push(f.to_vec());
                }
            }
            let inc: Vec<(usize, usize)> =
                specials.iter().enumerate().flat_map(|(s, k)| k.iter().map(move |&v| (v, s))).collect();
            Ok(BipartiteWitness::new(n, specials.len(), inc).unwrap())
        }
        GenSpec::RandomPlanarBipartite { n, special_ratio, seed } => {
            if n == 0 || !(0.0..1.0).contains(&special_ratio) {
                return bad("random planar bipartite needs n >= 1 and 0 <= ratio < 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (edges, _) = stacked_triangulation(n, &mut rng);
            let mut special: Vec<bool> = (0..n).map(|_| rng.random_bool(special_ratio)).collect();
            if special.iter().all(|&s| s) {
                special[0] = false;
            }
            let mut id = vec![0; n];
            let (mut w, mut u) = (0, 0);
            for v in 0..n {
                if special[v] {
                    id[v] = u;
                    u += 1;
                } else {
                    id[v] = w;
                    w += 1;
                }
            }
            let inc: Vec<(usize, usize)> = edges
                .into_iter()
                .filter(|&(a, b)| special[a] != special[b])
                .map(|(a, b)| if special[a] { (id[b], id[a]) } else { (id[a], id[b]) })
                .collect();
            Ok(BipartiteWitness::new(w, u, inc).unwrap())
        }
    }
}

/// Planar graph built by repeatedly inserting a vertex into a random face of
/// a triangle. Returns sorted edges and the bounded faces.
fn stacked_triangulation(n: usize, rng: &mut ChaCha8Rng) -> (Vec<(usize, usize)>, Vec<[usize; 3]>) {
    let mut edges = BTreeSet::new();
    if n < 3 {
        if n == 2 {
            edges.insert((0, 1));
        }
        return (edges.into_iter().collect(), Vec::new());
    }
    edges.extend([(0, 1), (0, 2), (1, 2)]);
    let mut faces = vec![[0, 1, 2]];
    for v in 3..n {
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces[i];
        edges.extend([(a, v), (b, v), (c, v)]);
        faces[i] = [a, b, v];
        faces.push([a, c, v]);
        faces.push([b, c, v]);
    }
    (edges.into_iter().collect(), faces)
}
