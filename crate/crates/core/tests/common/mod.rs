#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use mapkit::crossing::PathSystem;
use mapkit::pipeline::{Decomposer, Instance};
use mapkit::solvers::{Certificate, Problem};
use mapkit::testbench::{generate, GenSpec};
use mapkit::{BipartiteWitness, FewCliquesDecomposition, Graph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random witness family mix with at most `max_nations` nations.
pub fn small_instance(max_nations: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = match seed % 3 {
        0 => generate(&GenSpec::RandomIncidence {
            n: rng.random_range(max_nations / 2..=max_nations),
            p: rng.random_range(0.2..0.9),
            seed,
        }),
        1 => {
            let ratio = rng.random_range(0.2..0.6);
            let mut n = rng.random_range(max_nations..=2 * max_nations);
            loop {
                let w = generate(&GenSpec::RandomPlanarBipartite { n, special_ratio: ratio, seed }).unwrap();
                if w.nation_count() <= max_nations {
                    break Ok(w);
                }
                n -= 1;
            }
        }
        _ => generate(&GenSpec::RandomIncidence {
            n: rng.random_range(max_nations / 2..=max_nations),
            p: rng.random_range(0.05..0.4),
            seed,
        }),
    }
    .unwrap();
    Instance::build(w, Decomposer::Heuristic { seed }).unwrap()
}

/// A random witness with at most `max_b` vertices in total.
pub fn small_witness(max_b: usize, seed: u64) -> BipartiteWitness {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut n = max_b;
    loop {
        let spec = if seed % 2 == 0 {
            GenSpec::RandomPlanarBipartite { n, special_ratio: rng.random_range(0.2..0.7), seed }
        } else {
            GenSpec::RandomIncidence { n: n / 2 + 1, p: rng.random_range(0.1..0.9), seed }
        };
        let w = generate(&spec).unwrap();
        if w.nation_count() + w.special_count() <= max_b {
            return w;
        }
        n -= 1;
    }
}

/// Nation pairs at distance exactly two in the witness, by BFS.
pub fn distance_two_pairs(w: &BipartiteWitness) -> BTreeSet<(usize, usize)> {
    let b = w.graph();
    let mut out = BTreeSet::new();
    for src in 0..w.nation_count() {
        let mut dist = vec![usize::MAX; b.n()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == 2 {
                continue;
            }
            for &y in b.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for v in src + 1..w.nation_count() {
            if dist[v] == 2 {
                out.insert((src, v));
            }
        }
    }
    out
}

/// Nations in the bags of the subtree rooted at `t`, by walking the tree.
pub fn subtree_nations(f: &FewCliquesDecomposition, t: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut stack = vec![t];
    while let Some(x) = stack.pop() {
        out.extend(f.bag(x).iter().copied());
        stack.extend(f.children(x).iter().copied());
    }
    out
}

/// Per-node count of edges with one end in the bag and the other outside the subtree.
pub fn crossing_recount(edges: &[(usize, usize)], f: &FewCliquesDecomposition) -> Vec<usize> {
    (0..f.node_count())
        .map(|t| {
            let gamma = subtree_nations(f, t);
            let bag: BTreeSet<usize> = f.bag(t).iter().copied().collect();
            edges
                .iter()
                .filter(|(a, b)| (bag.contains(a) && !gamma.contains(b)) || (bag.contains(b) && !gamma.contains(a)))
                .count()
        })
        .collect()
}

fn has_cycle_after_removing(g: &Graph, removed: &BTreeSet<usize>) -> bool {
    let mut seen = vec![false; g.n()];
    for root in 0..g.n() {
        if seen[root] || removed.contains(&root) {
            continue;
        }
        let mut stack = vec![(root, usize::MAX)];
        seen[root] = true;
        while let Some((x, from)) = stack.pop() {
            for &y in g.neighbors(x) {
                if y == from || removed.contains(&y) {
                    continue;
                }
                if seen[y] {
                    return true;
                }
                seen[y] = true;
                stack.push((y, x));
            }
        }
    }
    false
}

fn simple_cycle(g: &Graph, c: &[usize]) -> Result<(), String> {
    let distinct: BTreeSet<usize> = c.iter().copied().collect();
    if c.len() < 3 || distinct.len() != c.len() {
        return Err(format!("{c:?} is not a simple cycle"));
    }
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        if !g.has_edge(a, b) {
            return Err(format!("cycle uses non-edge {a}-{b}"));
        }
    }
    Ok(())
}

/// Checks that `cert` shows `value` for `problem` on `g`.
pub fn check_certificate(g: &Graph, problem: Problem, value: usize, cert: &Certificate) -> Result<(), String> {
    match (problem, cert) {
        (Problem::VertexCover, Certificate::Vertices(s)) => {
            let set: BTreeSet<usize> = s.iter().copied().collect();
            if set.len() != value {
                return Err(format!("cover has {} vertices, value {value}", set.len()));
            }
            match g.edges().find(|(a, b)| !set.contains(a) && !set.contains(b)) {
                Some((a, b)) => Err(format!("edge {a}-{b} uncovered")),
                None => Ok(()),
            }
        }
        (Problem::Fvs, Certificate::Vertices(s)) => {
            let set: BTreeSet<usize> = s.iter().copied().collect();
            if set.len() != value {
                return Err(format!("fvs has {} vertices, value {value}", set.len()));
            }
            if has_cycle_after_removing(g, &set) {
                return Err("cycle survives deletion".into());
            }
            Ok(())
        }
        (Problem::LongestCycle, Certificate::Cycle(c)) if c.len() == value => simple_cycle(g, c),
        (Problem::LongestCycle, Certificate::None) if value == 0 => Ok(()),
        (Problem::LongestPath, Certificate::Path(p)) if p.len() == value => {
            let distinct: BTreeSet<usize> = p.iter().copied().collect();
            if distinct.len() != p.len() || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("{p:?} is not a path"));
            }
            Ok(())
        }
        (Problem::LongestPath, Certificate::None) if value == 0 => Ok(()),
        (Problem::CyclePacking, Certificate::Cycles(cs)) if cs.len() == value => {
            let mut used = BTreeSet::new();
            for c in cs {
                simple_cycle(g, c)?;
                for &v in c {
                    if !used.insert(v) {
                        return Err(format!("cycles share {v}"));
                    }
                }
            }
            Ok(())
        }
        _ => Err(format!("certificate {cert:?} does not show value {value} for {problem}")),
    }
}

/// A path system with exactly `l` endpoints (isolated vertices count once)
/// and no edge joining two endpoints, on shuffled vertex ids.
pub fn random_path_system<R: Rng>(l: usize, rng: &mut R) -> (PathSystem, Vec<usize>) {
    let paths = rng.random_range(0..=l / 2);
    let isolated = l - 2 * paths;
    let mut shapes: Vec<usize> = vec![1; isolated];
    shapes.extend((0..paths).map(|_| rng.random_range(3..=5)));
    let total: usize = shapes.iter().sum();
    let mut ids: Vec<usize> = (0..total * 3).collect();
    ids.shuffle(rng);
    ids.truncate(total);
    let mut edges = Vec::new();
    let mut at = 0;
    for len in shapes {
        for i in 1..len {
            edges.push((ids[at + i - 1], ids[at + i]));
        }
        at += len;
    }
    let q = PathSystem::new(ids.iter().copied(), edges).unwrap();
    let mut order = q.endpoints();
    order.shuffle(rng);
    (q, order)
}

/// Postconditions of completing `q` along `order` with the edges `f`.
pub fn check_completion(order: &[usize], q: &PathSystem, f: &[(usize, usize)]) -> Result<(), String> {
    let listed: BTreeSet<usize> = order.iter().copied().collect();
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = q.vertices().map(|v| (v, Vec::new())).collect();
    let qe: BTreeSet<(usize, usize)> = q.edges().into_iter().collect();
    for &(a, b) in f {
        if !listed.contains(&a) || !listed.contains(&b) || a == b {
            return Err(format!("added edge {a}-{b} leaves the listed vertices"));
        }
        if qe.contains(&(a.min(b), a.max(b))) {
            return Err(format!("added edge {a}-{b} is already in the path system"));
        }
    }
    for (a, b) in qe.iter().copied().chain(f.iter().copied()) {
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    }
    // (a) one cycle through every vertex
    if let Some((v, nb)) = adj.iter().find(|(_, nb)| nb.len() != 2) {
        return Err(format!("vertex {v} has degree {}", nb.len()));
    }
    let start = *adj.keys().next().unwrap();
    let (mut prev, mut cur, mut steps) = (start, adj[&start][0], 1);
    while cur != start {
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
    }
    if steps != adj.len() {
        return Err(format!("cycle through {start} has {steps} of {} vertices", adj.len()));
    }
    // (b) prefix cuts
    for j in 1..order.len() {
        let head: BTreeSet<usize> = order[..j].iter().copied().collect();
        let cut = f.iter().filter(|(a, b)| head.contains(a) != head.contains(b)).count();
        if cut > 2 {
            return Err(format!("{cut} added edges cross prefix {j}"));
        }
    }
    // (c) a degree-one head gets one added edge
    let u1 = order[0];
    if q.degree(u1) == 1 {
        let touching = f.iter().filter(|&&(a, b)| a == u1 || b == u1).count();
        if touching != 1 {
            return Err(format!("head {u1} touches {touching} added edges"));
        }
    }
    Ok(())
}

/// Whether `reps` picks a distinct member of each set.
pub fn check_representatives(sets: &[Vec<usize>], reps: &[usize]) -> Result<(), String> {
    if reps.len() != sets.len() {
        return Err(format!("{} representatives for {} sets", reps.len(), sets.len()));
    }
    let distinct: BTreeSet<usize> = reps.iter().copied().collect();
    if distinct.len() != reps.len() {
        return Err(format!("representatives {reps:?} repeat"));
    }
    for (i, (s, r)) in sets.iter().zip(reps).enumerate() {
        if !s.contains(r) {
            return Err(format!("representative {r} not in set {i} {s:?}"));
        }
    }
    Ok(())
}

/// Calls `visit` on every set system with at most `max_sets` sets over at most
/// `max_elems` elements meeting the representative preconditions, with elements
/// numbered in order of first use. Returns the number visited.
pub fn each_sdr_system(max_sets: usize, max_elems: usize, mut visit: impl FnMut(&[Vec<usize>])) -> usize {
    fn subsets(pool: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in from..pool {
            cur.push(x);
            subsets(pool, size, x + 1, cur, out);
            cur.pop();
        }
    }
    #[allow(clippy::too_many_arguments)]
    fn grow(
        sets: &mut Vec<Vec<usize>>,
        uses: &mut Vec<usize>,
        irregular: bool,
        max_sets: usize,
        max_elems: usize,
        visit: &mut dyn FnMut(&[Vec<usize>]),
        count: &mut usize,
    ) {
        if !sets.is_empty() {
            *count += 1;
            visit(sets);
        }
        if sets.len() == max_sets {
            return;
        }
        let used = uses.len();
        let sizes: Vec<usize> = if irregular {
            vec![2]
        } else {
            (1..=max_elems).collect()
        };
        for size in sizes {
            // reuse existing elements or take the next fresh ones in order
            let pool = (used + size).min(max_elems);
            let mut cands = Vec::new();
            subsets(pool, size, 0, &mut Vec::new(), &mut cands);
            for s in cands {
                let fresh: Vec<usize> = s.iter().copied().filter(|&x| x >= used).collect();
                if fresh.iter().enumerate().any(|(i, &x)| x != used + i) {
                    continue;
                }
                if s.iter().any(|&x| x < used && uses[x] >= 2) {
                    continue;
                }
                for &x in &s {
                    if x < used {
                        uses[x] += 1;
                    } else {
                        uses.push(1);
                    }
                }
                sets.push(s.clone());
                grow(sets, uses, irregular || size != 2, max_sets, max_elems, visit, count);
                sets.pop();
                uses.truncate(used);
                for &x in s.iter().filter(|&&x| x < used) {
                    uses[x] -= 1;
                }
            }
        }
    }
    let mut count = 0;
    grow(&mut Vec::new(), &mut Vec::new(), false, max_sets, max_elems, &mut visit, &mut count);
    count
}

/// A random system meeting the representative preconditions: pairs forming
/// paths and cycles, plus possibly one set of another size.
pub fn random_sdr_system<R: Rng>(sets: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let elems = sets * 2 + 4;
    let mut uses = vec![0usize; elems];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let irregular = rng.random_bool(0.5).then(|| rng.random_range(0..sets));
    for i in 0..sets {
        let size = if Some(i) == irregular { *[1, 3, 4, 5].choose(rng).unwrap() } else { 2 };
        let mut free: Vec<usize> = (0..elems).filter(|&x| uses[x] < 2).collect();
        free.shuffle(rng);
        if free.len() < size {
            break;
        }
        for &x in &free[..size] {
            uses[x] += 1;
        }
        out.push(free[..size].to_vec());
    }
    out
}
