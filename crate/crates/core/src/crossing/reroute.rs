use super::{complete_paths_to_cycle, CrossingError, PathSystem};
use crate::few_cliques::FewCliquesDecomposition;
use crate::graph_core::Graph;

/// Members of `K_s` that are fake-introduced somewhere, in postorder of those
/// nodes, followed by the remaining members in ascending order.
pub fn clique_fake_order(f: &FewCliquesDecomposition, s: usize) -> Vec<usize> {
    let k = f.map_graph().clique(s);
    let mut first: Vec<(usize, usize)> = k
        .iter()
        .filter_map(|&v| f.fake_introduce_node(v).map(|t| (t, v)))
        .collect();
    first.sort_unstable();
    let mut out: Vec<usize> = first.iter().map(|&(_, v)| v).collect();
    out.extend(k.iter().copied().filter(|&v| f.fake_introduce_node(v).is_none()));
    out
}

/// Edges of the cycle given as a vertex sequence, normalized `(min, max)`.
pub fn cycle_edges(c: &[usize]) -> Vec<(usize, usize)> {
    (0..c.len())
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

fn check_cycle(g: &Graph, c: &[usize]) -> Result<(), CrossingError> {
    let mut seen = c.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if c.len() < 3 || seen.len() != c.len() || cycle_edges(c).iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return Err(CrossingError::NotACycle);
    }
    Ok(())
}

/// Walks a 2-regular connected edge set into a vertex sequence starting at its
/// smallest vertex.
fn walk(edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = *adj.keys().next().unwrap();
    let mut out = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().unwrap();
    while cur != start {
        out.push(cur);
        let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap();
        prev = cur;
        cur = next;
    }
    out
}

/// Rebuilds the part of `c` inside `K_s` along the clique's fake order.
pub fn reroute_cycle_in_clique(c: &[usize], s: usize, f: &FewCliquesDecomposition) -> Result<Vec<usize>, CrossingError> {
    let m = f.map_graph();
    check_cycle(m.graph(), c)?;
    if s >= m.special_cliques().len() {
        return Err(CrossingError::NoSuchSpecial(s));
    }
    let k = m.clique(s);
    let in_k = |v: &usize| k.binary_search(v).is_ok();
    let (inside, kept): (Vec<_>, Vec<_>) = cycle_edges(c).into_iter().partition(|(a, b)| in_k(a) && in_k(b));
    if inside.is_empty() {
        return Ok(c.to_vec());
    }
    let q = PathSystem::new(c.iter().copied(), kept.iter().copied())?;
    let z = q.endpoints();
    if z.len() < 3 {
        return Ok(c.to_vec());
    }
    let order: Vec<usize> = clique_fake_order(f, s).into_iter().filter(|v| z.binary_search(v).is_ok()).collect();
    let added = complete_paths_to_cycle(&order, &q)?;
    let mut all = kept;
    all.extend(added);
    let out = walk(&all);
    debug_assert_eq!(out.len(), c.len());
    Ok(out)
}

/// Applies the per-clique reroute for every special in ascending order.
pub fn normalize_cycle(c: &[usize], f: &FewCliquesDecomposition) -> Result<Vec<usize>, CrossingError> {
    check_cycle(f.map_graph().graph(), c)?;
    let mut cur = c.to_vec();
    for s in 0..f.map_graph().special_cliques().len() {
        cur = reroute_cycle_in_clique(&cur, s, f)?;
    }
    Ok(cur)
}
