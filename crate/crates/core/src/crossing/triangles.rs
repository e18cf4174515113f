use std::collections::BTreeMap;

use super::{clique_fake_order, CrossingError};
use crate::few_cliques::FewCliquesDecomposition;

/// A triangle together with the special whose clique hosts it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub host: usize,
}

/// Regroups the triangles of each host clique into consecutive triples of the
/// clique's fake order. Output is grouped by host, ascending.
pub fn normalize_triangle_packing(ts: &[Triangle], f: &FewCliquesDecomposition) -> Result<Vec<Triangle>, CrossingError> {
    let m = f.map_graph();
    let mut used = std::collections::BTreeSet::new();
    let mut by_host: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in ts {
        if t.host >= m.special_cliques().len() {
            return Err(CrossingError::NoSuchSpecial(t.host));
        }
        let k = m.clique(t.host);
        let mut vs = t.vertices;
        vs.sort_unstable();
        if vs[0] == vs[1] || vs[1] == vs[2] || vs.iter().any(|v| k.binary_search(v).is_err()) {
            return Err(CrossingError::NotInHost(t.vertices, t.host));
        }
        for v in vs {
            if !used.insert(v) {
                return Err(CrossingError::Overlap(v));
            }
        }
        by_host.entry(t.host).or_default().extend(vs);
    }
    let mut out = Vec::with_capacity(ts.len());
    for (s, vs) in by_host {
        if vs.len() % 3 != 0 {
            return Err(CrossingError::NotDivisible { special: s, count: vs.len() });
        }
        let order: Vec<usize> = clique_fake_order(f, s).into_iter().filter(|v| vs.contains(v)).collect();
        for c in order.chunks(3) {
            out.push(Triangle { vertices: [c[0], c[1], c[2]], host: s });
        }
    }
    Ok(out)
}
