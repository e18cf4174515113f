use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathSystemError {
    #[error("edge {0}-{1} has an endpoint outside the vertex set")]
    Foreign(usize, usize),
    #[error("edge {0}-{1} is a loop or repeated")]
    BadEdge(usize, usize),
    #[error("vertex {0} has degree above 2")]
    Degree(usize),
    #[error("edges contain a cycle")]
    Cycle,
}

/// Vertex-disjoint paths (length 0 allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    adj: BTreeMap<usize, Vec<usize>>,
}

impl PathSystem {
    pub fn new(
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PathSystemError> {
        let mut adj: BTreeMap<usize, Vec<usize>> = vertices.into_iter().map(|v| (v, Vec::new())).collect();
        for (a, b) in edges {
            if !adj.contains_key(&a) || !adj.contains_key(&b) {
                return Err(PathSystemError::Foreign(a, b));
            }
            if a == b || adj[&a].contains(&b) {
                return Err(PathSystemError::BadEdge(a, b));
            }
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        if let Some((&v, _)) = adj.iter().find(|(_, nb)| nb.len() > 2) {
            return Err(PathSystemError::Degree(v));
        }
        let ps = PathSystem { adj };
        let covered: usize = ps.paths().iter().map(Vec::len).sum();
        if covered != ps.adj.len() {
            return Err(PathSystemError::Cycle);
        }
        Ok(ps)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.get(&v).map_or(0, Vec::len)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .flat_map(|(&a, nb)| nb.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    /// Vertices of degree at most one.
    pub fn endpoints(&self) -> Vec<usize> {
        self.adj.iter().filter(|(_, nb)| nb.len() <= 1).map(|(&v, _)| v).collect()
    }

    /// Paths as vertex sequences starting from their smaller endpoint. Cycles
    /// (which a valid system never has) are not reported.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for v in self.endpoints() {
            if seen.contains(&v) {
                continue;
            }
            let mut path = vec![v];
            seen.insert(v);
            let mut prev = usize::MAX;
            let mut cur = v;
            while let Some(&next) = self.neighbors(cur).iter().find(|&&x| x != prev) {
                path.push(next);
                seen.insert(next);
                prev = cur;
                cur = next;
            }
            out.push(path);
        }
        out
    }

    /// The other end of the path containing endpoint `v` (`v` itself if isolated).
    pub fn partner(&self, v: usize) -> usize {
        let mut prev = usize::MAX;
        let mut cur = v;
        while let Some(&next) = self.neighbors(cur).iter().find(|&&x| x != prev) {
            prev = cur;
            cur = next;
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycle_and_degree() {
        assert_eq!(PathSystem::new(0..3, [(0, 1), (1, 2), (2, 0)]), Err(PathSystemError::Cycle));
        assert_eq!(PathSystem::new(0..4, [(0, 1), (0, 2), (0, 3)]), Err(PathSystemError::Degree(0)));
    }

    #[test]
    fn endpoints_and_partner() {
        let p = PathSystem::new(0..5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(p.endpoints(), vec![0, 2, 3, 4]);
        assert_eq!(p.partner(0), 2);
        assert_eq!(p.partner(4), 3);
        assert_eq!(p.paths(), vec![vec![0, 1, 2], vec![3, 4]]);
    }
}
