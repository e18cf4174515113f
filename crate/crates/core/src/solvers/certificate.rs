use super::Problem;
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Certificate {
    #[default]
    None,
    /// A vertex cover or feedback vertex set.
    Vertices(Vec<usize>),
    /// A clique too large for any solution within the budget.
    Clique(Vec<usize>),
    Cycle(Vec<usize>),
    Path(Vec<usize>),
    Cycles(Vec<Vec<usize>>),
}

impl Certificate {
    pub fn lines(&self) -> Vec<Vec<usize>> {
        match self {
            Certificate::None => Vec::new(),
            Certificate::Vertices(v) | Certificate::Clique(v) | Certificate::Cycle(v) | Certificate::Path(v) => {
                vec![v.clone()]
            }
            Certificate::Cycles(cs) => cs.clone(),
        }
    }
}

fn is_simple_cycle(g: &Graph, c: &[usize]) -> bool {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    c.len() >= 3
        && s.len() == c.len()
        && s.last().is_some_and(|&x| x < g.n())
        && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn is_forest_without(g: &Graph, removed: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in g.edges() {
        if removed.contains(&a) || removed.contains(&b) {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Checks a certificate against `g` directly, without reference to the DP.
pub fn verify_certificate(g: &Graph, problem: Problem, value: Option<usize>, cert: &Certificate) -> Result<(), String> {
    let distinct = |v: &[usize]| {
        let mut s = v.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == v.len() && v.iter().all(|&x| x < g.n())
    };
    match (problem, cert) {
        (_, Certificate::None) => {
            if value.is_some_and(|v| v > 0 && !problem.is_minimization()) {
                return Err("positive value without certificate".into());
            }
            if problem.is_minimization() && value.is_some() {
                return Err("deletion set missing".into());
            }
            Ok(())
        }
        (Problem::VertexCover | Problem::Fvs, Certificate::Clique(k)) => {
            if !distinct(k) {
                return Err("clique has repeated or unknown vertices".into());
            }
            for (i, &a) in k.iter().enumerate() {
                for &b in &k[i + 1..] {
                    if !g.has_edge(a, b) {
                        return Err(format!("clique misses edge {a}-{b}"));
                    }
                }
            }
            Ok(())
        }
        (Problem::VertexCover, Certificate::Vertices(s)) => {
            if !distinct(s) || Some(s.len()) != value {
                return Err("cover size mismatch".into());
            }
            match g.edges().find(|(a, b)| !s.contains(a) && !s.contains(b)) {
                Some((a, b)) => Err(format!("edge {a}-{b} uncovered")),
                None => Ok(()),
            }
        }
        (Problem::Fvs, Certificate::Vertices(s)) => {
            if !distinct(s) || Some(s.len()) != value {
                return Err("deletion set size mismatch".into());
            }
            if is_forest_without(g, s) {
                Ok(())
            } else {
                Err("graph minus the set still has a cycle".into())
            }
        }
        (Problem::LongestCycle, Certificate::Cycle(c)) => {
            if !is_simple_cycle(g, c) || Some(c.len()) != value {
                return Err("not a simple cycle of the claimed length".into());
            }
            Ok(())
        }
        (Problem::LongestPath, Certificate::Path(p)) => {
            if p.is_empty() || !distinct(p) || Some(p.len()) != value {
                return Err("not a simple path of the claimed length".into());
            }
            match p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                Some(w) => Err(format!("path uses non-edge {}-{}", w[0], w[1])),
                None => Ok(()),
            }
        }
        (Problem::CyclePacking, Certificate::Cycles(cs)) => {
            if Some(cs.len()) != value {
                return Err("cycle count mismatch".into());
            }
            let all: Vec<usize> = cs.iter().flatten().copied().collect();
            if !distinct(&all) {
                return Err("cycles are not vertex-disjoint".into());
            }
            match cs.iter().find(|c| !is_simple_cycle(g, c)) {
                Some(c) => Err(format!("{c:?} is not a cycle")),
                None => Ok(()),
            }
        }
        (p, c) => Err(format!("certificate {c:?} does not fit problem {p}")),
    }
}
