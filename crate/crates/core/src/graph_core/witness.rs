use std::fmt::Write as _;

use rustworkx_core::petgraph::graph::UnGraph;
use thiserror::Error;

use super::Graph;

/// Planar bipartite witness `B`: vertices `0..W` are nations, `W..W+U` specials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteWitness {
    graph: Graph,
    nations: usize,
    specials: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("nation {0} out of range")]
    NationOutOfRange(usize),
    #[error("special {0} out of range")]
    SpecialOutOfRange(usize),
    #[error("duplicate edge between nation {0} and special {1}")]
    DuplicateEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl BipartiteWitness {
    /// Builds a witness from `(nation, special)` incidences, both 0-based within their side.
    pub fn new(
        nations: usize,
        specials: usize,
        incidences: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, WitnessError> {
        let mut graph = Graph::new(nations + specials);
        for (a, s) in incidences {
            if a >= nations {
                return Err(WitnessError::NationOutOfRange(a));
            }
            if s >= specials {
                return Err(WitnessError::SpecialOutOfRange(s));
            }
            if !graph.add_edge(a, nations + s) {
                return Err(WitnessError::DuplicateEdge(a, s));
            }
        }
        Ok(BipartiteWitness { graph, nations, specials })
    }

    /// The graph `B` itself.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn nation_count(&self) -> usize {
        self.nations
    }

    pub fn special_count(&self) -> usize {
        self.specials
    }

    /// Vertex of `B` representing special `s`.
    pub fn special_vertex(&self, s: usize) -> usize {
        self.nations + s
    }

    pub fn is_special(&self, v: usize) -> bool {
        v >= self.nations
    }

    /// `N_B(s)` for special index `s`, ascending.
    pub fn special_neighbors(&self, s: usize) -> &[usize] {
        self.graph.neighbors(self.nations + s)
    }

    /// Incidences as `(nation, special)` pairs in canonical order.
    pub fn incidences(&self) -> Vec<(usize, usize)> {
        self.graph.edges().map(|(a, b)| (a, b - self.nations)).collect()
    }

    /// Canonical text form: header plus sorted edge lines, no comments.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p tmap {} {} {}", self.nations, self.specials, self.graph.edge_count());
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "e {} {}", a + 1, b + 1);
        }
        out
    }
}

/// Parses the `p tmap` witness format.
pub fn parse_witness(text: &str) -> Result<BipartiteWitness, ParseError> {
    let err = |line: usize, msg: String| ParseError { line, msg };
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut graph = Graph::new(0);
    let mut seen = 0usize;
    let mut last = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        last = ln;
        let line = raw.trim_end();
        if line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err(ln, "second header".into()));
                }
                if tok.next() != Some("tmap") {
                    return Err(err(ln, "expected `p tmap W U M`".into()));
                }
                let nums: Vec<&str> = tok.collect();
                if nums.len() != 3 {
                    return Err(err(ln, "expected `p tmap W U M`".into()));
                }
                let mut v = [0usize; 3];
                for (slot, s) in v.iter_mut().zip(&nums) {
                    *slot = s.parse().map_err(|_| err(ln, format!("bad number `{s}`")))?;
                }
                graph = Graph::new(v[0] + v[1]);
                header = Some((v[0], v[1], v[2], ln));
            }
            Some("e") => {
                let Some((w, u, _, _)) = header else {
                    return Err(err(ln, "edge before header".into()));
                };
                let nums: Vec<&str> = tok.collect();
                if nums.len() != 2 {
                    return Err(err(ln, "expected `e a b`".into()));
                }
                let mut v = [0usize; 2];
                for (slot, s) in v.iter_mut().zip(&nums) {
                    *slot = s.parse().map_err(|_| err(ln, format!("bad number `{s}`")))?;
                }
                let [a, b] = v;
                if a == 0 || a > w + u || b == 0 || b > w + u {
                    return Err(err(ln, format!("vertex out of range in `{a} {b}`")));
                }
                if a > w && b > w {
                    return Err(err(ln, format!("edge {a} {b} joins two specials")));
                }
                if a <= w && b <= w {
                    return Err(err(ln, format!("edge {a} {b} joins two nations")));
                }
                if a > w {
                    return Err(err(ln, format!("edge {a} {b}: nation must come first")));
                }
                if !graph.add_edge(a - 1, b - 1) {
                    return Err(err(ln, format!("duplicate edge {a} {b}")));
                }
                seen += 1;
            }
            _ => return Err(err(ln, format!("unrecognised line `{line}`"))),
        }
    }
    let Some((w, u, m, hl)) = header else {
        return Err(err(last.max(1), "missing header".into()));
    };
    if seen != m {
        return Err(err(hl, format!("header declares {m} edges, found {seen}")));
    }
    Ok(BipartiteWitness { graph, nations: w, specials: u })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    SameSide(usize, usize),
    EulerBound { edges: usize, bound: usize },
    NonPlanar,
}

impl std::fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessViolation::SameSide(a, b) => write!(f, "edge {}-{} joins two vertices of the same side", a + 1, b + 1),
            WitnessViolation::EulerBound { edges, bound } => {
                write!(f, "{edges} edges exceed the planar bipartite bound {bound}")
            }
            WitnessViolation::NonPlanar => write!(f, "graph is not planar"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub violations: Vec<WitnessViolation>,
}

impl WitnessReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_witness(w: &BipartiteWitness, strict: bool) -> WitnessReport {
    let mut violations = Vec::new();
    for (a, b) in w.graph.edges() {
        if w.is_special(a) == w.is_special(b) {
            violations.push(WitnessViolation::SameSide(a, b));
        }
    }
    let n = w.graph.n();
    let m = w.graph.edge_count();
    if n >= 3 && m > 2 * n - 4 {
        violations.push(WitnessViolation::EulerBound { edges: m, bound: 2 * n - 4 });
    }
    if strict && !is_planar(&w.graph) {
        violations.push(WitnessViolation::NonPlanar);
    }
    WitnessReport { violations }
}

fn is_planar(g: &Graph) -> bool {
    let mut pg = UnGraph::<(), ()>::with_capacity(g.n(), g.edge_count());
    let ids: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(ids[u], ids[v], ());
    }
    rustworkx_core::planar::is_planar(&pg)
}

/// The map graph `G = B^2[W]` with its special cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGraph {
    graph: Graph,
    cliques: Vec<Vec<usize>>,
    witness_ref: u64,
}

impl MapGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `K_s = N_B(s)`, one per special, ascending.
    pub fn special_cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn clique(&self, s: usize) -> &[usize] {
        &self.cliques[s]
    }

    /// Hash of the canonical witness text this graph was built from.
    pub fn witness_back_ref(&self) -> u64 {
        self.witness_ref
    }
}

pub fn half_square(w: &BipartiteWitness) -> MapGraph {
    let mut graph = Graph::new(w.nations);
    let mut cliques = Vec::with_capacity(w.specials);
    for s in 0..w.specials {
        let k = w.special_neighbors(s).to_vec();
        for (i, &a) in k.iter().enumerate() {
            for &b in &k[i + 1..] {
                graph.add_edge(a, b);
            }
        }
        cliques.push(k);
    }
    MapGraph { graph, cliques, witness_ref: fnv1a(w.to_text().as_bytes()) }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    const STAR: &str = "c star\np tmap 4 1 4\ne 1 5\ne 2 5\ne 3 5\ne 4 5\n";

    #[test]
    fn star_is_k4() {
        let w = parse_witness(STAR).unwrap();
        assert_eq!(w.nation_count(), 4);
        assert!(validate_witness(&w, true).is_valid());
        let m = half_square(&w);
        assert_eq!(m.graph().edge_count(), 6);
        assert_eq!(m.clique(0), &[0, 1, 2, 3]);
    }

    #[test]
    fn single_nation() {
        let w = parse_witness("p tmap 1 0 0\n").unwrap();
        let m = half_square(&w);
        assert_eq!(m.n(), 1);
        assert_eq!(m.graph().edge_count(), 0);
    }

    #[test]
    fn no_specials_edgeless() {
        let w = BipartiteWitness::new(5, 0, []).unwrap();
        assert_eq!(half_square(&w).graph().edge_count(), 0);
    }

    #[test]
    fn parse_errors_carry_line() {
        let cases = [
            ("p tmap 2 1 1\ne 1 2\n", 2),
            ("p tmap 2 1 1\ne 3 1\n", 2),
            ("p tmap 2 1 2\ne 1 3\ne 1 3\n", 3),
            ("p tmap 2 1 1\n\ne 1 3\n", 2),
            ("c x\np tmap 2 1 2\ne 1 3\n", 2),
            ("e 1 3\n", 1),
            ("p tmap 2 1 1\np tmap 2 1 1\n", 2),
            ("p tmap 2 1 1\ne 1 4\n", 2),
            ("p tmap 2 1\n", 1),
        ];
        for (text, line) in cases {
            let e = parse_witness(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn trailing_whitespace_ok() {
        assert!(parse_witness("p tmap 2 1 1   \ne 1 3 \t\n").is_ok());
    }

    #[test]
    fn euler_bound_flagged() {
        // K_{3,4} minus one edge: 11 = 2*7 - 3 edges
        let inc: Vec<_> = (0..3).flat_map(|a| (0..4).map(move |s| (a, s))).skip(1).collect();
        let w = BipartiteWitness::new(3, 4, inc).unwrap();
        let r = validate_witness(&w, false);
        assert_eq!(r.violations, vec![WitnessViolation::EulerBound { edges: 11, bound: 10 }]);
    }

    #[test]
    fn k33_nonplanar_in_strict_mode() {
        // K_{3,3} with every edge a-b subdivided as a-x-y-b: nations a,y; specials b,x
        let mut inc = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                let e = 3 * a + b;
                inc.push((a, 3 + e));
                inc.push((3 + e, 3 + e));
                inc.push((3 + e, b));
            }
        }
        let w = BipartiteWitness::new(12, 12, inc).unwrap();
        assert!(validate_witness(&w, false).is_valid());
        assert_eq!(validate_witness(&w, true).violations, vec![WitnessViolation::NonPlanar]);
    }
}
