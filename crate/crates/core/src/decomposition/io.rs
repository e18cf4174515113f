//! PACE-style `.td` reading and writing. Ids and vertices are 1-based on disk.

use std::fmt::Write as _;

use super::{NiceLabel, NiceTreeDecomposition, TreeDecomposition};
use crate::graph_core::ParseError;

/// Writes header, bags and tree edges, followed by whatever comment lines
/// `extra` produces for each node.
pub fn write_pace(td: &TreeDecomposition, n: usize, mut extra: impl FnMut(usize, &mut String)) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.node_count(), td.max_bag(), n);
    for (t, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", t + 1);
        for &v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for (t, p) in td.parent.iter().enumerate() {
        if let Some(p) = p {
            let _ = writeln!(out, "{} {}", p + 1, t + 1);
        }
    }
    for t in 0..td.node_count() {
        extra(t, &mut out);
    }
    out
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    write_pace(td, n, |_, _| {})
}

pub fn label_text(l: NiceLabel) -> String {
    match l {
        NiceLabel::Leaf => "LEAF".into(),
        NiceLabel::Introduce(v) => format!("INTRODUCE {}", v + 1),
        NiceLabel::Forget(v) => format!("FORGET {}", v + 1),
        NiceLabel::Join => "JOIN".into(),
    }
}

pub fn write_nice(nice: &NiceTreeDecomposition, n: usize) -> String {
    write_pace(&nice.td, n, |t, out| {
        let _ = writeln!(out, "c label {} {}", t + 1, label_text(nice.labels[t]));
    })
}

/// Reads a PACE `.td` file; the tree is rooted at bag 1. Comment lines are skipped.
pub fn read_td(text: &str) -> Result<(TreeDecomposition, usize), ParseError> {
    let err = |line: usize, msg: &str| ParseError { line, msg: msg.to_string() };
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim_end();
        if line.starts_with('c') {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        let nums = |from: usize| -> Result<Vec<usize>, ParseError> {
            tok[from..].iter().map(|s| s.parse().map_err(|_| err(ln, "bad number"))).collect()
        };
        match tok.first() {
            Some(&"s") => {
                if header.is_some() || tok.get(1) != Some(&"td") || tok.len() != 5 {
                    return Err(err(ln, "expected `s td <bags> <maxbag> <n>`"));
                }
                let v = nums(2)?;
                bags = vec![None; v[0]];
                header = Some((v[0], v[2]));
            }
            Some(&"b") => {
                let Some((_, n)) = header else { return Err(err(ln, "bag before header")) };
                let v = nums(1)?;
                let id = *v.first().ok_or_else(|| err(ln, "missing bag id"))?;
                if id == 0 || id > bags.len() || bags[id - 1].is_some() {
                    return Err(err(ln, "bad bag id"));
                }
                let mut bag: Vec<usize> = v[1..].to_vec();
                if bag.iter().any(|&x| x == 0 || x > n) {
                    return Err(err(ln, "vertex out of range"));
                }
                bag.iter_mut().for_each(|x| *x -= 1);
                bag.sort_unstable();
                bag.dedup();
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                if header.is_none() {
                    return Err(err(ln, "edge before header"));
                }
                let v = nums(0)?;
                if v.len() != 2 || v.iter().any(|&x| x == 0 || x > bags.len()) {
                    return Err(err(ln, "bad tree edge"));
                }
                edges.push((v[0] - 1, v[1] - 1, ln));
            }
            None => return Err(err(ln, "empty line")),
        }
    }
    let Some((count, n)) = header else { return Err(err(1, "missing header")) };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(1, &format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    if count == 0 {
        return Err(err(1, "no bags"));
    }
    let mut adj = vec![Vec::new(); count];
    for &(a, b, _) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; count];
    let mut seen = vec![false; count];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(t) = stack.pop() {
        for &u in &adj[t] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(t);
                stack.push(u);
            }
        }
    }
    if edges.len() + 1 != count || seen.iter().any(|s| !s) {
        return Err(err(edges.last().map_or(1, |e| e.2), "tree edges do not form a tree"));
    }
    Ok((TreeDecomposition { parent, bags, root: 0 }, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::heuristic_decompose;
    use crate::graph_core::Graph;

    #[test]
    fn roundtrip() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let td = heuristic_decompose(&g, 5);
        let text = write_td(&td, 6);
        assert!(text.starts_with(&format!("s td {} {} 6\n", td.node_count(), td.max_bag())));
        let (back, n) = read_td(&text).unwrap();
        assert_eq!(n, 6);
        assert_eq!(back.bags, td.bags);
        assert_eq!(back.parent, td.parent);
    }

    #[test]
    fn labels_emitted() {
        let td = TreeDecomposition { parent: vec![None], bags: vec![vec![0]], root: 0 };
        let nice = crate::decomposition::make_nice(&td).unwrap();
        let text = write_nice(&nice, 1);
        assert!(text.contains("c label 1 LEAF\nc label 2 INTRODUCE 1\nc label 3 FORGET 1\n"));
    }
}
