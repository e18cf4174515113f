use std::collections::BTreeMap;

use super::{CrossingError, PathSystem};

/// Adds edges between the listed endpoints of `q` so that `q` closes into a
/// single cycle, with at most two added edges across any prefix cut of `order`.
pub fn complete_paths_to_cycle(order: &[usize], q: &PathSystem) -> Result<Vec<(usize, usize)>, CrossingError> {
    if order.len() < 3 {
        return Err(CrossingError::TooFewVertices(order.len()));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(CrossingError::Repeated(w[0]));
    }
    if sorted != q.endpoints() {
        return Err(CrossingError::NotEndpoints);
    }
    let mut deg: BTreeMap<usize, usize> = order.iter().map(|&v| (v, q.degree(v))).collect();
    let mut partner: BTreeMap<usize, usize> = order.iter().map(|&v| (v, q.partner(v))).collect();
    let mut seq = order.to_vec();
    let mut f = Vec::new();

    let mut add = |a: usize, b: usize, deg: &mut BTreeMap<usize, usize>, partner: &mut BTreeMap<usize, usize>| {
        let (pa, pb) = (partner[&a], partner[&b]);
        *deg.get_mut(&a).unwrap() += 1;
        *deg.get_mut(&b).unwrap() += 1;
        partner.insert(pa, pb);
        partner.insert(pb, pa);
        f.push((a.min(b), a.max(b)));
    };

    while seq.len() > 3 {
        let (u1, u2, u3) = (seq[0], seq[1], seq[2]);
        match (deg[&u1], deg[&u2]) {
            (0, 1) => {
                add(u1, u2, &mut deg, &mut partner);
            }
            (0, 0) => {
                add(u1, u2, &mut deg, &mut partner);
                add(u1, u3, &mut deg, &mut partner);
            }
            _ => {
                let x = if u2 != partner[&u1] { u2 } else { u3 };
                add(u1, x, &mut deg, &mut partner);
            }
        }
        seq.retain(|v| deg[v] < 2);
    }
    match seq.len() {
        3 => {
            let (a, b, c) = (seq[0], seq[1], seq[2]);
            if deg[&a] == 0 && deg[&b] == 0 && deg[&c] == 0 {
                add(a, b, &mut deg, &mut partner);
                add(b, c, &mut deg, &mut partner);
                add(c, a, &mut deg, &mut partner);
            } else {
                let z = *seq.iter().find(|v| deg[v] == 0).expect("one isolated vertex and one path");
                for &x in seq.iter().filter(|&&v| v != z) {
                    add(x, z, &mut deg, &mut partner);
                }
            }
        }
        2 => {
            let (a, b) = (seq[0], seq[1]);
            debug_assert_eq!(partner[&a], b);
            add(a, b, &mut deg, &mut partner);
        }
        _ => unreachable!("every step leaves at least two endpoints"),
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        v.sort_unstable();
        v
    }

    #[test]
    fn three_isolated_make_triangle() {
        let q = PathSystem::new([4, 7, 9], []).unwrap();
        let f = complete_paths_to_cycle(&[7, 4, 9], &q).unwrap();
        assert_eq!(sorted(f), vec![(4, 7), (4, 9), (7, 9)]);
    }

    #[test]
    fn path_plus_isolated() {
        let q = PathSystem::new([0, 1, 2, 3], [(0, 1), (1, 2)]).unwrap();
        let f = complete_paths_to_cycle(&[0, 2, 3], &q).unwrap();
        assert_eq!(sorted(f), vec![(0, 3), (2, 3)]);
    }

    #[test]
    fn two_paths_close_up() {
        let q = PathSystem::new(0..6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let f = complete_paths_to_cycle(&[0, 2, 3, 5], &q).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn precondition_errors() {
        let q = PathSystem::new(0..3, [(0, 1)]).unwrap();
        assert_eq!(complete_paths_to_cycle(&[0, 1], &q), Err(CrossingError::TooFewVertices(2)));
        let q = PathSystem::new(0..4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(complete_paths_to_cycle(&[0, 1, 3], &q), Err(CrossingError::NotEndpoints));
        assert_eq!(complete_paths_to_cycle(&[0, 0, 3], &q), Err(CrossingError::Repeated(0)));
    }
}
