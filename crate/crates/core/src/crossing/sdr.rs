use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SdrError {
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("more than one set has size other than 2")]
    TooManyIrregular,
    #[error("element {0} occurs in more than two sets")]
    Overused(usize),
}

/// Distinct representatives for sets that are all pairs except possibly one,
/// with every element in at most two sets.
pub fn system_of_distinct_representatives(sets: &[Vec<usize>]) -> Result<Vec<usize>, SdrError> {
    let mut sets: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    if let Some(i) = sets.iter().position(Vec::is_empty) {
        return Err(SdrError::EmptySet(i));
    }
    if sets.iter().filter(|s| s.len() != 2).count() > 1 {
        return Err(SdrError::TooManyIrregular);
    }
    let mut count = std::collections::BTreeMap::new();
    for s in &sets {
        for &x in s {
            *count.entry(x).or_insert(0usize) += 1;
        }
    }
    if let Some((&x, _)) = count.iter().find(|(_, &c)| c > 2) {
        return Err(SdrError::Overused(x));
    }
    let mut rep = vec![usize::MAX; sets.len()];
    let mut live: Vec<bool> = vec![true; sets.len()];
    for _ in 0..sets.len() {
        let pick = (0..sets.len())
            .filter(|&i| live[i])
            .min_by_key(|&i| match sets[i].len() {
                1 => (0, i),
                2 => (2, i),
                _ => (1, i),
            })
            .unwrap();
        let z = sets[pick][0];
        rep[pick] = z;
        live[pick] = false;
        for (i, s) in sets.iter_mut().enumerate() {
            if live[i] {
                s.retain(|&x| x != z);
                debug_assert!(!s.is_empty());
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        assert_eq!(system_of_distinct_representatives(&[vec![7]]), Ok(vec![7]));
    }

    #[test]
    fn triangle_system() {
        let r = system_of_distinct_representatives(&[vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        let mut s = r.clone();
        s.sort_unstable();
        assert_eq!(s, vec![1, 2, 3]);
        assert!([1, 2].contains(&r[0]) && [2, 3].contains(&r[1]) && [1, 3].contains(&r[2]));
    }

    #[test]
    fn disjoint_pairs_take_first() {
        let r = system_of_distinct_representatives(&[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(r, vec![0, 2, 4]);
    }

    #[test]
    fn preconditions() {
        assert_eq!(system_of_distinct_representatives(&[vec![]]), Err(SdrError::EmptySet(0)));
        assert_eq!(
            system_of_distinct_representatives(&[vec![1], vec![2, 3, 4]]),
            Err(SdrError::TooManyIrregular)
        );
        assert_eq!(
            system_of_distinct_representatives(&[vec![1, 2], vec![1, 3], vec![1, 4]]),
            Err(SdrError::Overused(1))
        );
    }
}
