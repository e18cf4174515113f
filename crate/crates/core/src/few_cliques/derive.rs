use fixedbitset::FixedBitSet;
use thiserror::Error;

use super::{witness_of, FcdLabel, FewCliquesDecomposition};
use crate::decomposition::{validate_nice, NiceLabel, NiceTreeDecomposition};
use crate::graph_core::MapGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("not a nice decomposition of the witness: {0}")]
    NotNice(String),
    #[error("node ids are not in postorder")]
    NotPostorder,
}

/// Replaces every special `s` in a bag of `d` by `N_B(s) ∩ γ_d(t)` and labels
/// the nodes accordingly.
pub fn derive_fcd(d: &NiceTreeDecomposition, m: &MapGraph) -> Result<FewCliquesDecomposition, DeriveError> {
    let w = witness_of(m);
    let report = validate_nice(d, w.graph());
    if let Some(v) = report.violations.first() {
        return Err(DeriveError::NotNice(v.to_string()));
    }
    check_postorder(d)?;
    let nb = w.graph().n();
    let nations = m.n();
    let count = d.node_count();
    let mut gamma_d: Vec<FixedBitSet> = Vec::with_capacity(count);
    let mut original = Vec::with_capacity(count);
    let mut fake = Vec::with_capacity(count);
    let mut cliques = Vec::with_capacity(count);
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    let mut fake_intro = vec![None; nations];
    for t in 0..count {
        let mut g = FixedBitSet::with_capacity(nb);
        for &c in d.children(t) {
            g.union_with(&gamma_d[c]);
        }
        for &x in d.bag(t) {
            g.insert(x);
        }
        let orig: Vec<usize> = d.bag(t).iter().copied().filter(|&x| x < nations).collect();
        let cl: Vec<usize> = d.bag(t).iter().filter(|&&x| x >= nations).map(|&x| x - nations).collect();
        let mut fk: Vec<usize> = cl
            .iter()
            .flat_map(|&s| m.clique(s).iter().copied())
            .filter(|&v| g.contains(v) && orig.binary_search(&v).is_err())
            .collect();
        fk.sort_unstable();
        fk.dedup();
        let mut bag = orig.clone();
        bag.extend_from_slice(&fk);
        bag.sort_unstable();
        let label = match d.label(t) {
            NiceLabel::Leaf => FcdLabel::Leaf,
            NiceLabel::Join => FcdLabel::Join,
            NiceLabel::Introduce(v) if v < nations => FcdLabel::Introduce(v),
            NiceLabel::Introduce(_) => FcdLabel::Redundant,
            NiceLabel::Forget(v) if v < nations => {
                if fk.binary_search(&v).is_ok() {
                    fake_intro[v] = Some(t);
                    FcdLabel::FakeIntroduce(v)
                } else {
                    FcdLabel::Forget(v)
                }
            }
            NiceLabel::Forget(_) => {
                let child = &bags[d.children(t)[0]];
                FcdLabel::ForgetSet(child.iter().copied().filter(|v| bag.binary_search(v).is_err()).collect())
            }
        };
        gamma_d.push(g);
        original.push(orig);
        fake.push(fk);
        cliques.push(cl);
        bags.push(bag);
        labels.push(label);
    }
    let gamma: Vec<FixedBitSet> = gamma_d
        .iter()
        .map(|g| {
            let mut h = FixedBitSet::with_capacity(nations);
            h.extend(g.ones().filter(|&x| x < nations));
            h
        })
        .collect();
    let mut depth = vec![0; count];
    for t in (0..count).rev() {
        if let Some(p) = d.parent(t) {
            depth[t] = depth[p] + 1;
        }
    }
    Ok(FewCliquesDecomposition {
        source: d.clone(),
        map: m.clone(),
        nations,
        original,
        fake,
        cliques,
        labels,
        bags,
        gamma,
        depth,
        fake_intro,
    })
}

fn check_postorder(d: &NiceTreeDecomposition) -> Result<(), DeriveError> {
    let mut next = 0;
    let mut stack = vec![(d.root(), false)];
    while let Some((t, done)) = stack.pop() {
        if done {
            if t != next {
                return Err(DeriveError::NotPostorder);
            }
            next += 1;
        } else {
            stack.push((t, true));
            stack.extend(d.children(t).iter().rev().map(|&c| (c, false)));
        }
    }
    Ok(())
}
