mod common;

use std::collections::BTreeSet;

use mapkit::crossing::{
    clique_fake_crossing, clique_fake_order, complete_paths_to_cycle, crossing_profile, cycle_edges, normalize_cycle,
    normalize_triangle_packing, reroute_cycle_in_clique, system_of_distinct_representatives, PathSystem,
};
use mapkit::testbench::{fig4_instance, random_cycle, random_triangle_packing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn completion_postconditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..1000 {
        let l = rng.random_range(3..=12);
        let (q, order) = common::random_path_system(l, &mut rng);
        let f = complete_paths_to_cycle(&order, &q).unwrap();
        if let Err(e) = common::check_completion(&order, &q, &f) {
            panic!("case {case}: order {order:?}, paths {:?}: {e}", q.paths());
        }
    }
}

#[test]
fn completion_base_cases() {
    let q = PathSystem::new([1, 2, 3], []).unwrap();
    let mut f = complete_paths_to_cycle(&[1, 2, 3], &q).unwrap();
    f.sort_unstable();
    assert_eq!(f, vec![(1, 2), (1, 3), (2, 3)]);
    let q = PathSystem::new([10, 11, 12, 20], [(10, 11), (11, 12)]).unwrap();
    let mut f = complete_paths_to_cycle(&[10, 12, 20], &q).unwrap();
    f.sort_unstable();
    assert_eq!(f, vec![(10, 20), (12, 20)]);
}

#[test]
fn fake_order_segments() {
    for seed in 0..100 {
        let inst = common::small_instance(16, seed);
        let f = &inst.fcd;
        for s in 0..f.map_graph().special_cliques().len() {
            let sigma = clique_fake_order(f, s);
            let mut sorted = sigma.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, f.map_graph().clique(s));
            for t in (0..f.node_count()).filter(|&t| f.cliques(t).contains(&s)) {
                let gamma = common::subtree_nations(f, t);
                let pos: Vec<usize> =
                    (0..sigma.len()).filter(|&i| f.fake(t).binary_search(&sigma[i]).is_ok()).collect();
                let (Some(&lo), Some(&hi)) = (pos.first(), pos.last()) else { continue };
                for &v in &sigma[lo..=hi] {
                    assert!(gamma.contains(&v), "seed {seed} node {t} special {s}: {v} splits the segment");
                }
            }
        }
    }
}

#[test]
fn fig4_order_follows_fake_introductions() {
    let f = fig4_instance();
    let sigma = clique_fake_order(&f, 0);
    let nodes: Vec<usize> = sigma.iter().map(|&v| f.fake_introduce_node(v).unwrap()).collect();
    assert!(nodes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn never_fake_members_come_last_ascending() {
    for seed in 0..60 {
        let inst = common::small_instance(16, seed);
        let f = &inst.fcd;
        for s in 0..f.map_graph().special_cliques().len() {
            let sigma = clique_fake_order(f, s);
            let split = sigma.iter().position(|&v| f.fake_introduce_node(v).is_none()).unwrap_or(sigma.len());
            assert!(sigma[split..].iter().all(|&v| f.fake_introduce_node(v).is_none()));
            assert!(sigma[split..].windows(2).all(|w| w[0] < w[1]));
        }
    }
}

fn cycle_pairs(count: usize, seed: u64, mut visit: impl FnMut(&mapkit::pipeline::Instance, Vec<usize>)) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut i = 0;
    while done < count {
        let inst = common::small_instance(16, i);
        i += 1;
        if let Some(c) = random_cycle(inst.map.graph(), &mut rng) {
            visit(&inst, c);
            done += 1;
        }
    }
}

#[test]
fn reroute_keeps_outside_edges_and_bounds_fake_crossing() {
    cycle_pairs(200, 3, |inst, c| {
        let f = &inst.fcd;
        for s in 0..f.map_graph().special_cliques().len() {
            let k = f.map_graph().clique(s);
            let outside = |es: Vec<(usize, usize)>| -> BTreeSet<(usize, usize)> {
                es.into_iter().filter(|(a, b)| !(k.contains(a) && k.contains(b))).collect()
            };
            let r = reroute_cycle_in_clique(&c, s, f).unwrap();
            assert_eq!(r.len(), c.len());
            common::check_certificate(f.map_graph().graph(), mapkit::Problem::LongestCycle, r.len(), &mapkit::solvers::Certificate::Cycle(r.clone())).unwrap();
            assert_eq!(outside(cycle_edges(&r)), outside(cycle_edges(&c)));
            let crossing = clique_fake_crossing(&cycle_edges(&r), s, f);
            assert!(crossing.iter().all(|&x| x <= 4), "special {s}: {crossing:?}");
        }
    });
}

#[test]
fn reroute_leaves_untouched_cycles_alone() {
    cycle_pairs(100, 5, |inst, c| {
        let f = &inst.fcd;
        let es = cycle_edges(&c);
        for s in 0..f.map_graph().special_cliques().len() {
            let k = f.map_graph().clique(s);
            if es.iter().all(|(a, b)| !(k.contains(a) && k.contains(b))) {
                assert_eq!(reroute_cycle_in_clique(&c, s, f).unwrap(), c);
            }
        }
    });
}

#[test]
fn normalized_cycle_crossing_bound() {
    cycle_pairs(300, 11, |inst, c| {
        let f = &inst.fcd;
        let n = normalize_cycle(&c, f).unwrap();
        assert_eq!(n.len(), c.len());
        let profile = crossing_profile(&cycle_edges(&n), f);
        for t in 0..f.node_count() {
            let cap = 2 * f.original(t).len() + 4 * f.cliques(t).len();
            assert!(profile.counts[t] <= cap, "node {t}: {} > {cap}", profile.counts[t]);
            assert!(cap <= 4 * (f.width_d() + 1));
        }
    });
}

#[test]
fn profile_matches_recount() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for seed in 0..100 {
        let inst = common::small_instance(16, seed);
        let edges: Vec<(usize, usize)> = inst.map.graph().edges().filter(|_| rng.random_bool(0.4)).collect();
        assert_eq!(crossing_profile(&edges, &inst.fcd).counts, common::crossing_recount(&edges, &inst.fcd));
    }
    let inst = common::small_instance(12, 4);
    let all: Vec<_> = inst.map.graph().edges().collect();
    assert_eq!(crossing_profile(&all, &inst.fcd).counts[inst.fcd.root()], 0);
    assert_eq!(crossing_profile(&[], &inst.fcd).max(), 0);
}

#[test]
fn triangle_packings_regroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    let mut seed = 0;
    while checked < 500 {
        let inst = common::small_instance(16, seed % 150);
        seed += 1;
        let ts = random_triangle_packing(&inst.map, &mut rng);
        if ts.is_empty() {
            continue;
        }
        let f = &inst.fcd;
        let out = normalize_triangle_packing(&ts, f).unwrap();
        assert_eq!(out.len(), ts.len());
        let verts = |xs: &[mapkit::crossing::Triangle]| -> BTreeSet<usize> { xs.iter().flat_map(|t| t.vertices).collect() };
        assert_eq!(verts(&out), verts(&ts));
        let mut edges = Vec::new();
        for t in &out {
            let [a, b, c] = t.vertices;
            edges.extend(cycle_edges(&[a, b, c]));
        }
        let hosts: BTreeSet<usize> = out.iter().map(|t| t.host).collect();
        for &s in &hosts {
            let mine: Vec<(usize, usize)> = out
                .iter()
                .filter(|t| t.host == s)
                .flat_map(|t| cycle_edges(&t.vertices))
                .collect();
            assert!(clique_fake_crossing(&mine, s, f).iter().all(|&x| x <= 4));
        }
        let profile = crossing_profile(&edges, f);
        assert!(profile.max() <= 4 * (f.width_d() + 1), "{} > 4 * {}", profile.max(), f.width_d() + 1);
        checked += 1;
    }
}

#[test]
fn representatives_exhaustive_small() {
    let mut bad = Vec::new();
    let n = common::each_sdr_system(5, 10, |sets| {
        let reps = system_of_distinct_representatives(sets).unwrap();
        if let Err(e) = common::check_representatives(sets, &reps) {
            bad.push(e);
        }
    });
    assert!(n > 100_000);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn representatives_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..1000 {
        let size = rng.random_range(9..40);
        let sets = common::random_sdr_system(size, &mut rng);
        let reps = system_of_distinct_representatives(&sets).unwrap();
        common::check_representatives(&sets, &reps).unwrap();
    }
}
