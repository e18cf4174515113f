mod common;

use mapkit::decomposition::io::{read_td, write_td};
use mapkit::decomposition::{exact_decompose_small, heuristic_decompose, make_nice, validate_nice, validate_td, NiceLabel};

#[test]
fn heuristic_decompositions_are_valid_and_nice() {
    for seed in 0..200 {
        let w = common::small_witness(30, seed);
        let td = heuristic_decompose(w.graph(), seed);
        let r = validate_td(&td, w.graph());
        assert!(r.is_valid(), "seed {seed}: {:?}", r.violations);
        let nice = make_nice(&td).unwrap();
        let r = validate_nice(&nice, w.graph());
        assert!(r.is_valid(), "seed {seed}: {:?}", r.violations);
        assert_eq!(nice.width(), td.width(), "seed {seed}");
        assert!(nice.bag(nice.root()).is_empty());
    }
}

#[test]
fn nice_ids_are_postorder() {
    for seed in 0..50 {
        let w = common::small_witness(24, seed);
        let nice = make_nice(&heuristic_decompose(w.graph(), seed)).unwrap();
        assert_eq!(nice.root(), nice.node_count() - 1);
        for t in 0..nice.node_count() {
            assert!(nice.children(t).iter().all(|&c| c < t));
            match nice.label(t) {
                NiceLabel::Leaf => assert!(nice.bag(t).is_empty() && nice.children(t).is_empty()),
                NiceLabel::Join => assert_eq!(nice.children(t).len(), 2),
                _ => assert_eq!(nice.children(t).len(), 1),
            }
        }
    }
}

#[test]
fn heuristic_never_beats_exact() {
    let mut compared = 0;
    for seed in 0..60 {
        let w = common::small_witness(16, seed);
        let h = heuristic_decompose(w.graph(), seed);
        let e = exact_decompose_small(w.graph(), 16).unwrap();
        assert!(validate_td(&e, w.graph()).is_valid());
        assert!(h.width() >= e.width(), "seed {seed}");
        compared += 1;
    }
    assert_eq!(compared, 60);
}

#[test]
fn td_text_round_trip() {
    for seed in 0..30 {
        let w = common::small_witness(30, seed);
        let td = heuristic_decompose(w.graph(), seed);
        let (back, n) = read_td(&write_td(&td, w.graph().n())).unwrap();
        assert_eq!(n, w.graph().n());
        assert!(validate_td(&back, w.graph()).is_valid());
        assert_eq!(back.width(), td.width());
    }
}
