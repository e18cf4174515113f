"""Quick end-to-end check of the Python bindings."""

import itertools

import mapkit


def brute_vc(g):
    n = g.n
    edges = g.edges()
    for size in range(n + 1):
        for cover in itertools.combinations(range(n), size):
            s = set(cover)
            if all(a in s or b in s for a, b in edges):
                return size
    return n


def main():
    assert set(mapkit.problems()) == {"vc", "fvs", "longest-cycle", "longest-path", "cycle-packing"}

    star = mapkit.Witness.star(4)
    assert (star.nations, star.specials) == (4, 1)
    assert star.validate(strict=True) == []
    g = star.map_graph()
    assert len(g.edges()) == 6 and g.clique(0) == [0, 1, 2, 3]

    inst = mapkit.Instance(star)
    r = inst.solve("fvs", k=2)
    assert r.headline == "YES" and r.certificate_kind == "vertices"
    assert len(r.certificate[0]) == 2

    r = mapkit.Instance(mapkit.Witness.star(5)).solve("longest-cycle", k=5)
    assert r.decision is True and r.early_exit == "clique"

    same = mapkit.Witness.parse(mapkit.Witness.grid(2, 3).to_text())
    assert same.to_text() == mapkit.Witness.grid(2, 3).to_text()
    try:
        mapkit.Witness.parse("p tmap 2 1 2\ne 1 2\ne 1 3\n")
    except ValueError as e:
        assert "line 2" in str(e)
    else:
        raise AssertionError("same-side edge accepted")

    grid = mapkit.Instance(mapkit.Witness.grid(3, 3), exact=True)
    r = grid.solve("longest-cycle")
    assert r.headline == "OPT=8" and r.optimal
    capped = grid.solve("longest-cycle", exhaustive=True)
    uncapped = grid.solve("longest-cycle", cap="none", exhaustive=True)
    assert capped.value == uncapped.value == 8
    assert capped.max_states > 0 and len(capped.node_states) == grid.node_count
    cycle = r.certificate[0]
    edges = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    assert len(grid.crossing_profile(edges)) == grid.node_count

    for seed in range(5):
        w = mapkit.Witness.random_incidence(10, 0.5, seed)
        inst = mapkit.Instance(w, seed=seed)
        for p in mapkit.problems():
            r = inst.solve(p)
            best, _ = inst.oracle(p)
            assert r.value == best, (seed, p, r.value, best)
        assert inst.solve("vc").value == brute_vc(inst.map_graph())

    print("smoke test passed")


if __name__ == "__main__":
    main()
