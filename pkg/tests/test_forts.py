"""Minimal fort enumeration and the structures built on the fort family."""

import random

import pytest

from fortlab.forts import (
    BridgeIrrelevanceReport,
    FortLimitError,
    check_bridge_irrelevance,
    enumerate_minimal_forts,
    fort_irrelevant_vertices,
    fort_number,
    hall_matching_exists,
    is_fort,
    star_centers,
)
from fortlab.graphs import (
    Graph,
    SpiderSpec,
    bits,
    build_spider,
    corona_E2,
    cycle_graph,
    empty_graph,
    generate_trees,
    nonisomorphic_graphs,
    path_graph,
)
from fortlab.zeroforcing import zero_forcing_number

from oracles import brute_fort_number, brute_minimal_forts


def random_graph(rng, n, p=0.35):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(rng, n):
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def test_is_fort_examples():
    p3 = path_graph(3)
    assert is_fort(p3, {0, 2})
    assert not is_fort(p3, {0})
    assert not is_fort(p3, set())
    assert is_fort(p3, {0, 1, 2})
    with pytest.raises(ValueError):
        is_fort(p3, {5})


def test_known_fort_families():
    assert [sorted(f) for f in enumerate_minimal_forts(path_graph(3)).forts] == [[0, 2]]
    assert len(enumerate_minimal_forts(path_graph(4))) == 2
    c6 = enumerate_minimal_forts(cycle_graph(6))
    assert len(c6) == 5
    assert frozenset({0, 2, 4}) in c6.forts and frozenset({1, 3, 5}) in c6.forts
    assert len(enumerate_minimal_forts(build_spider(SpiderSpec((3, 3, 3))))) == 7
    # Isolated vertices are singleton forts.
    assert [sorted(f) for f in enumerate_minimal_forts(empty_graph(3)).forts] == [
        [0],
        [1],
        [2],
    ]


def test_enumeration_matches_brute_force_exhaustively():
    for n in range(1, 8):
        for g in nonisomorphic_graphs(n):
            fam = enumerate_minimal_forts(g)
            brute = brute_minimal_forts(g)
            assert len(fam.forts) == len(brute)
            assert set(fam.forts) == set(brute)


def test_scan_and_dfs_methods_agree():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(9, 14)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5]))
        a = enumerate_minimal_forts(g, method="scan").forts
        b = enumerate_minimal_forts(g, method="dfs").forts
        assert a == b
    for _ in range(10):
        n = rng.randint(15, 18)
        t = random_tree(rng, n)
        assert (
            enumerate_minimal_forts(t, method="scan").forts
            == enumerate_minimal_forts(t, method="dfs").forts
        )


def test_enumeration_cap(monkeypatch):
    big = random_tree(random.Random(0), 25)
    with pytest.raises(FortLimitError):
        enumerate_minimal_forts(big)
    assert enumerate_minimal_forts(big, limit=25)
    monkeypatch.setenv("FORTLAB_MAX_N", "25")
    assert enumerate_minimal_forts(big)
    monkeypatch.setenv("FORTLAB_MAX_N", "10")
    with pytest.raises(FortLimitError):
        enumerate_minimal_forts(path_graph(12))


def test_family_order_and_json():
    fam = enumerate_minimal_forts(cycle_graph(6))
    masks = fam.masks()
    assert masks == sorted(masks)
    d = fam.to_json_dict()
    assert d["count"] == 5
    assert all(lst == sorted(lst) for lst in d["forts"])
    assert d["graph6"] == "EhEG"


def test_fort_irrelevant_vertices():
    assert fort_irrelevant_vertices(path_graph(3)) == frozenset({1})
    rng = random.Random(42)
    for n in range(2, 11):
        for t in generate_trees(n):
            family = enumerate_minimal_forts(t)
            irrelevant = family.irrelevant_vertices()
            leaves = {v for v in range(n) if t.degree(v) == 1}
            assert not (irrelevant & leaves)


def test_tree_fort_structure_laws():
    # Minimal forts of trees: at least two leaves; outside vertices see 0 or
    # 2 fort members; every fort-irrelevant vertex has a minimal fort holding
    # exactly two of its neighbors.
    for n in range(2, 13):
        for t in generate_trees(n):
            family = enumerate_minimal_forts(t)
            leaves = {v for v in range(n) if t.degree(v) == 1}
            for f in family.forts:
                assert len(f & leaves) >= 2
                for v in range(n):
                    if v not in f:
                        assert len(set(bits(t.adj[v])) & f) in (0, 2)
            for v in family.irrelevant_vertices():
                nbrs = set(bits(t.adj[v]))
                assert len(nbrs) >= 2
                assert any(len(f & nbrs) == 2 for f in family.forts)


def test_star_centers_small():
    rec = star_centers(path_graph(3))
    assert rec.layers == (frozenset({1}),)
    assert rec.residual_orders == (0,)
    assert star_centers(path_graph(5)).layers == ()
    double_star = corona_E2(path_graph(2))
    rec = star_centers(double_star)
    assert rec.layers == (frozenset({0, 1}),)
    assert rec.residual_orders == (0,)


def test_star_centers_equal_fort_irrelevant_on_trees():
    for n in range(1, 13):
        for t in generate_trees(n):
            assert star_centers(t).centers() == fort_irrelevant_vertices(t)


def test_fort_number_examples():
    assert fort_number(cycle_graph(6))[0] == 2
    assert fort_number(path_graph(3))[0] == 1
    for base in range(1, 5):
        for h in generate_trees(base):
            assert fort_number(corona_E2(h))[0] == base


def test_fort_number_against_brute_force():
    rng = random.Random(43)
    for _ in range(120):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.choice([0.25, 0.5]))
        ft, packing = fort_number(g)
        assert ft == brute_fort_number(g)
        assert len(packing) == ft
        flat = [v for f in packing for v in f]
        assert len(flat) == len(set(flat))


def test_hall_matching():
    t = corona_E2(path_graph(3))
    zf, witness = zero_forcing_number(t)
    ok, matching = hall_matching_exists(t, witness)
    assert ok and len(matching) == 3
    assert all(v in f for f, v in matching.items())

    c6 = cycle_graph(6)
    zf, witness = zero_forcing_number(c6)
    ok, matching = hall_matching_exists(c6, witness)
    assert not ok and matching is None

    p3 = path_graph(3)
    zf, witness = zero_forcing_number(p3)
    ok, matching = hall_matching_exists(p3, witness)
    assert ok and list(matching.values()) == [sorted(witness)[0]]

    with pytest.raises(ValueError):
        hall_matching_exists(c6, frozenset({0, 1, 2}))  # not minimum
    with pytest.raises(ValueError):
        hall_matching_exists(c6, frozenset({0, 3}))  # not forcing


def test_bridge_irrelevance_examples():
    p3 = path_graph(3)
    report = check_bridge_irrelevance(p3, 1, p3, 1)
    assert isinstance(report, BridgeIrrelevanceReport)
    assert report.ok
    assert report.joint_count == report.count1 + report.count2 == 2
    assert report.v1_irrelevant and report.v2_irrelevant

    report = check_bridge_irrelevance(p3, 1, path_graph(4), 0)
    assert report.v1_irrelevant
    assert report.v2_irrelevant is None and report.count_additive is None

    with pytest.raises(ValueError):
        check_bridge_irrelevance(p3, 0, p3, 1)  # leaves are never irrelevant
    with pytest.raises(ValueError):
        check_bridge_irrelevance(
            Graph.from_edges(4, [(0, 1), (2, 3)]), 0, p3, 1
        )  # disconnected


def test_bridge_irrelevance_random_trees():
    rng = random.Random(44)
    done = 0
    while done < 40:
        t1 = random_tree(rng, rng.randint(3, 10))
        t2 = random_tree(rng, rng.randint(3, 10))
        irr1 = sorted(fort_irrelevant_vertices(t1))
        irr2 = sorted(fort_irrelevant_vertices(t2))
        if not irr1 or not irr2:
            continue
        v1 = rng.choice(irr1)
        v2 = rng.choice(irr2)
        report = check_bridge_irrelevance(t1, v1, t2, v2)
        assert report.ok, (t1.edges(), v1, t2.edges(), v2, report)
        done += 1
