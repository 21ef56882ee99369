"""Color change rule, forcing traces, and exact zero forcing numbers."""

import random

import pytest

from fortlab.forts import enumerate_minimal_forts, fort_irrelevant_vertices
from fortlab.graphs import (
    Graph,
    SpiderSpec,
    build_spider,
    corona_E2,
    cycle_graph,
    generate_trees,
    path_graph,
)
from fortlab.zeroforcing import (
    closure,
    is_failed_zfs,
    is_maximal_failed_zfs,
    is_zero_forcing_set,
    minimal_zero_forcing_sets,
    minimum_path_cover_tree,
    zero_forcing_irrelevant_vertices,
    zero_forcing_number,
)

from oracles import (
    brute_closure,
    brute_maximal_failed,
    brute_zero_forcing_number,
    neighbor_table,
)


def random_graph(rng, n, p=0.35):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_closure_examples():
    p4 = path_graph(4)
    assert closure(p4, frozenset({0})).final == frozenset(range(4))
    c4 = cycle_graph(4)
    assert closure(c4, frozenset({0})).final == frozenset({0})
    spider = build_spider(SpiderSpec((3, 3, 3)))
    assert closure(spider, frozenset({0})).final == frozenset({0})


def test_trace_replays_validly():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 10)
        g = random_graph(rng, n)
        s = frozenset(v for v in range(n) if rng.random() < 0.4)
        trace = closure(g, s)
        nbrs = neighbor_table(g)
        gray = set(s)
        for u, v in trace.forces:
            assert u in gray and v not in gray
            assert nbrs[u] - gray == {v}
            gray.add(v)
        assert frozenset(gray) == trace.final
        assert trace.final == s | {v for _, v in trace.forces}


def test_closure_confluence_random_orders():
    rng = random.Random(32)
    for _ in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        s = frozenset(v for v in range(n) if rng.random() < 0.35)
        expected = closure(g, s).final
        for seed in range(3):
            assert brute_closure(g, s, random.Random(seed)) == expected


def test_zfs_leaf_sets_of_trees():
    rng = random.Random(33)
    for n in range(2, 11):
        for t in generate_trees(n):
            leaves = frozenset(v for v in range(n) if t.degree(v) == 1)
            assert is_zero_forcing_set(t, leaves)
            drop = rng.choice(sorted(leaves))
            assert is_zero_forcing_set(t, leaves - {drop})


def test_zfs_monotone_under_supersets():
    rng = random.Random(34)
    for _ in range(300):
        n = rng.randint(1, 10)
        g = random_graph(rng, n)
        s = frozenset(v for v in range(n) if rng.random() < 0.3)
        extra = frozenset(v for v in range(n) if rng.random() < 0.3)
        if is_zero_forcing_set(g, s):
            assert is_zero_forcing_set(g, s | extra)


def test_zero_forcing_number_examples():
    for n in range(1, 9):
        zf, witness = zero_forcing_number(path_graph(n))
        assert zf == 1 and is_zero_forcing_set(path_graph(n), witness)
    assert zero_forcing_number(cycle_graph(6))[0] == 2
    assert zero_forcing_number(cycle_graph(6), None)[0] == 2
    for base_order in range(1, 5):
        for h in generate_trees(base_order):
            t = corona_E2(h)
            assert zero_forcing_number(t)[0] == base_order


def test_zero_forcing_number_against_brute_force():
    rng = random.Random(35)
    for _ in range(150):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.7]))
        zf, witness = zero_forcing_number(g)
        assert zf == brute_zero_forcing_number(g)
        assert len(witness) == zf and is_zero_forcing_set(g, witness)


def test_failed_and_maximal_failed():
    p2, p3, c4 = path_graph(2), path_graph(3), cycle_graph(4)
    for g in (p2, p3, c4):
        assert not is_failed_zfs(g, frozenset(range(g.n)))
    assert is_failed_zfs(c4, frozenset({1}))
    assert is_failed_zfs(p3, frozenset({1}))
    assert is_maximal_failed_zfs(p3, frozenset({1}))
    # The empty set forces nothing; on P_2 every single vertex forces, so the
    # empty set is a maximal failed ZFS there but not on P_3.
    assert is_maximal_failed_zfs(p2, frozenset())
    assert not is_maximal_failed_zfs(p3, frozenset())


def test_maximal_failed_against_brute_force():
    rng = random.Random(36)
    for _ in range(150):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, 0.4)
        expected = set(brute_maximal_failed(g))
        got = {
            frozenset(s)
            for r in range(n + 1)
            for s in _subsets(range(n), r)
            if is_maximal_failed_zfs(g, frozenset(s))
        }
        assert got == expected


def _subsets(universe, r):
    from itertools import combinations

    return combinations(universe, r)


def test_minimal_zfs_and_irrelevant_vertices():
    p3 = path_graph(3)
    assert set(minimal_zero_forcing_sets(p3)) == {frozenset({0}), frozenset({2})}
    assert zero_forcing_irrelevant_vertices(p3) == frozenset({1})
    assert zero_forcing_irrelevant_vertices(path_graph(2)) == frozenset()
    t = corona_E2(path_graph(3))
    # The three support vertices of the corona never appear in a minimal ZFS.
    assert {0, 1, 2} <= set(zero_forcing_irrelevant_vertices(t))
    with pytest.raises(ValueError):
        minimal_zero_forcing_sets(random_graph(random.Random(0), 17, 0.2))


def test_irrelevance_equivalence_small():
    # Zero-forcing irrelevant and fort irrelevant coincide.
    rng = random.Random(37)
    for _ in range(120):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, 0.4)
        assert zero_forcing_irrelevant_vertices(g) == fort_irrelevant_vertices(g)


def assert_valid_path_cover(t, paths):
    seen = set()
    for path in paths:
        assert path, "empty path"
        for v in path:
            assert v not in seen
            seen.add(v)
        for a, b in zip(path, path[1:]):
            assert t.has_edge(a, b)
    assert seen == set(range(t.n))


def test_path_cover_examples():
    assert len(minimum_path_cover_tree(path_graph(7))) == 1
    spider = build_spider(SpiderSpec((3, 3, 3)))
    paths = minimum_path_cover_tree(spider)
    assert_valid_path_cover(spider, paths)
    assert len(paths) == 2
    t = corona_E2(path_graph(3))
    paths = minimum_path_cover_tree(t)
    assert_valid_path_cover(t, paths)
    assert len(paths) == 3
    assert all(len(p) == 3 for p in paths)
    with pytest.raises(ValueError):
        minimum_path_cover_tree(cycle_graph(4))


def test_path_cover_size_equals_zero_forcing_number():
    for n in range(1, 15):
        for t in generate_trees(n):
            family = enumerate_minimal_forts(t)
            zf, _ = zero_forcing_number(t, family.forts)
            paths = minimum_path_cover_tree(t)
            assert_valid_path_cover(t, paths)
            assert len(paths) == zf
