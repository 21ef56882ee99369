"""Brute-force oracles used to pin expected values in the tests.

Everything here recomputes results from first principles (subset scans,
definitional simulation, Prufer sequences) so the package's search and
counting code is checked against an independent route.
"""

from __future__ import annotations

import itertools
from collections import Counter


def neighbor_table(g) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def brute_is_fort(nbrs: dict[int, set[int]], n: int, subset: frozenset[int]) -> bool:
    if not subset:
        return False
    for v in range(n):
        if v not in subset and len(nbrs[v] & subset) == 1:
            return False
    return True


def brute_minimal_forts(g) -> list[frozenset[int]]:
    """Full 2^n scan followed by an antichain filter."""
    nbrs = neighbor_table(g)
    forts = []
    for r in range(1, g.n + 1):
        for comb in itertools.combinations(range(g.n), r):
            s = frozenset(comb)
            if brute_is_fort(nbrs, g.n, s):
                forts.append(s)
    return [f for f in forts if not any(o < f for o in forts)]


def brute_closure(g, s, rng=None) -> frozenset[int]:
    """Definitional color change simulation.

    With an rng the applicable force is chosen at random each step, which
    exercises order independence of the fixed point.
    """
    nbrs = neighbor_table(g)
    gray = set(s)
    while True:
        moves = []
        for u in gray:
            white = nbrs[u] - gray
            if len(white) == 1:
                moves.append((u, next(iter(white))))
        if not moves:
            return frozenset(gray)
        if rng is None:
            u, v = moves[0]
        else:
            u, v = moves[rng.randrange(len(moves))]
        gray.add(v)


def brute_is_zfs(g, s) -> bool:
    return brute_closure(g, s) == frozenset(range(g.n))


def brute_zero_forcing_number(g) -> int:
    for k in range(g.n + 1):
        for comb in itertools.combinations(range(g.n), k):
            if brute_is_zfs(g, frozenset(comb)):
                return k
    raise AssertionError("unreachable: the full set forces")


def brute_maximal_failed(g) -> list[frozenset[int]]:
    vertices = range(g.n)
    out = []
    for r in range(g.n + 1):
        for comb in itertools.combinations(vertices, r):
            s = frozenset(comb)
            if brute_is_zfs(g, s):
                continue
            if all(brute_is_zfs(g, s | {v}) for v in vertices if v not in s):
                out.append(s)
    return out


def brute_fort_number(g) -> int:
    forts = brute_minimal_forts(g)
    best = 0
    for r in range(len(forts), 0, -1):
        if r <= best:
            break
        for group in itertools.combinations(forts, r):
            if all(
                not (a & b) for a, b in itertools.combinations(group, 2)
            ):
                best = max(best, r)
                break
    return best


# ---------------------------------------------------------------------------
# Labeled trees via Prufer sequences, deduplicated by a center-rooted code


def prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = Counter({v: 1 for v in range(n)})
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return edges


def tree_code(n: int, edges: list[tuple[int, int]]) -> str:
    """Canonical string for a labeled free tree: AHU encoding at the center."""
    if n == 1:
        return "()"
    nbrs: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    # Peel leaves to find the one or two central vertices.
    alive = set(range(n))
    deg = {v: len(nbrs[v]) for v in alive}
    while len(alive) > 2:
        leaves = [v for v in alive if deg[v] <= 1]
        for v in leaves:
            alive.discard(v)
            for u in nbrs[v]:
                if u in alive:
                    deg[u] -= 1

    def encode(v: int, parent: int) -> str:
        parts = sorted(encode(u, v) for u in nbrs[v] if u != parent)
        return "(" + "".join(parts) + ")"

    centers = sorted(alive)
    if len(centers) == 1:
        return encode(centers[0], -1)
    a, b = centers
    return "[" + "".join(sorted([encode(a, b), encode(b, a)])) + "]"


def free_tree_codes_by_prufer(n: int) -> set[str]:
    """Codes of all free trees of order n, from every labeled tree."""
    if n == 1:
        return {tree_code(1, [])}
    if n == 2:
        return {tree_code(2, [(0, 1)])}
    codes = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        codes.add(tree_code(n, prufer_edges(seq, n)))
    return codes
