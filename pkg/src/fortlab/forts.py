"""Forts and minimal-fort machinery.

A fort is a non-empty vertex subset F such that no outside vertex has
exactly one neighbor in F.  This module enumerates the inclusion-minimal
forts exactly, either by a vectorized scan over all subsets (small orders)
or by a branch-and-prune search with unit propagation (larger orders), and
builds on the family: fort-irrelevant vertices, star removals, the fort
number (maximum disjoint packing), the Hall-style matching test against a
minimum zero forcing set, and bridge constructions at fort-irrelevant
vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from fortlab.graphs import Graph, bits, mask_of, set_of, to_graph6
from fortlab.zeroforcing import zero_forcing_number, is_zero_forcing_set

__all__ = [
    "FortFamily",
    "FortLimitError",
    "StarRemovalRecord",
    "BridgeIrrelevanceReport",
    "is_fort",
    "enumerate_minimal_forts",
    "fort_irrelevant_vertices",
    "star_centers",
    "fort_number",
    "hall_matching_exists",
    "check_bridge_irrelevance",
    "DEFAULT_ORDER_LIMIT",
    "SCAN_ORDER_LIMIT",
]

DEFAULT_ORDER_LIMIT = 24
SCAN_ORDER_LIMIT = 16  # below this the plain subset scan is used
_CHUNK = 1 << 20

_ENV_LIMIT = "FORTLAB_MAX_N"


class FortLimitError(ValueError):
    """Exact enumeration refused because the order exceeds the configured cap."""


def _order_limit(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(_ENV_LIMIT)
    if env:
        return int(env)
    return DEFAULT_ORDER_LIMIT


def is_fort(g: Graph, f: Iterable[int]) -> bool:
    """True iff f is non-empty and no outside vertex has exactly one neighbor in f."""
    m = mask_of(f)
    if m & ~g.full_mask:
        raise ValueError("fort members must be vertices of the graph")
    if m == 0:
        return False
    for v in bits(g.full_mask & ~m):
        if (g.adj[v] & m).bit_count() == 1:
            return False
    return True


@dataclass(frozen=True)
class FortFamily:
    """All minimal forts of one graph, ordered by ascending bitmask."""

    graph: Graph
    forts: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.forts)

    def masks(self) -> list[int]:
        return [mask_of(f) for f in self.forts]

    def irrelevant_vertices(self) -> frozenset[int]:
        member = 0
        for m in self.masks():
            member |= m
        return set_of(self.graph.full_mask & ~member)

    def to_json_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "count": len(self.forts),
            "forts": [sorted(f) for f in self.forts],
        }


_popcount16: Optional[np.ndarray] = None


def _popcount_table() -> np.ndarray:
    global _popcount16
    if _popcount16 is None:
        counts = np.zeros(1 << 16, dtype=np.uint8)
        for b in range(16):
            counts[(np.arange(1 << 16) >> b) & 1 == 1] += 1
        _popcount16 = counts
    return _popcount16


def _scan_fort_masks(g: Graph) -> list[int]:
    """All fort bitmasks by exhaustive subset scan (vectorized, chunked)."""
    n = g.n
    table = _popcount_table()
    adj = np.array(g.adj, dtype=np.int64)
    out: list[int] = []
    total = 1 << n
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        good = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            inside = masks & adj[v]
            cnt = table[inside & 0xFFFF] + table[(inside >> 16) & 0xFFFF]
            outside = (masks >> v) & 1 == 0
            good &= ~(outside & (cnt == 1))
        found = masks[good]
        if start == 0 and found.size and found[0] == 0:
            found = found[1:]
        out.extend(int(x) for x in found)
    return out


_UNDEC, _IN, _OUT = 0, 1, 2


def _dfs_fort_masks(g: Graph) -> list[int]:
    """All fort bitmasks by include/exclude search with unit propagation.

    An OUT vertex with exactly one IN neighbor and no undecided neighbor is a
    dead branch; with one undecided neighbor the neighbor's value is forced.
    """
    n = g.n
    nbrs = [tuple(bits(row)) for row in g.adj]
    status = [_UNDEC] * n
    in_cnt = [0] * n
    und_cnt = [g.degree(v) for v in range(n)]
    in_mask = [0]
    forts: list[int] = []

    def forced_partner(u: int) -> int:
        for w in nbrs[u]:
            if status[w] == _UNDEC:
                return w
        raise AssertionError("no undecided neighbor to force")

    def out_check(u: int, queue: list) -> bool:
        a, b = in_cnt[u], und_cnt[u]
        if a == 1:
            if b == 0:
                return False
            if b == 1:
                queue.append((forced_partner(u), _IN))
        elif a == 0 and b == 1:
            queue.append((forced_partner(u), _OUT))
        return True

    def propagate(v: int, st: int, trail: list[int]) -> bool:
        queue = [(v, st)]
        while queue:
            u, s = queue.pop()
            if status[u] != _UNDEC:
                if status[u] == s:
                    continue
                return False
            status[u] = s
            trail.append(u)
            if s == _IN:
                in_mask[0] |= 1 << u
            for w in nbrs[u]:
                und_cnt[w] -= 1
                if s == _IN:
                    in_cnt[w] += 1
            for w in nbrs[u]:
                if status[w] == _OUT and not out_check(w, queue):
                    return False
            if s == _OUT and not out_check(u, queue):
                return False
        return True

    def undo(trail: list[int]) -> None:
        for u in reversed(trail):
            s = status[u]
            status[u] = _UNDEC
            if s == _IN:
                in_mask[0] &= ~(1 << u)
            for w in nbrs[u]:
                und_cnt[w] += 1
                if s == _IN:
                    in_cnt[w] -= 1

    order = sorted(range(n), key=g.degree, reverse=True)

    def dfs(idx: int) -> None:
        while idx < n and status[order[idx]] != _UNDEC:
            idx += 1
        if idx == n:
            if in_mask[0]:
                forts.append(in_mask[0])
            return
        v = order[idx]
        for st in (_IN, _OUT):
            trail: list[int] = []
            if propagate(v, st, trail):
                dfs(idx + 1)
            undo(trail)

    dfs(0)
    return forts


def _minimal_masks(fort_masks: Sequence[int]) -> list[int]:
    """Inclusion-minimal members of a list of bitmasks."""
    if not fort_masks:
        return []
    arr = np.array(
        sorted(fort_masks, key=lambda m: (m.bit_count(), m)), dtype=np.int64
    )
    alive = np.ones(arr.shape, dtype=bool)
    minimal: list[int] = []
    idx = 0
    while True:
        live = np.nonzero(alive)[0]
        if live.size == 0:
            break
        i = live[0]
        m = arr[i]
        minimal.append(int(m))
        alive[live] = (arr[live] & m) != m
    return minimal


def enumerate_minimal_forts(
    g: Graph, *, limit: Optional[int] = None, method: str = "auto"
) -> FortFamily:
    """Exactly the inclusion-minimal forts of g, ordered by ascending bitmask.

    Orders below SCAN_ORDER_LIMIT use the exhaustive subset scan; larger
    orders use the branch-and-prune search.  Orders beyond the cap (default
    24, overridable via the FORTLAB_MAX_N environment variable or `limit`)
    are refused rather than silently attempted.
    """
    cap = _order_limit(limit)
    if g.n > cap:
        raise FortLimitError(
            f"exact fort enumeration refused for n = {g.n} > cap {cap}"
        )
    if method == "auto":
        method = "scan" if g.n < SCAN_ORDER_LIMIT else "dfs"
    if method == "scan":
        masks = _scan_fort_masks(g)
    elif method == "dfs":
        masks = _dfs_fort_masks(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    minimal = sorted(_minimal_masks(masks))
    return FortFamily(g, tuple(set_of(m) for m in minimal))


def fort_irrelevant_vertices(g: Graph, family: Optional[FortFamily] = None) -> frozenset[int]:
    """Vertices that belong to no minimal fort."""
    if family is None:
        family = enumerate_minimal_forts(g)
    return family.irrelevant_vertices()


# ---------------------------------------------------------------------------
# Star removals


@dataclass(frozen=True)
class StarRemovalRecord:
    """Layers of star centers and the orders of the residual graphs.

    layers[i] holds the vertices with at least two leaf neighbors in the
    i-th residual graph; residual_orders[i] is the order after removing
    those vertices together with their leaf neighbors.
    """

    layers: tuple[frozenset[int], ...]
    residual_orders: tuple[int, ...]

    def centers(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for layer in self.layers:
            out |= layer
        return out


def star_centers(g: Graph) -> StarRemovalRecord:
    """Iterated star removal: strip every vertex with >= 2 leaf neighbors.

    Vertex ids refer to the original graph throughout.
    """
    alive = g.full_mask
    layers: list[frozenset[int]] = []
    orders: list[int] = []
    while True:
        deg = {v: (g.adj[v] & alive).bit_count() for v in bits(alive)}
        leaves = mask_of(v for v, d in deg.items() if d == 1)
        removal = 0
        centers = []
        for v in bits(alive):
            leaf_nbrs = g.adj[v] & leaves
            if leaf_nbrs.bit_count() >= 2:
                centers.append(v)
                removal |= leaf_nbrs | (1 << v)
        if not centers:
            break
        alive &= ~removal
        layers.append(frozenset(centers))
        orders.append(alive.bit_count())
    return StarRemovalRecord(tuple(layers), tuple(orders))


# ---------------------------------------------------------------------------
# Fort number (maximum disjoint packing)


def fort_number(
    g: Graph, family: Optional[FortFamily] = None
) -> tuple[int, tuple[frozenset[int], ...]]:
    """Largest number of pairwise-disjoint minimal forts, with one witness."""
    if family is None:
        family = enumerate_minimal_forts(g)
    masks = sorted(family.masks(), key=lambda m: (m.bit_count(), m))
    best: list[int] = []

    def dfs(cands: list[int], acc: list[int]) -> None:
        nonlocal best
        if len(acc) > len(best):
            best = acc.copy()
        if not cands or len(acc) + len(cands) <= len(best):
            return
        first = cands[0]
        dfs([c for c in cands[1:] if not c & first], acc + [first])
        dfs(cands[1:], acc)

    dfs(masks, [])
    return len(best), tuple(set_of(m) for m in sorted(best))


# ---------------------------------------------------------------------------
# Matching a minimum zero forcing set onto the fort family


def hall_matching_exists(
    g: Graph, s: frozenset[int], family: Optional[FortFamily] = None
) -> tuple[bool, Optional[dict[frozenset[int], int]]]:
    """Test for a matching that saturates the minimal forts inside s.

    The bipartite graph joins each minimal fort F to the vertices of
    s that lie in F.  The precondition that s is a *minimum* zero forcing
    set is validated by recomputing the zero forcing number.
    """
    if family is None:
        family = enumerate_minimal_forts(g)
    if not is_zero_forcing_set(g, s):
        raise ValueError("s is not a zero forcing set")
    zf, _ = zero_forcing_number(g, family.forts)
    if len(s) != zf:
        raise ValueError(f"s has size {len(s)} but the zero forcing number is {zf}")
    verts = sorted(s)
    masks = family.masks()
    adjacency = [
        [i for i, v in enumerate(verts) if (m >> v) & 1] for m in masks
    ]
    match_of_vertex: list[Optional[int]] = [None] * len(verts)

    def augment(fort_idx: int, seen: set[int]) -> bool:
        for i in adjacency[fort_idx]:
            if i in seen:
                continue
            seen.add(i)
            if match_of_vertex[i] is None or augment(match_of_vertex[i], seen):
                match_of_vertex[i] = fort_idx
                return True
        return False

    matched = 0
    for f in range(len(masks)):
        if augment(f, set()):
            matched += 1
    if matched < len(masks):
        return False, None
    witness = {}
    for i, f in enumerate(match_of_vertex):
        if f is not None:
            witness[family.forts[f]] = verts[i]
    return True, witness


# ---------------------------------------------------------------------------
# Bridging at fort-irrelevant vertices


@dataclass(frozen=True)
class BridgeIrrelevanceReport:
    """Outcome of bridging two graphs at a fort-irrelevant vertex.

    The joint graph keeps g1's labels and shifts g2's by g1.n.  When v2 is
    also fort-irrelevant in g2, the additivity of the minimal fort counts is
    checked as well; those fields stay None otherwise.
    """

    graph: Graph
    v1: int
    v2: int
    v1_irrelevant: bool
    v2_irrelevant: Optional[bool]
    count_additive: Optional[bool]
    joint_count: int
    count1: int
    count2: int
    offending: tuple[frozenset[int], ...]

    @property
    def ok(self) -> bool:
        checks = [self.v1_irrelevant]
        if self.v2_irrelevant is not None:
            checks.append(self.v2_irrelevant)
        if self.count_additive is not None:
            checks.append(self.count_additive)
        return all(checks)


def check_bridge_irrelevance(
    g1: Graph, v1: int, g2: Graph, v2: int
) -> BridgeIrrelevanceReport:
    """Join g1 and g2 by the bridge {v1, v2} and audit fort irrelevance.

    Requires both graphs connected and v1 fort-irrelevant in g1.  Reports
    whether v1 (and v2, when it was fort-irrelevant in g2) stays
    fort-irrelevant in the joint graph, and whether the minimal fort count
    is additive in the doubly-irrelevant case.
    """
    if not (g1.is_connected() and g2.is_connected()):
        raise ValueError("bridging is defined for connected graphs")
    fam1 = enumerate_minimal_forts(g1)
    fam2 = enumerate_minimal_forts(g2)
    if v1 not in fam1.irrelevant_vertices():
        raise ValueError(f"vertex {v1} is not fort-irrelevant in the first graph")
    v2_was_irrelevant = v2 in fam2.irrelevant_vertices()
    edges = g1.edges()
    edges.extend((u + g1.n, w + g1.n) for u, w in g2.edges())
    edges.append((v1, v2 + g1.n))
    joint = Graph.from_edges(g1.n + g2.n, edges)
    fam = enumerate_minimal_forts(joint)
    irrelevant = fam.irrelevant_vertices()
    v2_joint = v2 + g1.n
    v1_ok = v1 in irrelevant
    offending = tuple(f for f in fam.forts if v1 in f)
    v2_ok: Optional[bool] = None
    additive: Optional[bool] = None
    if v2_was_irrelevant:
        v2_ok = v2_joint in irrelevant
        offending += tuple(f for f in fam.forts if v2_joint in f)
        additive = len(fam) == len(fam1) + len(fam2)
    return BridgeIrrelevanceReport(
        graph=joint,
        v1=v1,
        v2=v2_joint,
        v1_irrelevant=v1_ok,
        v2_irrelevant=v2_ok,
        count_additive=additive,
        joint_count=len(fam),
        count1=len(fam1),
        count2=len(fam2),
        offending=offending,
    )
