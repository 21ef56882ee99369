"""Zero forcing under the standard color change rule.

A gray vertex forces its unique white neighbor; a set whose closure is the
whole vertex set is a zero forcing set (ZFS), otherwise a failed ZFS.  The
empty set is treated as a failed ZFS for n >= 1: it forces nothing, so its
closure is empty.

`closure_mask` is the bitmask fast path used by the verification sweeps;
the frozenset API wraps it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from fortlab.graphs import Graph, bits, is_tree, mask_of, set_of

__all__ = [
    "ForcingTrace",
    "closure",
    "closure_mask",
    "is_zero_forcing_set",
    "is_failed_zfs",
    "is_maximal_failed_zfs",
    "zero_forcing_number",
    "minimal_zero_forcing_sets",
    "zero_forcing_irrelevant_vertices",
    "minimum_path_cover_tree",
    "MINIMAL_ZFS_ORDER_LIMIT",
]

MINIMAL_ZFS_ORDER_LIMIT = 16


@dataclass(frozen=True)
class ForcingTrace:
    """One run of the color change rule to its fixed point.

    `forces` lists (forcer, forced) pairs in application order; replaying
    them from `initial` is valid (each forced vertex is the forcer's unique
    white neighbor at that moment) and ends at `final`.
    """

    initial: frozenset[int]
    forces: tuple[tuple[int, int], ...]
    final: frozenset[int]


def closure_mask(g: Graph, gray: int) -> int:
    """Fixed point of the standard rule starting from the gray bitmask."""
    adj = g.adj
    full = g.full_mask
    changed = True
    while changed and gray != full:
        changed = False
        remaining = gray
        while remaining:
            low = remaining & -remaining
            remaining ^= low
            u = low.bit_length() - 1
            white = adj[u] & ~gray
            if white and not white & (white - 1):
                gray |= white
                changed = True
    return gray


def closure(g: Graph, s: frozenset[int]) -> ForcingTrace:
    """Run the color change rule from s and record the forcing trace.

    The fixed point is independent of force order; the recorded order scans
    gray vertices by ascending id, restarting after each completed pass.
    """
    gray = mask_of(s)
    adj = g.adj
    full = g.full_mask
    forces: list[tuple[int, int]] = []
    changed = True
    while changed and gray != full:
        changed = False
        remaining = gray
        while remaining:
            low = remaining & -remaining
            remaining ^= low
            u = low.bit_length() - 1
            white = adj[u] & ~gray
            if white and not white & (white - 1):
                v = white.bit_length() - 1
                forces.append((u, v))
                gray |= white
                changed = True
    return ForcingTrace(frozenset(s), tuple(forces), set_of(gray))


def is_zero_forcing_set(g: Graph, s: frozenset[int]) -> bool:
    return closure_mask(g, mask_of(s)) == g.full_mask


def is_failed_zfs(g: Graph, s: frozenset[int]) -> bool:
    return closure_mask(g, mask_of(s)) != g.full_mask


def is_maximal_failed_zfs(g: Graph, s: frozenset[int]) -> bool:
    """True iff s is failed but every proper superset forces the whole graph.

    It suffices to check one-vertex extensions: forcing is monotone under
    taking supersets.
    """
    m = mask_of(s)
    full = g.full_mask
    if closure_mask(g, m) == full:
        return False
    outside = full & ~m
    return all(closure_mask(g, m | (1 << v)) == full for v in bits(outside))


def _greedy_disjoint(fort_masks: Sequence[int], blocked: int, cap: int) -> int:
    """Greedy count of pairwise-disjoint forts avoiding `blocked`, up to cap."""
    taken = blocked
    count = 0
    for f in fort_masks:
        if not f & taken:
            taken |= f
            count += 1
            if count >= cap:
                break
    return count


def zero_forcing_number(
    g: Graph, fort_family: Optional[Sequence[frozenset[int]]] = None
) -> tuple[int, frozenset[int]]:
    """Exact zero forcing number with one minimum witness set.

    Searches subset cardinalities in increasing order.  Candidates are
    restricted to transversals of the minimal forts, which is sound because
    a set that misses a fort entirely can never force into it; every
    candidate is still verified by closure, so no reverse implication is
    assumed.
    """
    if g.n < 1:
        raise ValueError("zero forcing number needs at least one vertex")
    if fort_family is None:
        from fortlab.forts import enumerate_minimal_forts

        fort_family = enumerate_minimal_forts(g).forts
    fort_masks = sorted((mask_of(f) for f in fort_family), key=lambda m: m.bit_count())
    full = g.full_mask
    lower = max(1, _greedy_disjoint(fort_masks, 0, g.n))

    def covers_all(chosen: int) -> Optional[int]:
        for f in fort_masks:
            if not f & chosen:
                return f
        return None

    def dfs(chosen: int, count: int, budget: int, excluded: int) -> Optional[int]:
        uncovered = covers_all(chosen)
        if uncovered is None:
            if closure_mask(g, chosen) == full:
                return chosen
            # Covering every minimal fort without forcing would contradict
            # the set-cover law; pad defensively rather than assume it.
            rest = list(bits(full & ~chosen))
            for extra in combinations(rest, budget - count):
                padded = chosen | mask_of(extra)
                if closure_mask(g, padded) == full:
                    return padded
            return None
        if count >= budget:
            return None
        if _greedy_disjoint(fort_masks, chosen, budget - count + 1) > budget - count:
            return None
        for v in bits(uncovered & ~excluded):
            found = dfs(chosen | (1 << v), count + 1, budget, excluded)
            if found is not None:
                return found
            excluded |= 1 << v
        return None

    for k in range(lower, g.n + 1):
        witness = dfs(0, 0, k, 0)
        if witness is not None:
            return witness.bit_count(), set_of(witness)
    raise AssertionError("the full vertex set always forces")


def minimal_zero_forcing_sets(g: Graph) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal zero forcing sets (exhaustive scan, n <= 16)."""
    if g.n > MINIMAL_ZFS_ORDER_LIMIT:
        raise ValueError(
            f"minimal ZFS enumeration is capped at n = {MINIMAL_ZFS_ORDER_LIMIT}"
        )
    full = g.full_mask
    forcing = [closure_mask(g, m) == full for m in range(full + 1)]
    out = []
    for m in range(1, full + 1):
        if forcing[m] and all(not forcing[m & ~(1 << v)] for v in bits(m)):
            out.append(set_of(m))
    return tuple(out)


def zero_forcing_irrelevant_vertices(g: Graph) -> frozenset[int]:
    """Vertices that belong to no inclusion-minimal zero forcing set."""
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    member = 0
    for s in minimal_zero_forcing_sets(g):
        member |= mask_of(s)
    return set_of(g.full_mask & ~member)


def minimum_path_cover_tree(t: Graph) -> list[list[int]]:
    """Minimum vertex-disjoint path cover of a tree.

    Extracted from the forcing chains of an exact minimum zero forcing set:
    each initial vertex heads one chain, so the cover size equals the zero
    forcing number.
    """
    if not is_tree(t):
        raise ValueError("path cover extraction requires a tree")
    _, witness = zero_forcing_number(t)
    trace = closure(t, witness)
    succ = dict(trace.forces)
    paths = []
    for head in sorted(witness):
        path = [head]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        paths.append(path)
    return paths
