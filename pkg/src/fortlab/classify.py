"""Classification of graphs against the fort-count bounds and equality cases.

All checks return report records rather than raising, so conjecture sweeps
can aggregate violations without crashing a batch.  Counts are compared in
integer arithmetic: the bound |F| >= n/3 is tested as 3*|F| >= n, and the
equality case 3*|F| = n is only possible when 3 divides n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from fortlab.counting import path_fort_count
from fortlab.forts import (
    FortFamily,
    enumerate_minimal_forts,
    fort_number,
)
from fortlab.graphs import Graph, decompose_corona_E2, is_eulerian, is_tree, to_graph6
from fortlab.zeroforcing import zero_forcing_number

__all__ = [
    "TreeBoundReport",
    "TreeEqualityClassification",
    "EulerianBoundReport",
    "ConjectureBoundReport",
    "ConjectureZfReport",
    "tree_bound_check",
    "tree_equality_classify",
    "eulerian_bound_check",
    "conjecture_bound_check",
    "conjecture_zf_check",
    "classify_row",
    "CLASSIFY_COLUMNS",
]


@dataclass(frozen=True)
class TreeBoundReport:
    n: int
    count: int

    @property
    def margin3(self) -> int:
        """3*|F| - n; the bound holds iff this is nonnegative."""
        return 3 * self.count - self.n

    @property
    def ok(self) -> bool:
        return self.margin3 >= 0


def tree_bound_check(t: Graph, family: Optional[FortFamily] = None) -> TreeBoundReport:
    """Count the minimal forts of a tree and test 3*|F| >= n."""
    if not is_tree(t):
        raise ValueError("tree bound check requires a tree")
    if family is None:
        family = enumerate_minimal_forts(t)
    return TreeBoundReport(n=t.n, count=len(family))


@dataclass(frozen=True)
class TreeEqualityClassification:
    """The three equality predicates for a tree; equivalent when 3 | n."""

    n: int
    count: int
    is_equality_case: bool
    is_corona: bool
    ft_zf_equal_n3: bool

    @property
    def consistent(self) -> bool:
        return self.is_equality_case == self.is_corona == self.ft_zf_equal_n3


def tree_equality_classify(
    t: Graph, family: Optional[FortFamily] = None
) -> TreeEqualityClassification:
    """Classify a tree against the n/3 equality characterizations.

    When 3 does not divide n all three flags are False.  The fort number is
    computed first; the zero forcing number is only needed when the packing
    already reaches n/3.
    """
    if not is_tree(t):
        raise ValueError("equality classification requires a tree")
    if family is None:
        family = enumerate_minimal_forts(t)
    n = t.n
    count = len(family)
    if n % 3:
        return TreeEqualityClassification(n, count, False, False, False)
    k = n // 3
    equality = count == k
    corona = decompose_corona_E2(t) is not None
    ft, _ = fort_number(t, family)
    if ft == k:
        zf, _ = zero_forcing_number(t, family.forts)
        ft_zf = zf == k
    else:
        ft_zf = False
    return TreeEqualityClassification(n, count, equality, corona, ft_zf)


@dataclass(frozen=True)
class EulerianBoundReport:
    n: int
    count: int
    is_cycle: bool
    cycle_dot_count: Optional[int]
    cycle_identity_ok: Optional[bool]

    @property
    def margin3(self) -> int:
        return 3 * self.count - self.n

    @property
    def ok(self) -> bool:
        bound = self.margin3 >= 0
        if self.cycle_identity_ok is not None:
            return bound and self.cycle_identity_ok
        return bound


def eulerian_bound_check(
    g: Graph, family: Optional[FortFamily] = None
) -> EulerianBoundReport:
    """Test 3*|F| >= n for an Eulerian graph.

    On pure cycles the report additionally checks that the minimal forts
    avoiding vertex 0 number exactly the fort count of the path on n-1
    vertices.
    """
    if not is_eulerian(g):
        raise ValueError("Eulerian bound check requires an Eulerian graph")
    if family is None:
        family = enumerate_minimal_forts(g)
    cyclic = g.n >= 3 and g.is_connected() and all(
        g.degree(v) == 2 for v in range(g.n)
    )
    dot = identity_ok = None
    if cyclic:
        dot = sum(1 for f in family.forts if 0 not in f)
        identity_ok = dot == path_fort_count(g.n - 1)
    return EulerianBoundReport(
        n=g.n,
        count=len(family),
        is_cycle=cyclic,
        cycle_dot_count=dot,
        cycle_identity_ok=identity_ok,
    )


@dataclass(frozen=True)
class ConjectureBoundReport:
    """Record of 3*|F| >= n for one graph; a False `ok` is a counterexample."""

    n: int
    count: int

    @property
    def margin3(self) -> int:
        return 3 * self.count - self.n

    @property
    def ok(self) -> bool:
        return self.margin3 >= 0


def conjecture_bound_check(
    g: Graph, family: Optional[FortFamily] = None
) -> ConjectureBoundReport:
    """Evaluate the general n/3 lower bound; records, never asserts."""
    if family is None:
        family = enumerate_minimal_forts(g)
    return ConjectureBoundReport(n=g.n, count=len(family))


@dataclass(frozen=True)
class ConjectureZfReport:
    """Record for the count-implies-forcing conjecture on one graph.

    When 3*|F| = n, `forward_ok` states whether zf = n/3 (a False value
    would refute the conjecture).  `converse_violation` flags graphs with
    zf = n/3 but more than n/3 minimal forts, the direction known to fail
    (the 6-cycle is the standard example).
    """

    n: int
    count: int
    zf: Optional[int]
    forward_ok: Optional[bool]
    converse_violation: bool


def conjecture_zf_check(
    g: Graph, family: Optional[FortFamily] = None
) -> ConjectureZfReport:
    """Check zf = n/3 whenever 3*|F| = n, and record converse violations."""
    if family is None:
        family = enumerate_minimal_forts(g)
    n = g.n
    count = len(family)
    if n == 0 or n % 3:
        return ConjectureZfReport(n, count, None, None, False)
    k = n // 3
    zf, _ = zero_forcing_number(g, family.forts)
    forward = (zf == k) if count == k else None
    converse = zf == k and count > k
    return ConjectureZfReport(n, count, zf, forward, converse)


# ---------------------------------------------------------------------------
# CSV classification rows

CLASSIFY_COLUMNS = (
    "graph6",
    "n",
    "m",
    "num_min_forts",
    "zf",
    "ft",
    "bound_ok",
    "equality_case",
    "corona",
    "notes",
)


def classify_row(g: Graph) -> dict:
    """One CSV row of classification data for an arbitrary graph."""
    family = enumerate_minimal_forts(g)
    count = len(family)
    zf = ft = None
    notes = []
    if g.n >= 1:
        ft, _ = fort_number(g, family)
        zf, _ = zero_forcing_number(g, family.forts)
    corona = False
    if is_tree(g):
        corona = decompose_corona_E2(g) is not None
    equality = g.n > 0 and 3 * count == g.n
    bound_ok = 3 * count >= g.n
    if zf is not None and g.n % 3 == 0 and g.n > 0 and zf * 3 == g.n and count * 3 > g.n:
        notes.append("converse-violation")
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "num_min_forts": count,
        "zf": zf,
        "ft": ft,
        "bound_ok": bound_ok,
        "equality_case": equality,
        "corona": corona,
        "notes": ";".join(notes),
    }
