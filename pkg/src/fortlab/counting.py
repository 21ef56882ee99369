"""Exact counting laws for minimal forts of paths and spiders.

Path counts follow the Padovan-type integer recurrence a(n) = a(n-2) + a(n-3)
with the index conventions a(-1) = 1 and a(0) = 0; the recurrence seeds
a(1) = a(2) = a(3) = 1 come from brute-force enumeration of tiny paths.  The
plastic-ratio closed form (rho the real root of x^3 = x + 1) is evaluated
in extended precision and serves as a verification target for the
recurrence, not as the source of truth.

Spider counts on k >= 3 pendant paths with lengths l_1..l_k split into three
terms: forts containing the junction and none of its neighbors, forts
containing the junction and one neighbor, and forts avoiding the junction
(the "dot" count).  Leaf-append increments telescope these totals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import mpmath

from fortlab.graphs import SpiderSpec

__all__ = [
    "path_fort_count",
    "path_fort_count_closed_form",
    "plastic_ratio",
    "delta",
    "SpiderCountBreakdown",
    "spider_fort_count",
    "spider_fort_split",
    "path_as_spider_dot",
    "spider_append_increment",
    "spider_split_increment",
    "SpiderBoundReport",
    "spider_lower_bound_check",
]

# a(-1) = 1 and a(0) = 0 by convention; a(1..3) frozen from brute force.
_PATH_COUNTS: dict[int, int] = {-1: 1, 0: 0, 1: 1, 2: 1, 3: 1}


def path_fort_count(n: int) -> int:
    """Number of minimal forts of the path on n vertices (n >= -1).

    Indices -1 and 0 follow the spider-formula conventions.  Values for
    n >= 4 come from the integer recurrence a(n) = a(n-2) + a(n-3).
    """
    if n < -1:
        raise ValueError("path index must be at least -1")
    if n not in _PATH_COUNTS:
        top = max(_PATH_COUNTS)
        for i in range(top + 1, n + 1):
            _PATH_COUNTS[i] = _PATH_COUNTS[i - 2] + _PATH_COUNTS[i - 3]
    return _PATH_COUNTS[n]


def plastic_ratio(dps: int = 60) -> mpmath.mpf:
    """The real root of x^3 = x + 1 (about 1.3247), to dps significant digits."""
    with mpmath.workdps(dps):
        return mpmath.findroot(lambda x: x**3 - x - 1, mpmath.mpf("1.3247"))


def path_fort_count_closed_form(n: int, dps: int = 60) -> int:
    """Round rho^(n+4) / (2 rho + 3) to the nearest integer (n >= 1).

    Evaluated at dps digits so the rounding is unambiguous well past n = 60;
    halves would round away from zero, though none occur in the validated
    range.
    """
    if n < 1:
        raise ValueError("the closed form applies for n >= 1")
    with mpmath.workdps(dps):
        rho = mpmath.findroot(lambda x: x**3 - x - 1, mpmath.mpf("1.3247"))
        value = rho ** (n + 4) / (2 * rho + 3)
        return int(mpmath.floor(value + mpmath.mpf("0.5")))


def delta(a: int, b: int) -> int:
    """Difference of path fort counts, |F_{P_b}| - |F_{P_a}|, for -1 <= a <= b.

    Nonnegative for 0 <= a <= b.  The degenerate pair a = -1, b = 0 evaluates
    to -1 because of the index conventions; it is returned as-is (flagged
    here rather than clamped) and never arises in the spider increments.
    """
    if a < -1 or a > b:
        raise ValueError("delta needs -1 <= a <= b")
    return path_fort_count(b) - path_fort_count(a)


def _require_junction(spec: SpiderSpec) -> None:
    if spec.k < 3:
        raise ValueError("spider counting formulas need k >= 3 pendant paths")


@dataclass(frozen=True)
class SpiderCountBreakdown:
    """Minimal fort count of a spider split by junction membership.

    ring counts the forts containing the junction vertex, dot the forts
    avoiding it; total = ring + dot.
    """

    ring: int
    dot: int

    @property
    def total(self) -> int:
        return self.ring + self.dot


def _terms(lengths: tuple[int, ...]) -> tuple[int, int, int]:
    a = path_fort_count
    k = len(lengths)
    term1 = prod(a(l - 1) for l in lengths)
    term2 = sum(
        a(lengths[i] - 2) * prod(a(lengths[j] - 1) for j in range(k) if j != i)
        for i in range(k)
    )
    term3 = sum(
        a(lengths[i]) * a(lengths[j])
        for i in range(k)
        for j in range(i + 1, k)
    )
    return term1, term2, term3


def spider_fort_count(spec: SpiderSpec) -> int:
    """Number of minimal forts of the spider S_{l_1,...,l_k}, k >= 3."""
    _require_junction(spec)
    t1, t2, t3 = _terms(spec.lengths)
    return t1 + t2 + t3


def spider_fort_split(spec: SpiderSpec) -> SpiderCountBreakdown:
    """Dot/ring breakdown of the spider count: dot excludes the junction."""
    _require_junction(spec)
    t1, t2, t3 = _terms(spec.lengths)
    return SpiderCountBreakdown(ring=t1 + t2, dot=t3)


def path_as_spider_dot(l1: int, l2: int) -> int:
    """Junction-avoiding fort count of a two-path spider with lengths >= 4.

    Equals the product of the two path counts; the hypothesis l1, l2 >= 4
    matters, so shorter lengths are refused.
    """
    if l1 < 4 or l2 < 4:
        raise ValueError("the product identity needs both pendant lengths >= 4")
    return path_fort_count(l1) * path_fort_count(l2)


def spider_append_increment(spec: SpiderSpec, i: int) -> int:
    """Gain in the minimal fort count when one leaf extends pendant path i."""
    _require_junction(spec)
    if not 0 <= i < spec.k:
        raise ValueError(f"pendant path index {i} out of range")
    dot_inc, ring_inc = spider_split_increment(spec, i)
    return dot_inc + ring_inc


def spider_split_increment(spec: SpiderSpec, i: int) -> tuple[int, int]:
    """(dot increment, ring increment) when one leaf extends pendant path i.

    The two parts sum to the total append increment.
    """
    _require_junction(spec)
    if not 0 <= i < spec.k:
        raise ValueError(f"pendant path index {i} out of range")
    a = path_fort_count
    l = spec.lengths[i]
    others = [spec.lengths[j] for j in range(spec.k) if j != i]
    dot_inc = delta(l, l + 1) * sum(a(o) for o in others)
    ring_inc = delta(l - 2, l) * prod(a(o - 1) for o in others) + delta(
        l - 1, l
    ) * sum(
        a(others[x] - 2)
        * prod(a(others[y] - 1) for y in range(len(others)) if y != x)
        for x in range(len(others))
    )
    return dot_inc, ring_inc


@dataclass(frozen=True)
class SpiderBoundReport:
    """Check of the spider lower bound: count >= floor((n + 1) / 2)."""

    lengths: tuple[int, ...]
    order: int
    count: int
    bound: int

    @property
    def margin(self) -> int:
        return self.count - self.bound

    @property
    def ok(self) -> bool:
        return self.margin >= 0


def spider_lower_bound_check(spec: SpiderSpec) -> SpiderBoundReport:
    """Evaluate the floor((n + 1)/2) lower bound for a k >= 3 spider."""
    _require_junction(spec)
    n = spec.order
    count = spider_fort_count(spec)
    return SpiderBoundReport(
        lengths=spec.lengths, order=n, count=count, bound=(n + 1) // 2
    )
