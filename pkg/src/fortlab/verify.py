"""Batch verification suites over generated or piped graph streams.

Every suite maps a list of work items (graph6 lines, orders, or pendant
length lists) through a pure per-item worker that returns one report row.
Rows keep a uniform schema so the CSV writer and the exit-code contract
stay simple: a run is clean iff no row has ok = false.  Items are processed
in a deterministic order and results are merged in input order, so reports
are byte-identical across worker counts.
"""

from __future__ import annotations

import csv
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from fortlab import classify as cls
from fortlab import counting as cnt
from fortlab.forts import (
    enumerate_minimal_forts,
    fort_irrelevant_vertices,
    fort_number,
    hall_matching_exists,
    star_centers,
)
from fortlab.graphs import (
    Graph,
    Graph6Error,
    SpiderSpec,
    bits,
    build_spider,
    cycle_graph,
    eulerian_graphs,
    from_graph6,
    generate_trees,
    is_eulerian,
    is_tree,
    nonisomorphic_graphs,
    path_graph,
    to_graph6,
)
from fortlab.zeroforcing import closure_mask, zero_forcing_number

__all__ = ["VerificationReport", "run_suite", "suite_names", "SUITES"]

REPORT_COLUMNS = ("item", "n", "m", "num_min_forts", "zf", "ft", "ok", "notes")


@dataclass
class VerificationReport:
    suite: str
    rows: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    columns: tuple[str, ...] = REPORT_COLUMNS

    @property
    def violations(self) -> int:
        return sum(1 for row in self.rows if not row["ok"])

    def write_csv(self, stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_cell(row.get(c)) for c in self.columns])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _row(item: str, ok: bool, notes: str = "", **extra) -> dict:
    row = {c: None for c in REPORT_COLUMNS}
    row.update(item=item, ok=ok, notes=notes)
    row.update(extra)
    return row


def _decode(item: str) -> Graph:
    return from_graph6(item)


# ---------------------------------------------------------------------------
# Workers (top-level functions so multiprocessing can pickle them)


def _paths_worker(item: str) -> dict:
    n = int(item)
    count = cnt.path_fort_count(n)
    closed = cnt.path_fort_count_closed_form(n)
    notes = []
    ok = True
    if count != closed:
        ok = False
        notes.append(f"closed-form={closed}")
    if 3 * count < n:
        ok = False
        notes.append("bound-violated")
    if n <= 16:
        brute = len(enumerate_minimal_forts(path_graph(n)))
        if brute != count:
            ok = False
            notes.append(f"brute={brute}")
        else:
            notes.append("brute-checked")
    return _row(item, ok, ";".join(notes), n=n, m=max(n - 1, 0), num_min_forts=count)


def _spiders_worker(item: str) -> dict:
    lengths = tuple(int(x) for x in item.split(","))
    spec = SpiderSpec(lengths)
    g = build_spider(spec)
    family = enumerate_minimal_forts(g)
    split = cnt.spider_fort_split(spec)
    dot = sum(1 for f in family.forts if 0 not in f)
    bound = cnt.spider_lower_bound_check(spec)
    notes = []
    ok = True
    if len(family) != split.total:
        ok = False
        notes.append(f"formula={split.total},oracle={len(family)}")
    if dot != split.dot:
        ok = False
        notes.append(f"dot-formula={split.dot},oracle={dot}")
    if not bound.ok:
        ok = False
        notes.append("bound-violated")
    return _row(
        item, ok, ";".join(notes), n=g.n, m=g.m, num_min_forts=len(family)
    )


def _trees_bound_worker(item: str) -> dict:
    g = _decode(item)
    if not is_tree(g):
        return _row(item, True, "skipped:not-a-tree", n=g.n, m=g.m)
    report = cls.tree_bound_check(g)
    return _row(
        item,
        report.ok,
        "" if report.ok else f"margin3={report.margin3}",
        n=g.n,
        m=g.m,
        num_min_forts=report.count,
    )


def _trees_equality_worker(item: str) -> dict:
    g = _decode(item)
    if not is_tree(g):
        return _row(item, True, "skipped:not-a-tree", n=g.n, m=g.m)
    c = cls.tree_equality_classify(g)
    notes = []
    if not c.consistent:
        notes.append(
            f"count={c.is_equality_case},corona={c.is_corona},ftzf={c.ft_zf_equal_n3}"
        )
    if c.is_equality_case:
        notes.append("equality-case")
    return _row(
        item, c.consistent, ";".join(notes), n=g.n, m=g.m, num_min_forts=c.count
    )


def _star_centers_worker(item: str) -> dict:
    g = _decode(item)
    if not is_tree(g):
        return _row(item, True, "skipped:not-a-tree", n=g.n, m=g.m)
    family = enumerate_minimal_forts(g)
    centers = star_centers(g).centers()
    irrelevant = fort_irrelevant_vertices(g, family)
    ok = centers == irrelevant
    notes = "" if ok else f"centers={sorted(centers)},irrelevant={sorted(irrelevant)}"
    return _row(item, ok, notes, n=g.n, m=g.m, num_min_forts=len(family))


def _duality_worker(item: str) -> dict:
    g = _decode(item)
    family = enumerate_minimal_forts(g)
    masks = family.masks()
    full = g.full_mask
    forcing = [closure_mask(g, m) == full for m in range(full + 1)]
    complements = sorted(full & ~m for m in _maximal_failed(g, forcing))
    duality_ok = complements == sorted(masks)
    law_ok = all(
        forcing[m] == all(m & f for f in masks) for m in range(full + 1)
    )
    ft, _ = fort_number(g, family)
    zf, _ = zero_forcing_number(g, family.forts)
    chain_ok = ft <= zf <= len(family)
    notes = []
    if not duality_ok:
        notes.append("complement-duality")
    if not law_ok:
        notes.append("set-cover-law")
    if not chain_ok:
        notes.append(f"chain ft={ft},zf={zf},F={len(family)}")
    ok = duality_ok and law_ok and chain_ok
    return _row(
        item, ok, ";".join(notes), n=g.n, m=g.m,
        num_min_forts=len(family), zf=zf, ft=ft,
    )


def _maximal_failed(g: Graph, forcing: list[bool]) -> list[int]:
    full = g.full_mask
    out = []
    for m in range(full + 1):
        if forcing[m]:
            continue
        if all(forcing[m | (1 << v)] for v in bits(full & ~m)):
            out.append(m)
    return out


def _matching_worker(item: str) -> dict:
    g = _decode(item)
    family = enumerate_minimal_forts(g)
    zf, witness = zero_forcing_number(g, family.forts)
    exists, _ = hall_matching_exists(g, witness, family)
    ok = exists == (len(family) == zf)
    # The packing consequence: equal count and forcing number forces ft too.
    ft, _ = fort_number(g, family)
    if len(family) == zf and ft != len(family):
        ok = False
    notes = "" if ok else f"matching={exists},F={len(family)},zf={zf},ft={ft}"
    return _row(
        item, ok, notes, n=g.n, m=g.m, num_min_forts=len(family), zf=zf, ft=ft
    )


def _eulerian_worker(item: str) -> dict:
    g = _decode(item)
    if not is_eulerian(g):
        return _row(item, True, "skipped:not-eulerian", n=g.n, m=g.m)
    report = cls.eulerian_bound_check(g)
    notes = []
    if report.margin3 < 0:
        notes.append(f"margin3={report.margin3}")
    if report.is_cycle:
        notes.append(
            f"cycle-dot={report.cycle_dot_count}"
            if report.cycle_identity_ok
            else f"cycle-identity dot={report.cycle_dot_count}"
        )
    return _row(
        item, report.ok, ";".join(notes), n=g.n, m=g.m, num_min_forts=report.count
    )


def _conjecture_worker(item: str) -> dict:
    g = _decode(item)
    family = enumerate_minimal_forts(g)
    bound = cls.conjecture_bound_check(g, family)
    zfr = cls.conjecture_zf_check(g, family)
    ok = bound.ok and zfr.forward_ok is not False
    notes = []
    if not bound.ok:
        notes.append("bound-counterexample")
    if zfr.forward_ok is False:
        notes.append("zf-conjecture-counterexample")
    if zfr.converse_violation:
        notes.append("converse-violation")
    return _row(
        item, ok, ";".join(notes), n=g.n, m=g.m,
        num_min_forts=len(family), zf=zfr.zf,
    )


# ---------------------------------------------------------------------------
# Item builders


def _tree_items(max_n: int) -> list[str]:
    return [to_graph6(t) for n in range(1, max_n + 1) for t in generate_trees(n)]


def _equality_tree_items(max_n: int) -> list[str]:
    return [
        to_graph6(t)
        for n in range(3, max_n + 1, 3)
        for t in generate_trees(n)
    ]


def _connected_graph_items(max_n: int) -> list[str]:
    return [
        to_graph6(g)
        for n in range(1, max_n + 1)
        for g in nonisomorphic_graphs(n)
        if g.is_connected()
    ]


def _all_graph_items(max_n: int) -> list[str]:
    return [
        to_graph6(g) for n in range(1, max_n + 1) for g in nonisomorphic_graphs(n)
    ]


def _eulerian_items(max_n: int) -> list[str]:
    items = [
        to_graph6(g) for n in range(1, max_n + 1) for g in eulerian_graphs(n)
    ]
    # Cycle identity coverage beyond the sweep range.
    for n in range(max(3, max_n + 1), 13):
        items.append(to_graph6(cycle_graph(n)))
    return items


def _path_items(max_n: int) -> list[str]:
    return [str(n) for n in range(1, max_n + 1)]


def _spider_items(max_n: int) -> list[str]:
    items = []
    for n in range(4, max_n + 1):
        for k in range(3, n):
            for comp in _compositions(n - 1, k):
                items.append(",".join(map(str, comp)))
    return items


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    default_max_n: int
    hard_max_n: int
    items: Callable[[int], list[str]]
    worker: Callable[[str], dict]
    graph_stream: bool  # whether --stream graph6 input may replace the items


SUITES: dict[str, SuiteSpec] = {
    s.name: s
    for s in [
        SuiteSpec("paths-formula", 60, 200, _path_items, _paths_worker, False),
        SuiteSpec("spiders-formula", 13, 16, _spider_items, _spiders_worker, False),
        SuiteSpec("trees-bound", 14, 18, _tree_items, _trees_bound_worker, True),
        SuiteSpec(
            "trees-equality", 15, 18, _equality_tree_items, _trees_equality_worker, True
        ),
        SuiteSpec("star-centers", 14, 18, _tree_items, _star_centers_worker, True),
        SuiteSpec("duality", 8, 9, _connected_graph_items, _duality_worker, True),
        SuiteSpec(
            "matching-lemma", 7, 8, _connected_graph_items, _matching_worker, True
        ),
        SuiteSpec("eulerian-bound", 9, 10, _eulerian_items, _eulerian_worker, True),
        SuiteSpec(
            "conjecture-graphs", 8, 10, _all_graph_items, _conjecture_worker, True
        ),
    ]
}


def suite_names() -> list[str]:
    return sorted(SUITES)


def _safe_worker(args: tuple[Callable[[str], dict], str]) -> dict:
    worker, item = args
    try:
        return worker(item)
    except Graph6Error as exc:
        return _row(item, False, f"graph6-error:{exc}")


def run_suite(
    name: str,
    max_n: Optional[int] = None,
    jobs: int = 1,
    stream: Optional[Iterable[str]] = None,
) -> VerificationReport:
    """Run one named suite and return its report.

    `stream` supplies graph6 lines in place of the internal generators for
    the graph-based suites; inapplicable graphs are skipped with a note and
    undecodable lines become violations.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {suite_names()}")
    spec = SUITES[name]
    bound = spec.default_max_n if max_n is None else max_n
    if bound > spec.hard_max_n:
        raise ValueError(
            f"suite {name} is capped at max_n = {spec.hard_max_n} (asked {bound})"
        )
    if stream is not None:
        if not spec.graph_stream:
            raise ValueError(f"suite {name} does not accept a graph stream")
        items = [line.strip() for line in stream if line.strip()]
    else:
        items = spec.items(bound)
    start = time.perf_counter()
    payload = [(spec.worker, item) for item in items]
    if jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_safe_worker, payload, chunksize=64)
    else:
        rows = [_safe_worker(p) for p in payload]
    elapsed = time.perf_counter() - start
    return VerificationReport(suite=name, rows=rows, elapsed=elapsed)
