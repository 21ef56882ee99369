"""Simple undirected graphs on vertex ids 0..n-1, plus codecs and generators.

Graphs are immutable: adjacency is a tuple of integer bitmasks, one per
vertex, which keeps subset arithmetic cheap for the exhaustive fort and
zero-forcing searches.  Vertex subsets cross the public API as frozensets
of ints; the mask helpers below convert in and out.

The module also houses the graph6 codec (interoperable with nauty/geng
output), deterministic generators for free trees and for all small graphs
up to isomorphism, spider and corona constructions, and the Eulerian
machinery (cycle decompositions, vertex sums).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

__all__ = [
    "Graph",
    "Graph6Error",
    "SpiderSpec",
    "CycleDecomposition",
    "bits",
    "mask_of",
    "set_of",
    "from_graph6",
    "to_graph6",
    "canonical_graph6",
    "iter_graph6",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "build_spider",
    "corona_E2",
    "decompose_corona_E2",
    "vertex_sum",
    "is_tree",
    "is_eulerian",
    "cycle_decomposition",
    "canonical_form",
    "is_isomorphic",
    "relabel",
    "generate_trees",
    "nonisomorphic_graphs",
    "even_degree_graphs",
    "eulerian_graphs",
    "MAX_TREE_ORDER",
]

MAX_TREE_ORDER = 18


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of an integer mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: order `n` and one adjacency bitmask per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal the order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return set_of(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                grow = 0
                for u in bits(frontier):
                    grow |= self.adj[u]
                frontier = grow & ~comp
                comp |= grow
            seen |= comp
            out.append(set_of(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeling the given vertices 0..k-1 in ascending order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.adj[v]):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), tuple(rows))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Image of g under a permutation: vertex v becomes perm[v]."""
    perm = list(perm)
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Standard families


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@dataclass(frozen=True)
class SpiderSpec:
    """Pendant lengths (l_1, ..., l_k) of a spider; k = 2 encodes a path."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if len(self.lengths) < 2:
            raise ValueError("a spider needs at least two pendant paths")
        if any(l < 1 for l in self.lengths):
            raise ValueError("pendant lengths must be positive")

    @property
    def k(self) -> int:
        return len(self.lengths)

    @property
    def order(self) -> int:
        return 1 + sum(self.lengths)


def build_spider(spec: SpiderSpec) -> Graph:
    """Spider graph with central vertex 0 and pendant paths labeled consecutively.

    For k = 2 this is a path graph of order l_1 + l_2 + 1 with the junction
    role played by vertex 0.
    """
    edges = []
    nxt = 1
    for length in spec.lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(spec.order, edges)


def corona_E2(h: Graph) -> Graph:
    """Attach two new pendant leaves to every vertex of the tree h.

    Vertex i of h keeps its id; its leaves are h.n + 2i and h.n + 2i + 1.
    """
    if not is_tree(h):
        raise ValueError("corona base must be a tree")
    edges = h.edges()
    for v in range(h.n):
        edges.append((v, h.n + 2 * v))
        edges.append((v, h.n + 2 * v + 1))
    return Graph.from_edges(3 * h.n, edges)


def decompose_corona_E2(t: Graph) -> Optional[Graph]:
    """Recover the base tree H when t is H with two leaves hung on every vertex.

    Returns None when t has no such decomposition.  The base tree is returned
    on labels 0..k-1 assigned to the internal vertices in ascending original id.
    """
    if not is_tree(t):
        raise ValueError("corona decomposition is defined for trees")
    n = t.n
    if n == 0 or n % 3:
        return None
    k = n // 3
    internal = [v for v in range(n) if t.degree(v) >= 2]
    if len(internal) != k:
        return None
    for v in internal:
        leaf_nbrs = sum(1 for u in bits(t.adj[v]) if t.degree(u) == 1)
        if leaf_nbrs != 2:
            return None
    h = t.induced(internal)
    if h.m != k - 1:
        return None
    return h


def vertex_sum(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Join two graphs by identifying v1 with v2 into a single vertex.

    g1 keeps its labels; the surviving vertices of g2 get n1, n1+1, ... in
    ascending original id, and v2 collapses onto v1.
    """
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise ValueError("vertex out of range")
    mapping = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            mapping[v] = v1
        else:
            mapping[v] = nxt
            nxt += 1
    edges = g1.edges()
    edges.extend((mapping[u], mapping[v]) for u, v in g2.edges())
    return Graph.from_edges(g1.n + g2.n - 1, edges)


# ---------------------------------------------------------------------------
# Structural predicates


def is_tree(g: Graph) -> bool:
    """True iff g is connected with exactly n - 1 edges (n = 0 is not a tree)."""
    return g.n > 0 and g.is_connected() and g.m == g.n - 1


def is_eulerian(g: Graph) -> bool:
    """True iff every degree is even and all edges lie in one connected component."""
    if any(g.degree(v) % 2 for v in range(g.n)):
        return False
    with_edges = [c for c in g.components() if any(g.degree(v) for v in c)]
    return len(with_edges) <= 1


@dataclass(frozen=True)
class CycleDecomposition:
    """Edge-disjoint cycles whose union is the whole edge set."""

    cycles: tuple[tuple[int, ...], ...]


def cycle_decomposition(g: Graph) -> CycleDecomposition:
    """Partition the edges of an Eulerian graph into edge-disjoint cycles."""
    if not is_eulerian(g):
        raise ValueError("cycle decomposition requires an Eulerian graph")
    remaining = list(g.adj)
    cycles = []
    for start in range(g.n):
        while remaining[start]:
            # With all remaining degrees even, a walk that never reuses its
            # entering edge can only stall by closing a cycle.
            path = [start]
            index = {start: 0}
            prev, u = -1, start
            while True:
                nbrs = remaining[u]
                if prev >= 0:
                    nbrs &= ~(1 << prev)
                w = (nbrs & -nbrs).bit_length() - 1
                if w in index:
                    cycle = path[index[w]:]
                    break
                index[w] = len(path)
                path.append(w)
                prev, u = u, w
            edge_pairs = list(zip(cycle, cycle[1:] + cycle[:1]))
            for a, b in edge_pairs:
                remaining[a] &= ~(1 << b)
                remaining[b] &= ~(1 << a)
            cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


# ---------------------------------------------------------------------------
# graph6 codec (format of McKay's nauty suite, one graph per line)


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the optional `>>graph6<<` prefix and both the single-byte and the
    multi-byte order encodings.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte", exc.start) from None
    if not data:
        raise Graph6Error("empty graph6 string", 0)

    def data_value(pos: int) -> int:
        b = data[pos]
        if not 63 <= b <= 126:
            raise Graph6Error("byte outside graph6 alphabet", pos)
        return b - 63

    if data[0] == 126:  # '~'
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated order field", len(data))
            n = 0
            for pos in range(2, 8):
                n = (n << 6) | data_value(pos)
            off = 8
        else:
            if len(data) < 4:
                raise Graph6Error("truncated order field", len(data))
            n = 0
            for pos in range(1, 4):
                n = (n << 6) | data_value(pos)
            off = 4
    elif 63 <= data[0] <= 125:
        n = data[0] - 63
        off = 1
    else:
        raise Graph6Error("malformed header byte", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off < nbytes:
        raise Graph6Error("truncated bit stream", len(data))
    if len(data) - off > nbytes:
        raise Graph6Error("trailing garbage", off + nbytes)

    rows = [0] * n
    # Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    values = (
        (data_value(pos) >> shift) & 1
        for pos in range(off, off + nbytes)
        for shift in range(5, -1, -1)
    )
    for (i, j), bit in zip(pairs, values):
        if bit:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


_G6_ORDER_LIMIT = 68719476735  # largest order the 8-byte form can carry


def to_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    elif n <= _G6_ORDER_LIMIT:
        head = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    else:
        raise ValueError("order exceeds graph6 encoder limit")
    body = []
    value, filled = 0, 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | ((g.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                body.append(value + 63)
                value, filled = 0, 0
    if filled:
        body.append((value << (6 - filled)) + 63)
    return bytes(head + body).decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode an iterable of graph6 lines, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield from_graph6(line)


# ---------------------------------------------------------------------------
# Canonical forms (degree refinement plus backtracking; fine for n <= ~10)


def _canonical_rows(n: int, adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    if n == 0:
        return (0, ())
    nbrs = [tuple(bits(row)) for row in adj]
    best: Optional[tuple[int, ...]] = None

    def refine(colors: list[int]) -> list[int]:
        while True:
            keys = []
            for v in range(n):
                around = sorted(colors[u] for u in nbrs[v])
                keys.append((colors[v], tuple(around)))
            rank = {key: r for r, key in enumerate(sorted(set(keys)))}
            new = [rank[key] for key in keys]
            if new == colors:
                return colors
            colors = new

    def leaf(colors: list[int]) -> tuple[int, ...]:
        order = sorted(range(n), key=colors.__getitem__)
        pos = [0] * n
        for r, v in enumerate(order):
            pos[v] = r
        return tuple(mask_of(pos[u] for u in nbrs[v]) for v in order)

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        # The cell choice must be isomorphism-invariant: smallest size,
        # ties broken by smallest color rank.
        target = None
        size = n + 1
        for color in sorted(cells):
            members = cells[color]
            if 1 < len(members) < size:
                target, size = members, len(members)
        if target is None:
            cert = leaf(colors)
            if best is None or cert < best:
                best = cert
            return
        for v in target:
            branched = [2 * c for c in colors]
            branched[v] -= 1
            search(refine(branched))

    search(refine([0] * n))
    assert best is not None
    return (n, best)


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Certificate (n, adjacency rows under a canonical labeling).

    Two graphs are isomorphic iff their certificates are equal.  The search
    individualizes vertices of the smallest unresolved refinement cell and
    keeps the lexicographically least relabeled adjacency.
    """
    return _canonical_rows(g.n, g.adj)


def canonical_graph6(g: Graph) -> str:
    """graph6 encoding of the canonical relabeling; equal iff isomorphic."""
    n, rows = canonical_form(g)
    return to_graph6(Graph(n, rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# Free tree generation
#
# Rooted trees are encoded as nested tuples of child codes; each isomorphism
# class is produced exactly once by drawing children as a multiset from a
# fixed-order pool.  Free trees follow by rooting at the centroid: a tree
# has either one centroid (all root subtrees of size <= (n-1)//2) or, for
# even n, two adjacent centroids splitting it into equal halves.


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple, ...]:
    if size == 1:
        return ((),)
    pool = [(s, code) for s in range(size - 1, 0, -1) for code in _rooted_trees(s)]
    out: list[tuple] = []

    def compose(remaining: int, start: int, children: list) -> None:
        if remaining == 0:
            out.append(tuple(children))
            return
        for i in range(start, len(pool)):
            s, code = pool[i]
            if s <= remaining:
                children.append(code)
                compose(remaining - s, i, children)
                children.pop()

    compose(size - 1, 0, [])
    return tuple(out)


def _attach(code: tuple, parent: int, edges: list, counter: list) -> None:
    vid = counter[0]
    counter[0] += 1
    if parent >= 0:
        edges.append((parent, vid))
    for child in code:
        _attach(child, vid, edges, counter)


def _tree_from_codes(*codes: tuple) -> Graph:
    # One code: that rooted tree.  Two codes: roots joined by an edge.
    edges: list[tuple[int, int]] = []
    counter = [0]
    roots = []
    for code in codes:
        roots.append(counter[0])
        _attach(code, -1, edges, counter)
    if len(roots) == 2:
        edges.append((roots[0], roots[1]))
    return Graph.from_edges(counter[0], edges)


def generate_trees(n: int) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of free trees of order n."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be between 1 and {MAX_TREE_ORDER}")
    if n == 1:
        yield empty_graph(1)
        return
    if n == 2:
        yield path_graph(2)
        return
    cap = (n - 1) // 2
    pool = [(s, code) for s in range(cap, 0, -1) for code in _rooted_trees(s)]

    def compose(remaining: int, start: int, children: list) -> Iterator[Graph]:
        if remaining == 0:
            yield _tree_from_codes(tuple(children))
            return
        for i in range(start, len(pool)):
            s, code = pool[i]
            if s <= remaining:
                children.append(code)
                yield from compose(remaining - s, i, children)
                children.pop()

    yield from compose(n - 1, 0, [])
    if n % 2 == 0:
        halves = _rooted_trees(n // 2)
        for i in range(len(halves)):
            for j in range(i, len(halves)):
                yield _tree_from_codes(halves[i], halves[j])


# ---------------------------------------------------------------------------
# Exhaustive small-graph generation up to isomorphism


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs of order n up to isomorphism, canonically labeled.

    Built by extending every (n-1)-vertex class with every neighborhood of a
    new vertex and deduplicating by certificate.  Intended for n <= 8; the
    order-8 level canonicalizes ~134k candidates and takes on the order of a
    minute, after which the result is cached for the process.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        return (empty_graph(0),)
    reps: dict[tuple[int, tuple[int, ...]], None] = {}
    for g in nonisomorphic_graphs(n - 1):
        base = g.adj + (0,)
        newbit = 1 << (n - 1)
        for nbhd in range(1 << (n - 1)):
            rows = list(base)
            rows[n - 1] = nbhd
            for u in bits(nbhd):
                rows[u] |= newbit
            cert = _canonical_rows(n, tuple(rows))
            if cert not in reps:
                reps[cert] = None
    return tuple(Graph(c[0], c[1]) for c in sorted(reps))


@lru_cache(maxsize=None)
def even_degree_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs of order n with every degree even, up to isomorphism.

    Every such graph arises from an (n-1)-vertex graph by adding one vertex
    joined to exactly its odd-degree vertices, so one candidate per smaller
    class suffices.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return (empty_graph(1),)
    reps: dict[tuple[int, tuple[int, ...]], None] = {}
    for h in nonisomorphic_graphs(n - 1):
        odd = mask_of(v for v in range(h.n) if h.degree(v) % 2)
        rows = list(h.adj) + [odd]
        newbit = 1 << (n - 1)
        for u in bits(odd):
            rows[u] |= newbit
        cert = _canonical_rows(n, tuple(rows))
        if cert not in reps:
            reps[cert] = None
    return tuple(Graph(c[0], c[1]) for c in sorted(reps))


def eulerian_graphs(n: int) -> tuple[Graph, ...]:
    """Even-degree graphs of order n whose edges all lie in one component."""
    return tuple(g for g in even_degree_graphs(n) if is_eulerian(g))
