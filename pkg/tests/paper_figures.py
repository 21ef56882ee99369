"""Worked examples transcribed from published figures (node-by-node).

`star_removal_example` is a 13-vertex tree whose iterated star removal has
three layers (drawn shaded black, gray, light gray) and two residual stages
of orders 6 and 3.  `cyclic_equality_examples` are three 9-vertex graphs
with cycles that each carry exactly three minimal forts.
"""

from fortlab.graphs import Graph

STAR_EXAMPLE_EDGES = [
    (0, 1), (1, 2), (1, 4), (4, 3), (4, 5), (5, 6), (6, 7),
    (4, 8), (8, 10), (10, 9), (10, 11), (10, 12),
]
STAR_EXAMPLE_LAYERS = (
    frozenset({1, 10}),   # black
    frozenset({4}),       # gray
    frozenset({6}),       # light gray
)
STAR_EXAMPLE_RESIDUAL_ORDERS = (6, 3, 0)
# The drawn intermediate stage after the first removal layer.
STAR_EXAMPLE_STAGE1_EDGES = [(1, 0), (1, 5), (1, 2), (2, 3), (3, 4)]


def star_removal_example() -> Graph:
    return Graph.from_edges(13, STAR_EXAMPLE_EDGES)


def star_removal_example_stage1() -> Graph:
    return Graph.from_edges(6, STAR_EXAMPLE_STAGE1_EDGES)


CYCLIC_EXAMPLE_EDGES = {
    "chained-squares": [
        (0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5),
        (5, 6), (4, 6), (6, 7), (6, 8),
    ],
    "double-fan": [
        (0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
        (3, 4), (4, 5), (6, 7), (7, 8),
    ],
    "square-triangles": [
        (0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5),
        (5, 6), (5, 7), (6, 8), (7, 8), (5, 8),
    ],
}


def cyclic_equality_examples() -> dict[str, Graph]:
    return {
        name: Graph.from_edges(9, edges)
        for name, edges in CYCLIC_EXAMPLE_EDGES.items()
    }
