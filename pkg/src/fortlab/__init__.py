"""fortlab: exact zero forcing, minimal forts, and counting-law verification."""

from fortlab.graphs import (
    Graph,
    Graph6Error,
    SpiderSpec,
    build_spider,
    corona_E2,
    cycle_graph,
    decompose_corona_E2,
    from_graph6,
    generate_trees,
    is_eulerian,
    is_isomorphic,
    is_tree,
    path_graph,
    to_graph6,
    vertex_sum,
)

__version__ = "0.1.0"
