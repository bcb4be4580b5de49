"""
Complete homeomorphism decision for complexes of dimension at most one.

A 1-dimensional complex is a graph; subdividing or smoothing degree-2
vertices does not change its topology. The normal form smooths every
degree-2 vertex into a multigraph edge, counts pure cycles separately and
compares what is left up to multigraph isomorphism.
"""

from typing import Tuple

import networkx as nx

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.errors import InvalidComplexError
from topology_toolkit.graphs.graph import skeleton_graph
from topology_toolkit.homeo.verdict import HOMEOMORPHIC, NOT_HOMEOMORPHIC, HomeoVerdict


def smooth_degree_two(g: nx.Graph) -> Tuple[nx.MultiGraph, int]:
    """
    Topological normal form of a graph.

    Returns
    -------
    (networkx.MultiGraph, int)
        The graph with every degree-2 vertex smoothed away (loops and
        parallel edges allowed) and the number of components that were
        pure cycles.

    Examples
    --------
    >>> from topology_toolkit.graphs import path_graph, cycle_graph
    >>> m, cycles = smooth_degree_two(path_graph(7))
    >>> m.number_of_nodes(), m.number_of_edges(), cycles
    (2, 1, 0)
    >>> smooth_degree_two(cycle_graph(6))[1]
    1
    """
    m = nx.MultiGraph(g)
    cycles = 0
    for part in list(nx.connected_components(m)):
        if len(part) > 1 and all(m.degree(v) == 2 for v in part):
            cycles += 1
            m.remove_nodes_from(part)
    changed = True
    while changed:
        changed = False
        for v in list(m.nodes):
            if m.degree(v) != 2 or m.number_of_edges(v, v):
                continue
            ends = [w for _, w in m.edges(v)]
            a, b = ends
            m.remove_node(v)
            m.add_edge(a, b)
            changed = True
    return m, cycles


def one_dim_homeomorphic(G: SimplicialComplex, H: SimplicialComplex) -> HomeoVerdict:
    """
    Decide homeomorphism of two complexes of dimension at most one.

    0-dimensional complexes are homeomorphic exactly when they have the
    same number of points.

    Raises
    ------
    InvalidComplexError
        If the dimensions differ or exceed one.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph, whitney_complex
    >>> one_dim_homeomorphic(whitney_complex(cycle_graph(5)), whitney_complex(cycle_graph(6))).result
    'homeomorphic'
    """
    if G.dim != H.dim or G.dim > 1:
        raise InvalidComplexError(
            f"one_dim_homeomorphic needs two complexes of equal dimension at most 1, "
            f"got {G.dim} and {H.dim}"
        )
    if G.dim <= 0:
        if len(G) != len(H):
            return HomeoVerdict(
                NOT_HOMEOMORPHIC,
                certificate={'invariant': 'cardinality', 'left': len(G), 'right': len(H)},
            )
        return HomeoVerdict(HOMEOMORPHIC, certificate={'method': 'cardinality', 'points': len(G)})
    mg, cg = smooth_degree_two(skeleton_graph(G))
    mh, ch = smooth_degree_two(skeleton_graph(H))
    if cg != ch:
        return HomeoVerdict(
            NOT_HOMEOMORPHIC,
            certificate={'invariant': 'cycle_components', 'left': cg, 'right': ch},
        )
    if not nx.is_isomorphic(mg, mh):
        return HomeoVerdict(
            NOT_HOMEOMORPHIC,
            certificate={
                'invariant': 'normal_form',
                'left': [mg.number_of_nodes(), mg.number_of_edges()],
                'right': [mh.number_of_nodes(), mh.number_of_edges()],
            },
        )
    return HomeoVerdict(
        HOMEOMORPHIC,
        certificate={
            'method': 'normal_form',
            'cycles': cg,
            'nodes': mg.number_of_nodes(),
            'edges': mg.number_of_edges(),
        },
    )
