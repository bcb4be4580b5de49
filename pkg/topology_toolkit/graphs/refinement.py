"""
Barycentric and edge refinement.
"""

from typing import Dict, Sequence, Tuple, Union

import networkx as nx
from sympy import factorial
from sympy.functions.combinatorial.numbers import stirling

from topology_toolkit.complexes.simplex import Simplex, SimplicialComplex
from topology_toolkit.errors import InvalidComplexError
from topology_toolkit.graphs.graph import complex_to_graph, whitney_complex


def barycentric_refine(
    G: SimplicialComplex,
    return_mapping: bool = False,
) -> Union[SimplicialComplex, Tuple[SimplicialComplex, Dict[int, Simplex]]]:
    """
    Whitney complex of the containment graph G₁.

    Vertex ``i`` of the result is the i-th simplex of ``G`` in canonical
    order. Euler characteristic and dimension are preserved.

    Parameters
    ----------
    G : SimplicialComplex
        Complex to refine.
    return_mapping : bool, default False
        Also return the map vertex id → simplex of ``G``.

    Examples
    --------
    >>> from topology_toolkit.graphs.graph import whitney_complex, complete_graph
    >>> barycentric_refine(whitney_complex(complete_graph(3))).f_vector()
    (7, 12, 6)
    """
    refined = whitney_complex(complex_to_graph(G))
    if return_mapping:
        return refined, dict(enumerate(G.simplices))
    return refined


def refine_times(G: SimplicialComplex, n: int) -> SimplicialComplex:
    """Apply ``barycentric_refine`` n times."""
    for _ in range(n):
        G = barycentric_refine(G)
    return G


def refined_f_vector(f: Sequence[int]) -> Tuple[int, ...]:
    """
    f-vector of the Barycentric refinement from the f-vector alone.

    A k-simplex of the refinement is a chain of k + 1 simplices, so
    f'_k = Σ_j f_j (k+1)! S(j+1, k+1) with S the Stirling numbers of the
    second kind.

    Examples
    --------
    >>> refined_f_vector((3, 3, 1))
    (7, 12, 6)
    """
    return tuple(
        int(factorial(k + 1) * sum(f[j] * stirling(j + 1, k + 1) for j in range(k, len(f))))
        for k in range(len(f))
    )


def edge_refine(g: nx.Graph, e: Tuple[int, int]) -> nx.Graph:
    """
    Subdivide the edge ``e = (a, b)``.

    A new vertex (one above the current maximum) is joined to ``a``, ``b``
    and every common neighbour of ``a`` and ``b``; the edge itself is
    removed.

    Raises
    ------
    InvalidComplexError
        If ``e`` is not an edge of ``g``.

    Examples
    --------
    >>> from topology_toolkit.graphs.graph import cycle_graph
    >>> edge_refine(cycle_graph(5), (1, 2)).number_of_nodes()
    6
    """
    a, b = e
    if not g.has_edge(a, b):
        raise InvalidComplexError(f"({a}, {b}) is not an edge of the graph")
    common = set(g.neighbors(a)) & set(g.neighbors(b))
    v = max(g.nodes) + 1
    out = g.copy()
    out.remove_edge(a, b)
    out.add_node(v)
    out.add_edges_from((v, w) for w in (a, b, *sorted(common)))
    return out
