"""
Graphs and the Whitney functor.

Graphs are plain ``networkx.Graph`` objects with non-negative integer nodes.
``complex_to_graph`` numbers the simplices of a complex by their canonical
position, so Barycentric refinements stay in the integer vertex space and
the node attribute ``simplex`` keeps the way back.
"""

from typing import Iterable, Tuple

import networkx as nx

from topology_toolkit.complexes.simplex import Simplex, SimplicialComplex
from topology_toolkit.errors import InvalidComplexError


def _check_nodes(g: nx.Graph) -> None:
    for v in g.nodes:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidComplexError(
                f"Graph nodes must be non-negative integers, got {v!r}"
            )
    for a, b in g.edges:
        if a == b:
            raise InvalidComplexError(f"Graph has a loop at {a}")


def make_graph(vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()) -> nx.Graph:
    """
    Build a simple graph from a vertex list and an edge list.

    Edge endpoints are added as vertices. Loops are rejected.

    Examples
    --------
    >>> g = make_graph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
    >>> g.number_of_nodes(), g.number_of_edges()
    (3, 3)
    """
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    _check_nodes(g)
    return g


def whitney_complex(g: nx.Graph) -> SimplicialComplex:
    """
    Simplicial complex of all cliques of ``g``.

    Parameters
    ----------
    g : networkx.Graph
        Simple graph with non-negative integer nodes.

    Returns
    -------
    SimplicialComplex
        Every complete subgraph as a simplex. Isolated nodes become
        0-simplices.

    Examples
    --------
    >>> len(whitney_complex(nx.complete_graph(3)))
    7
    >>> len(whitney_complex(nx.empty_graph(5)))
    5
    """
    _check_nodes(g)
    cliques = (Simplex._trusted(tuple(sorted(c))) for c in nx.enumerate_all_cliques(g))
    return SimplicialComplex(cliques, validate=False)


def complex_to_graph(G: SimplicialComplex) -> nx.Graph:
    """
    Containment graph G₁ of a complex.

    Node ``i`` is the i-th simplex in canonical order, stored in the node
    attribute ``simplex`` together with its dimension ``dim``. Two nodes are
    adjacent when one simplex is a proper face of the other.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> g1 = complex_to_graph(closure([[1, 2]]))
    >>> sorted(g1.edges)
    [(0, 2), (1, 2)]
    """
    g = nx.Graph()
    for i, x in enumerate(G):
        g.add_node(i, simplex=x, dim=x.dim)
    for i, faces in enumerate(G.core_lists):
        for j in faces:
            if j != i:
                g.add_edge(j, i)
    return g


def skeleton_graph(G: SimplicialComplex) -> nx.Graph:
    """Vertices and edges of a complex as a graph (its 1-skeleton)."""
    g = nx.Graph()
    g.add_nodes_from(G.vertex_set)
    g.add_edges_from(tuple(x) for x in G if len(x) == 2)
    return g


def unit_sphere_graph(g: nx.Graph, v: int) -> nx.Graph:
    """Subgraph induced by the neighbours of ``v``."""
    return g.subgraph(g.neighbors(v)).copy()


def cycle_graph(n: int) -> nx.Graph:
    """C_n on vertices 1..n."""
    if n < 3:
        raise InvalidComplexError(f"A cycle needs at least 3 vertices, got {n}")
    return nx.relabel_nodes(nx.cycle_graph(n), {i: i + 1 for i in range(n)})


def path_graph(n: int) -> nx.Graph:
    """P_n: n vertices 1..n in a row."""
    if n < 1:
        raise InvalidComplexError(f"A path needs at least 1 vertex, got {n}")
    return nx.relabel_nodes(nx.path_graph(n), {i: i + 1 for i in range(n)})


def complete_graph(n: int) -> nx.Graph:
    """K_n on vertices 1..n."""
    if n < 1:
        raise InvalidComplexError(f"K_n needs n >= 1, got {n}")
    return nx.relabel_nodes(nx.complete_graph(n), {i: i + 1 for i in range(n)})


def star_graph(n: int) -> nx.Graph:
    """S_n: hub 0 with n rays to 1..n."""
    if n < 1:
        raise InvalidComplexError(f"A star needs at least one ray, got {n}")
    return nx.star_graph(n)


def wheel_graph(n: int) -> nx.Graph:
    """W_n: hub 0 joined to every vertex of the rim cycle 1..n."""
    if n < 3:
        raise InvalidComplexError(f"A wheel needs a rim of at least 3, got {n}")
    return nx.wheel_graph(n + 1)
