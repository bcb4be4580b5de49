"""
Quotients by vertex identification and continuity of graph maps.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional

import networkx as nx

from topology_toolkit.errors import InvalidComplexError, MapError
from topology_toolkit.graphs.graph import whitney_complex


@dataclass
class QuotientResult:
    """
    Outcome of collapsing a vertex partition.

    Attributes
    ----------
    graph : networkx.Graph
        The simple quotient graph. Each class is represented by its
        smallest vertex; ``members`` holds the full class.
    dropped_edges : int
        Edges inside a class, removed by the collapse.
    multi_edge_collapsed : bool
        True when two or more edges landed on the same quotient edge.
    riemann_hurwitz : dict, optional
        For partitions into classes of equal size k > 1: the Euler
        characteristics of both Whitney complexes, k, and whether
        χ(G) = k·χ(G/∼).
    """

    graph: nx.Graph
    dropped_edges: int = 0
    multi_edge_collapsed: bool = False
    riemann_hurwitz: Optional[Dict[str, object]] = field(default=None)


def quotient(g: nx.Graph, classes: Iterable[Iterable[int]]) -> QuotientResult:
    """
    Collapse each class of a vertex partition to a single vertex.

    Parameters
    ----------
    g : networkx.Graph
        Source graph.
    classes : iterable of iterables of int
        A partition of ``g.nodes``.

    Returns
    -------
    QuotientResult

    Raises
    ------
    InvalidComplexError
        If ``classes`` is not a partition of the vertex set.

    Examples
    --------
    >>> from topology_toolkit.graphs.graph import cycle_graph
    >>> c8 = cycle_graph(8)
    >>> r = quotient(c8, [[1, 5], [2, 6], [3, 7], [4, 8]])
    >>> r.graph.number_of_nodes(), r.graph.number_of_edges()
    (4, 4)
    """
    blocks: List[List[int]] = [sorted(set(c)) for c in classes]
    rep: Dict[int, int] = {}
    for block in blocks:
        if not block:
            raise InvalidComplexError("Partition contains an empty class")
        for v in block:
            if v not in g:
                raise InvalidComplexError(f"Partition names {v}, which is not a vertex")
            if v in rep:
                raise InvalidComplexError(f"Vertex {v} appears in two classes")
            rep[v] = block[0]
    missing = set(g.nodes) - set(rep)
    if missing:
        raise InvalidComplexError(f"Partition misses vertices {sorted(missing)}")

    q = nx.Graph()
    for block in blocks:
        q.add_node(block[0], members=tuple(block))
    dropped = 0
    seen: Dict[tuple, int] = {}
    for a, b in g.edges:
        ra, rb = rep[a], rep[b]
        if ra == rb:
            dropped += 1
            continue
        key = (min(ra, rb), max(ra, rb))
        seen[key] = seen.get(key, 0) + 1
        q.add_edge(ra, rb)

    result = QuotientResult(
        graph=q,
        dropped_edges=dropped,
        multi_edge_collapsed=any(count > 1 for count in seen.values()),
    )
    sizes = {len(b) for b in blocks}
    if len(sizes) == 1 and sizes != {1}:
        order = sizes.pop()
        chi_g = whitney_complex(g).euler()
        chi_q = whitney_complex(q).euler()
        result.riemann_hurwitz = {
            "euler_source": chi_g,
            "euler_quotient": chi_q,
            "order": order,
            "holds": chi_g == order * chi_q,
        }
    return result


def is_continuous_graph_map(f: Mapping[int, int], g: nx.Graph, h: nx.Graph) -> bool:
    """
    True when every edge of ``g`` maps to an edge of ``h`` or collapses.

    Raises
    ------
    MapError
        If ``f`` is not defined on every vertex of ``g`` or leaves ``h``.

    Examples
    --------
    >>> from topology_toolkit.graphs.graph import cycle_graph
    >>> f = {v: (v - 1) % 4 + 1 for v in range(1, 9)}
    >>> is_continuous_graph_map(f, cycle_graph(8), cycle_graph(4))
    True
    """
    for v in g.nodes:
        if v not in f:
            raise MapError(f"Vertex map is not defined at {v}")
        if f[v] not in h:
            raise MapError(f"Vertex map sends {v} to {f[v]}, which is not a vertex of the target")
    for a, b in g.edges:
        fa, fb = f[a], f[b]
        if fa != fb and not h.has_edge(fa, fb):
            return False
    return True
