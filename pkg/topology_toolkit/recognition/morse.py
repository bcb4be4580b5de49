"""
Morse functions on graphs: Poincaré-Hopf indices, critical points, level
sets and the sublevel build-up.

A vertex function f is locally injective when adjacent vertices get
different values. S⁻(v) is the part of the unit sphere where f < f(v).
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union

import networkx as nx
import pandas as pd

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.errors import MapError, NotLocallyInjectiveError
from topology_toolkit.graphs.graph import complex_to_graph, whitney_complex
from topology_toolkit.recognition.recognizer import Recognizer, default_recognizer

VertexFunction = Mapping[int, Any]

CRITICAL = 'critical'
REGULAR = 'regular'
IRREGULAR = 'irregular'


def _value(f: VertexFunction, v: int) -> Any:
    try:
        return f[v]
    except KeyError:
        raise MapError(f"Function is not defined at vertex {v}") from None


def check_locally_injective(g: nx.Graph, f: VertexFunction) -> None:
    """
    Raises
    ------
    NotLocallyInjectiveError
        If two adjacent vertices carry the same value.
    """
    for a, b in g.edges:
        if _value(f, a) == _value(f, b):
            raise NotLocallyInjectiveError(
                f"f takes the value {f[a]!r} at the adjacent vertices {a} and {b}"
            )


def lower_sphere(g: nx.Graph, f: VertexFunction, v: int) -> nx.Graph:
    """S⁻(v): neighbours of ``v`` with a smaller value."""
    fv = _value(f, v)
    return g.subgraph([w for w in g.neighbors(v) if _value(f, w) < fv]).copy()


def poincare_hopf_index(g: nx.Graph, f: VertexFunction, v: int) -> int:
    """
    i_f(v) = 1 - χ(S⁻(v)).

    Raises
    ------
    NotLocallyInjectiveError
        If f repeats a value on an edge at ``v``.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph
    >>> poincare_hopf_index(cycle_graph(4), {1: 0, 2: 1, 3: 2, 4: 1}, 3)
    -1
    """
    fv = _value(f, v)
    for w in g.neighbors(v):
        if _value(f, w) == fv:
            raise NotLocallyInjectiveError(
                f"f takes the value {fv!r} at the adjacent vertices {v} and {w}"
            )
    return 1 - whitney_complex(lower_sphere(g, f, v)).euler()


@dataclass
class MorseData:
    """
    Classification of the vertices of a graph under a locally injective f.

    Attributes
    ----------
    f : dict
        The function.
    indices : dict
        Poincaré-Hopf index per vertex.
    labels : dict
        ``'critical'`` when S⁻ is a sphere, ``'regular'`` when it is
        contractible, ``'irregular'`` otherwise.
    morse_indices : dict
        For critical vertices, k where S⁻ is a (k-1)-sphere.
    """

    f: Dict[int, Any]
    indices: Dict[int, int] = field(default_factory=dict)
    labels: Dict[int, str] = field(default_factory=dict)
    morse_indices: Dict[int, int] = field(default_factory=dict)

    @property
    def critical_points(self) -> List[int]:
        return sorted(v for v, label in self.labels.items() if label == CRITICAL)

    @property
    def is_morse(self) -> bool:
        return IRREGULAR not in self.labels.values()

    @property
    def index_total(self) -> int:
        return sum(self.indices.values())

    def __repr__(self) -> str:
        return (
            f"<MorseData: {len(self.f)} vertices, "
            f"{len(self.critical_points)} critical, index total {self.index_total}>"
        )


def morse_classify(
    g: nx.Graph,
    f: VertexFunction,
    recognizer: Optional[Recognizer] = None,
) -> MorseData:
    """
    Label every vertex critical, regular or irregular.

    Raises
    ------
    NotLocallyInjectiveError
        If f is not locally injective on ``g``.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph
    >>> data = morse_classify(cycle_graph(4), {1: 0, 2: 1, 3: 2, 4: 1.5})
    >>> data.critical_points, data.morse_indices
    ([1, 3], {1: 0, 3: 1})
    """
    check_locally_injective(g, f)
    recognizer = recognizer or default_recognizer()
    data = MorseData({v: f[v] for v in g.nodes})
    for v in sorted(g.nodes):
        S = whitney_complex(lower_sphere(g, f, v))
        data.indices[v] = 1 - S.euler()
        d = recognizer.is_sphere(S)
        if d is not None:
            data.labels[v] = CRITICAL
            data.morse_indices[v] = d + 1
        elif recognizer.is_contractible(S):
            data.labels[v] = REGULAR
        else:
            data.labels[v] = IRREGULAR
    return data


def morse_lift(
    G: SimplicialComplex,
    f: Union[Mapping[Tuple[int, ...], Any], Callable[[Tuple[int, ...]], Any]],
) -> Tuple[nx.Graph, Dict[int, Tuple[Any, int]]]:
    """
    Lexicographic (f, dim) function on the vertices of G₁.

    ``f`` is given on simplices. Adjacent vertices of G₁ differ in
    dimension, so the lift is locally injective whatever f is.

    Returns
    -------
    (networkx.Graph, dict)
        The containment graph and the lifted values keyed by its nodes.
    """
    value = f if callable(f) else (lambda x: f[x])
    g1 = complex_to_graph(G)
    lifted = {i: (value(x), x.dim) for i, x in enumerate(G)}
    return g1, lifted


def morse_buildup(g: nx.Graph, f: VertexFunction) -> pd.DataFrame:
    """
    Add vertices in increasing f and track χ of the sublevel complex.

    Columns ``vertex``, ``value``, ``index``, ``euler`` and ``jump``; each
    jump in χ equals the Poincaré-Hopf index of the added vertex.

    Raises
    ------
    NotLocallyInjectiveError
        If f is not locally injective on ``g``.
    """
    check_locally_injective(g, f)
    order = sorted(g.nodes, key=lambda v: (f[v], v))
    rows = []
    previous = 0
    for k, v in enumerate(order):
        chi = whitney_complex(g.subgraph(order[:k + 1])).euler()
        rows.append({
            'vertex': v,
            'value': f[v],
            'index': poincare_hopf_index(g, f, v),
            'euler': chi,
            'jump': chi - previous,
        })
        previous = chi
    return pd.DataFrame(rows, columns=['vertex', 'value', 'index', 'euler', 'jump'])


def level_set(g: nx.Graph, f: VertexFunction, c: Any) -> nx.Graph:
    """
    Level surface {f = c}.

    Nodes are the cliques of ``g`` on which f takes values on both sides of
    ``c``, numbered in canonical order with the clique stored as node
    attribute ``simplex``; edges join a clique to its faces.

    Raises
    ------
    ValueError
        If ``c`` is a value of f.

    Examples
    --------
    >>> from topology_toolkit.graphs import cycle_graph
    >>> level_set(cycle_graph(4), {1: 1, 2: -1, 3: 1, 4: -1}, 0).number_of_nodes()
    4
    """
    for v in g.nodes:
        if _value(f, v) == c:
            raise ValueError(f"Level {c!r} is taken by f at vertex {v}; choose another level")
    G = whitney_complex(g)
    crossing = [
        x for x in G
        if min(f[v] for v in x) < c < max(f[v] for v in x)
    ]
    out = nx.Graph()
    position = {x: i for i, x in enumerate(crossing)}
    for x, i in position.items():
        out.add_node(i, simplex=x)
    for x, i in position.items():
        for y in x.faces():
            j = position.get(y)
            if j is not None and j != i:
                out.add_edge(j, i)
    return out
