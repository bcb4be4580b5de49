"""
Connectivity, separation and dimension of the star topology.
"""

from dataclasses import dataclass, asdict
from typing import List, Sequence

import networkx as nx

from topology_toolkit.complexes.constructors import induced_subcomplex
from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex
from topology_toolkit.errors import InvalidComplexError
from topology_toolkit.graphs.graph import complex_to_graph, skeleton_graph


def connected_components(G: SimplicialComplex) -> List[SimplicialComplex]:
    """
    Components of the complex, ordered by smallest vertex.

    Two simplices lie in the same component when a chain of containments
    joins them; this is path connectivity of the 1-skeleton.
    """
    parts = sorted(nx.connected_components(skeleton_graph(G)), key=min)
    return [induced_subcomplex(G, part) for part in parts]


def is_connected(G: SimplicialComplex) -> bool:
    """Exactly one component (the empty complex is not connected)."""
    return len(G) > 0 and nx.is_connected(skeleton_graph(G))


def is_one_connected(G: SimplicialComplex) -> bool:
    """
    G₁ is connected and removing one of its vertices disconnects it.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> is_one_connected(closure([[1, 2]]))
    True
    >>> is_one_connected(closure([[1, 2], [2, 3], [3, 4], [1, 4]]))
    False
    """
    if not is_connected(G):
        return False
    g1 = complex_to_graph(G)
    return next(nx.articulation_points(g1), None) is not None


@dataclass(frozen=True)
class SeparationReport:
    """Separation axioms of the star topology."""

    t0: bool
    t1: bool
    t2: bool
    closed_form_agrees: bool

    def to_dict(self) -> dict:
        return asdict(self)


def separation_report(G: SimplicialComplex, verbose: bool = False) -> SeparationReport:
    """
    T₀, T₁ and T₂ by pairwise witness search over the minimal neighbourhoods.

    The topology is always T₀; T₁ and T₂ hold exactly when the dimension is
    at most 0. A disagreement with that closed form is reported in
    ``closed_form_agrees``.
    """
    stars = G.star_bits
    n = len(G)
    t0 = t1 = t2 = True
    for i in range(n):
        for j in range(i + 1, n):
            i_sees_j = (stars[i] >> j) & 1
            j_sees_i = (stars[j] >> i) & 1
            if i_sees_j and j_sees_i:
                t0 = False
            if i_sees_j or j_sees_i:
                t1 = False
            if stars[i] & stars[j]:
                t2 = False
    expected = G.dim <= 0
    agrees = t0 and t1 == expected and t2 == expected
    if not agrees and verbose:
        print(f"[WARNING] Separation search disagrees with the closed form on {G!r}")
    return SeparationReport(t0=t0, t1=t1, t2=t2, closed_form_agrees=agrees)


def cech_nerve_graph(G: SimplicialComplex, cover: Sequence[SimplexSet]) -> nx.Graph:
    """
    Nerve graph of a cover: node ``j`` is ``cover[j]``, edges join members
    with a nonempty intersection.

    For :func:`vertex_star_cover` the nerve is the 1-skeleton, with node
    ``j`` standing for ``G.vertex_set[j]``. For :func:`star_cover` it
    contains the containment graph G₁ and is larger as soon as two
    simplices share a coface without one containing the other.

    Raises
    ------
    InvalidComplexError
        If the sets do not cover ``G``.
    """
    covered = 0
    for U in cover:
        if U.host is not G and U.host != G:
            raise InvalidComplexError("Cover member does not live in this complex")
        covered |= U.bits
    if covered != G.full_bits:
        raise InvalidComplexError("The given sets do not cover the complex")
    g = nx.Graph()
    for j, U in enumerate(cover):
        g.add_node(j, members=U)
    for j, U in enumerate(cover):
        for k in range(j + 1, len(cover)):
            if U.bits & cover[k].bits:
                g.add_edge(j, k)
    return g


def vertex_star_cover(G: SimplicialComplex) -> List[SimplexSet]:
    return [SimplexSet(G, G.star_bits[G.index((v,))]) for v in G.vertex_set]


def star_cover(G: SimplicialComplex) -> List[SimplexSet]:
    return [SimplexSet(G, b) for b in G.star_bits]


def nerve_dimension(G: SimplicialComplex, cover: Sequence[SimplexSet]) -> int:
    """Largest k such that some k + 1 cover members share a simplex."""
    best = -1

    def extend(start: int, common: int, size: int) -> None:
        nonlocal best
        best = max(best, size - 1)
        for k in range(start, len(cover)):
            meet = common & cover[k].bits
            if meet:
                extend(k + 1, meet, size + 1)

    extend(0, G.full_bits, 0)
    return best


def topological_dimension(G: SimplicialComplex) -> int:
    """
    Dimension of the nerve of the vertex-star cover.

    This cover cannot be refined, and it always equals the maximal
    dimension of ``G``.

    Raises
    ------
    InvalidComplexError
        For the empty complex.
    """
    if len(G) == 0:
        raise InvalidComplexError("The empty complex has no topological dimension")
    return nerve_dimension(G, vertex_star_cover(G))


def cycle_rank_check(G: SimplicialComplex) -> bool:
    """
    For a complex of dimension ≤ 1: b₁ = |E| − |V| + #components.

    Raises
    ------
    InvalidComplexError
        If the complex has 2-simplices.
    """
    from topology_toolkit.hodge.exterior import betti

    if G.dim > 1:
        raise InvalidComplexError("cycle_rank_check needs a complex of dimension at most 1")
    f = G.f_vector()
    vertices = f[0] if len(f) > 0 else 0
    edges = f[1] if len(f) > 1 else 0
    b = betti(G)
    b1 = b[1] if len(b) > 1 else 0
    return b1 == edges - vertices + len(connected_components(G))
