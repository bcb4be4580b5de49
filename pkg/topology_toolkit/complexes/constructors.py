"""
Constructors and algebraic builders for simplicial complexes.

Relabeling always shifts the second operand above the maximum vertex of the
first one, so results are deterministic and the vertex maps can be returned
for round-trip checks.
"""

from itertools import combinations
from typing import Dict, Iterable, Tuple, Union

from topology_toolkit.complexes.simplex import Simplex, SimplicialComplex
from topology_toolkit.errors import InvalidComplexError


def closure(sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """
    Smallest simplicial complex containing every given vertex set.

    Parameters
    ----------
    sets : iterable of iterables of int
        Nonempty vertex sets (facets or arbitrary generators).

    Returns
    -------
    SimplicialComplex
        The downward closure.

    Raises
    ------
    InvalidComplexError
        If one of the sets is empty.

    Examples
    --------
    >>> len(closure([[1, 2, 3]]))
    7
    >>> len(closure([]))
    0
    """
    generated = set()
    for s in sets:
        s = list(s)
        if not s:
            raise InvalidComplexError("closure() input contains the empty set")
        x = Simplex(s)
        if x in generated:
            continue
        for k in range(1, len(x) + 1):
            for face in combinations(x, k):
                generated.add(Simplex._trusted(face))
    return SimplicialComplex(generated, validate=False)


def relabel(G: SimplicialComplex, mapping: Dict[int, int]) -> SimplicialComplex:
    """Apply an injective vertex map to every simplex."""
    if len(set(mapping[v] for v in G.vertex_set)) != len(G.vertex_set):
        raise InvalidComplexError("relabel() needs an injective vertex map")
    return SimplicialComplex(
        (Simplex(mapping[v] for v in x) for x in G), validate=False
    )


def _offset_map(G: SimplicialComplex, H: SimplicialComplex) -> Dict[int, int]:
    base = max(G.vertex_set) + 1 if len(G) else 0
    low = min(H.vertex_set) if len(H) else 0
    return {v: v - low + base for v in H.vertex_set}


def join(
    G: SimplicialComplex,
    H: SimplicialComplex,
    return_mapping: bool = False,
) -> Union[SimplicialComplex, Tuple[SimplicialComplex, Dict[int, int]]]:
    """
    Join G ⊕ H: simplices of G, of H, and all unions x ∪ y.

    H is relabeled above the maximal vertex of G first. The empty complex is
    the identity: ``join(empty, H)`` returns H unchanged.

    Parameters
    ----------
    G, H : SimplicialComplex
        The factors.
    return_mapping : bool, default False
        Also return the vertex map applied to H.

    Examples
    --------
    >>> s0 = closure([[0], [1]])
    >>> len(join(s0, s0))
    8
    """
    if len(G) == 0:
        result, mapping = H, {v: v for v in H.vertex_set}
    elif len(H) == 0:
        result, mapping = G, {}
    else:
        mapping = _offset_map(G, H)
        shifted = [tuple(mapping[v] for v in y) for y in H]
        simplices = set(G.simplices)
        simplices.update(Simplex._trusted(y) for y in shifted)
        for x in G:
            for y in shifted:
                simplices.add(Simplex._trusted(tuple(x) + y))
        result = SimplicialComplex(simplices, validate=False)
    if return_mapping:
        return result, mapping
    return result


def sphere_zero() -> SimplicialComplex:
    """The two-point complex S⁰ on vertices 0 and 1."""
    return closure([[0], [1]])


def point() -> SimplicialComplex:
    return closure([[0]])


def suspension(G: SimplicialComplex) -> SimplicialComplex:
    """Join with S⁰; the two new vertices are max+1 and max+2."""
    return join(G, sphere_zero())


def double_suspension(G: SimplicialComplex) -> SimplicialComplex:
    return suspension(suspension(G))


def cone(G: SimplicialComplex) -> SimplicialComplex:
    """Join with a single point."""
    return join(G, point())


def wedge_sum(
    G: SimplicialComplex,
    x0: int,
    H: SimplicialComplex,
    y0: int,
    return_mapping: bool = False,
):
    """
    One-point union G ∧ H identifying vertex x0 of G with vertex y0 of H.

    Raises
    ------
    InvalidComplexError
        If a basepoint is not a vertex of its complex.

    Examples
    --------
    >>> c4 = closure([[1, 2], [2, 3], [3, 4], [1, 4]])
    >>> len(wedge_sum(c4, 1, c4, 1))
    15
    """
    if (x0,) not in G:
        raise InvalidComplexError(f"Basepoint {x0} is not a vertex of the first complex")
    if (y0,) not in H:
        raise InvalidComplexError(f"Basepoint {y0} is not a vertex of the second complex")
    mapping = _offset_map(G, H)
    mapping[y0] = x0
    simplices = set(G.simplices)
    simplices.update(Simplex(mapping[v] for v in y) for y in H)
    result = SimplicialComplex(simplices, validate=False)
    if return_mapping:
        return result, mapping
    return result


def skeleton(G: SimplicialComplex, k: int) -> SimplicialComplex:
    """All simplices of dimension at most ``k`` (k ≥ -1)."""
    if k < -1:
        raise InvalidComplexError(f"skeleton() needs k >= -1, got {k}")
    return SimplicialComplex((x for x in G if len(x) <= k + 1), validate=False)


def induced_subcomplex(G: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    keep = set(vertices)
    return SimplicialComplex((x for x in G if keep.issuperset(x)), validate=False)


def deletion(G: SimplicialComplex, v: int) -> SimplicialComplex:
    """G minus the open star of the vertex v."""
    return SimplicialComplex((x for x in G if v not in x), validate=False)


def link(G: SimplicialComplex, x: Iterable[int]) -> SimplicialComplex:
    """Simplices disjoint from x whose union with x is in G."""
    xs = set(x)
    if tuple(sorted(xs)) not in G:
        raise InvalidComplexError(f"{tuple(sorted(xs))} is not a simplex of the complex")
    out = []
    for y in G:
        if xs.isdisjoint(y) and tuple(sorted(xs.union(y))) in G._index:
            out.append(y)
    return SimplicialComplex(out, validate=False)


def disjoint_union(G: SimplicialComplex, H: SimplicialComplex) -> SimplicialComplex:
    if len(G) == 0 or len(H) == 0:
        return G if len(H) == 0 else H
    mapping = _offset_map(G, H)
    return G.union_of(relabel(H, mapping))
