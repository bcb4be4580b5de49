"""
Maps between complexes: continuity, Koopman operators and the Lefschetz
fixed-point formula.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np
from sympy import Rational

from topology_toolkit import linalg
from topology_toolkit.complexes.simplex import Simplex, SimplicialComplex, iter_bits
from topology_toolkit.errors import MapError
from topology_toolkit.hodge.exterior import Complexish, oriented


@dataclass(frozen=True)
class SimplexMap:
    """
    A total map from the simplices of ``source`` to those of ``target``.

    Attributes
    ----------
    source, target : SimplicialComplex
    images : tuple of int
        ``images[i]`` is the canonical index in ``target`` of the image of
        the i-th simplex of ``source``.
    """

    source: SimplicialComplex
    target: SimplicialComplex
    images: Tuple[int, ...]

    @classmethod
    def from_mapping(
        cls,
        source: SimplicialComplex,
        target: SimplicialComplex,
        mapping: Mapping[Iterable[int], Iterable[int]],
    ) -> "SimplexMap":
        """
        Raises
        ------
        MapError
            If a simplex of ``source`` has no image, or an image is not a
            simplex of ``target``.
        """
        lookup = {tuple(sorted(k)): tuple(sorted(v)) for k, v in mapping.items()}
        images = []
        for x in source:
            if x not in lookup:
                raise MapError(f"Map is not defined on {x.label()}")
            y = lookup[x]
            if y not in target._index:
                raise MapError(f"Image of {x.label()} is not a simplex of the target")
            images.append(target._index[y])
        return cls(source, target, tuple(images))

    def __call__(self, x: Iterable[int]) -> Simplex:
        return self.target.simplex(self.images[self.source.index(x)])

    def as_dict(self) -> Dict[Simplex, Simplex]:
        return {x: self.target.simplex(j) for x, j in zip(self.source, self.images)}

    def vertex_images(self) -> Optional[Dict[int, int]]:
        """Vertex map, if every vertex lands on a vertex."""
        out = {}
        for x, j in zip(self.source, self.images):
            if len(x) == 1:
                y = self.target.simplex(j)
                if len(y) != 1:
                    return None
                out[x[0]] = y[0]
        return out


def simplex_map_from_vertex_map(
    G: SimplicialComplex,
    H: SimplicialComplex,
    phi: Mapping[int, int],
) -> SimplexMap:
    """
    The map x ↦ {phi(v) : v ∈ x}.

    Raises
    ------
    MapError
        If ``phi`` misses a vertex or some image is not a simplex of ``H``.
    """
    images = []
    for x in G:
        try:
            y = tuple(sorted({phi[v] for v in x}))
        except KeyError as e:
            raise MapError(f"Vertex map is not defined at {e.args[0]}") from None
        if y not in H._index:
            raise MapError(f"{x.label()} maps to {y}, which is not a simplex of the target")
        images.append(H._index[y])
    return SimplexMap(G, H, tuple(images))


def _check_ends(f: SimplexMap, G: SimplicialComplex, H: SimplicialComplex) -> None:
    if f.source != G or f.target != H:
        raise MapError("Map does not go between the given complexes")


def is_continuous(f: SimplexMap, G: SimplicialComplex, H: SimplicialComplex) -> bool:
    """
    Preimages of the basic open sets U(y), y ∈ H, are open.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> K2 = closure([[1, 2]])
    >>> swap = SimplexMap.from_mapping(K2, K2, {(1,): (1, 2), (2,): (2,), (1, 2): (1,)})
    >>> is_continuous(swap, K2, K2)
    False
    """
    _check_ends(f, G, H)
    target_stars = H.star_bits
    source_stars = G.star_bits
    for y_star in target_stars:
        pre = 0
        for i, j in enumerate(f.images):
            if (y_star >> j) & 1:
                pre |= 1 << i
        for i in iter_bits(pre):
            if source_stars[i] & ~pre:
                return False
    return True


def is_simplicial(f: SimplexMap, G: SimplicialComplex, H: SimplicialComplex) -> bool:
    """Vertices go to vertices and f(x) is the union of the vertex images."""
    _check_ends(f, G, H)
    phi = f.vertex_images()
    if phi is None:
        return False
    for x, j in zip(G, f.images):
        if tuple(sorted({phi[v] for v in x})) != H.simplex(j):
            return False
    return True


def _permutation_sign(values: Tuple[int, ...]) -> int:
    sign = 1
    seen = list(values)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def map_sign(f: SimplexMap, i: int) -> int:
    """
    sign(f|x) for the i-th simplex: parity of the induced vertex
    permutation when x maps bijectively onto f(x) vertex by vertex; +1
    otherwise.
    """
    G, H = f.source, f.target
    x = G.simplex(i)
    y = H.simplex(f.images[i])
    if len(y) != len(x):
        return 0
    vertex_images = []
    for v in x:
        w = H.simplex(f.images[G._index[(v,)]])
        if len(w) != 1:
            return 1
        vertex_images.append(w[0])
    if sorted(vertex_images) != list(y):
        return 1
    return _permutation_sign(tuple(vertex_images))


def koopman(f: SimplexMap, G: Complexish) -> np.ndarray:
    """
    Pull-back matrix U with (Ug)(x) = sign(f|x) g(f(x)).

    Rows where the dimension drops are zero.
    """
    O = oriented(G)
    base = O.base
    if f.source != base or f.target != base:
        raise MapError("Koopman operator needs a self-map of the complex")
    n = len(base)
    U = np.zeros((n, n), dtype=np.int64)
    for i, j in enumerate(f.images):
        s = map_sign(f, i)
        if s:
            U[i, j] = s
    return U


def fixed_simplices(f: SimplexMap, G: SimplicialComplex) -> List[Simplex]:
    return [x for i, x in enumerate(G) if f.images[i] == i]


def index_sum(f: SimplexMap, G: SimplicialComplex) -> int:
    """Σ over fixed simplices of ω(x)·sign(f|x)."""
    return sum(G.omegas[i] * map_sign(f, i) for i, j in enumerate(f.images) if i == j)


def lefschetz_number(f: SimplexMap, G: Complexish) -> int:
    """
    Graded supertrace of the Koopman operator on harmonic forms.

    The Koopman matrix commutes with the exterior derivative only for
    simplicial maps, so only those are accepted. Continuous maps such as
    the ones from :func:`random_continuous_map` still have fixed simplices
    and an index sum, see :func:`fixed_simplices` and :func:`index_sum`.

    Raises
    ------
    MapError
        If ``f`` is not a continuous self-map, or is continuous but not
        simplicial.
    """
    O = oriented(G)
    base = O.base
    if not is_continuous(f, base, base):
        raise MapError("Lefschetz number needs a continuous self-map")
    if not is_simplicial(f, base, base):
        raise MapError("Lefschetz number needs a simplicial self-map")
    U = koopman(f, O)
    total = Rational(0)
    for k, count in enumerate(O.f):
        lo = O.offsets[k]
        block = U[lo:lo + count, lo:lo + count]
        trace = linalg.trace_on_subspace(O.harmonic_basis(k), block)
        total += (-1) ** k * trace
    if total.q != 1:
        raise MapError(f"Lefschetz number came out non-integral ({total})")
    return int(total)


def lefschetz_check(f: SimplexMap, G: Complexish) -> bool:
    """Lefschetz number equals the fixed-point index sum."""
    O = oriented(G)
    return lefschetz_number(f, O) == index_sum(f, O.base)


def graph_endomorphisms(g: nx.Graph) -> List[Dict[int, int]]:
    """
    Every vertex map g → g sending edges to edges or to a single vertex.

    Enumerated by backtracking; C₄ has 84 of them, K₃ has 27.
    """
    order = sorted(g.nodes)
    targets = order
    out: List[Dict[int, int]] = []
    phi: Dict[int, int] = {}

    def extend(k: int) -> None:
        if k == len(order):
            out.append(dict(phi))
            return
        v = order[k]
        for w in targets:
            ok = True
            for u in g.neighbors(v):
                if u in phi and phi[u] != w and not g.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                phi[v] = w
                extend(k + 1)
                del phi[v]

    extend(0)
    return out


def graph_automorphisms(g: nx.Graph) -> List[Dict[int, int]]:
    """Automorphisms of ``g`` via networkx isomorphism matching."""
    matcher = nx.algorithms.isomorphism.GraphMatcher(g, g)
    return [dict(m) for m in matcher.isomorphisms_iter()]


def random_continuous_map(G: SimplicialComplex, rng, max_nodes: int = 5000) -> SimplexMap:
    """
    A random continuous self-map x ↦ ∪_{v ∈ x} ψ(v).

    ψ assigns a simplex to each vertex; the assignment is found by
    backtracking over randomly ordered candidates so that every union is a
    simplex. If the node budget runs out, a constant map onto a random
    simplex is returned instead.
    """
    n = len(G)
    if n == 0:
        return SimplexMap(G, G, ())
    masks = G.vertex_masks
    mask_index = G.mask_index
    vertices = list(G.vertex_set)
    vpos = G.vertex_position
    by_last: Dict[int, List[int]] = {v: [] for v in vertices}
    # each simplex is checked once its last vertex (in ``vertices`` order) is assigned
    for i, x in enumerate(G):
        by_last[max(x, key=lambda v: vpos[v])].append(i)
    psi: Dict[int, int] = {}
    budget = [max_nodes]

    def fits(v: int) -> bool:
        for i in by_last[v]:
            union = 0
            for u in G.simplex(i):
                union |= masks[psi[u]]
            if union not in mask_index:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(vertices):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            return False
        v = vertices[k]
        candidates = list(range(n))
        rng.shuffle(candidates)
        for c in candidates:
            psi[v] = c
            if fits(v) and extend(k + 1):
                return True
            del psi[v]
            if budget[0] < 0:
                return False
        return False

    if extend(0):
        images = []
        for x in G:
            union = 0
            for v in x:
                union |= masks[psi[v]]
            images.append(mask_index[union])
        return SimplexMap(G, G, tuple(images))
    c = rng.randrange(n)
    return SimplexMap(G, G, tuple([c] * n))

