"""
Recursive recognition of contractible spaces, spheres, balls and manifolds.

Everything is decided on vertex links. A vertex subset R of a complex K
stands for the induced subcomplex K[R]; contractibility of K[R] is the
recursion

    K[R] is contractible  ⟺  |R| = 1, or some w ∈ R has both lk(w) ∩ R
                              and K[R ∖ w] contractible

which for Whitney complexes is the unit-sphere recursion on the graph. The
recursion runs on vertex bitmasks and is memoized per mask; links are
searched in the same bit space.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from topology_toolkit.complexes.constructors import closure, link
from topology_toolkit.complexes.simplex import SimplicialComplex, iter_bits
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.graphs.graph import whitney_complex
from topology_toolkit.graphs.refinement import edge_refine
from topology_toolkit.recognition.cache import RecognitionCache


class _MaskSearch:
    """Contractibility of induced subcomplexes, by vertex bitmask."""

    def __init__(self, masks: Sequence[int], omegas: Sequence[int]):
        self.masks = masks
        self.omegas = omegas
        self.support = 0
        for m in masks:
            self.support |= m
        self._memo: Dict[int, bool] = {}
        self._links: Dict[int, "_MaskSearch"] = {}
        self._link_size: Dict[int, int] = {}

    @classmethod
    def of(cls, G: SimplicialComplex) -> "_MaskSearch":
        return cls(G.vertex_masks, G.omegas)

    def euler(self, R: int) -> int:
        return sum(w for m, w in zip(self.masks, self.omegas) if not m & ~R)

    def link(self, w: int) -> "_MaskSearch":
        found = self._links.get(w)
        if found is None:
            bit = 1 << w
            masks, omegas = [], []
            for m, om in zip(self.masks, self.omegas):
                if m & bit and m != bit:
                    masks.append(m & ~bit)
                    omegas.append(-om)
            found = self._links[w] = _MaskSearch(masks, omegas)
            self._link_size[w] = bin(found.support).count("1")
        return found

    def _degree(self, w: int) -> Tuple[int, int]:
        self.link(w)
        return self._link_size[w], w

    def contractible(self, R: int) -> bool:
        R &= self.support
        known = self._memo.get(R)
        if known is not None:
            return known
        if R and not R & (R - 1):
            result = True
        elif not R or self.euler(R) != 1:
            result = False
        else:
            result = False
            for w in sorted(iter_bits(R), key=self._degree):
                rest = R & ~(1 << w)
                if self.link(w).contractible(rest) and self.contractible(rest):
                    result = True
                    break
        self._memo[R] = result
        return result


class Recognizer:
    """
    Sphere, ball and manifold recognition with a shared verdict cache.

    Parameters
    ----------
    config : ToolkitConfig, optional
        ``recognition.cache`` switches the cache on or off and
        ``recognition.isomorphism_bound`` bounds isomorphism lookups.
    cache : RecognitionCache, optional
        Share a cache between recognizers.
    verbose : bool, default False
        Print verdicts as they are found.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> r = Recognizer()
    >>> r.is_sphere(closure([[1, 2], [2, 3], [3, 4], [1, 4]]))
    1
    >>> r.is_contractible(closure([[1, 2, 3]]))
    True
    """

    def __init__(
        self,
        config: Optional[ToolkitConfig] = None,
        cache: Optional[RecognitionCache] = None,
        verbose: bool = False,
    ):
        settings = resolve_config(config).recognition
        self.verbose = verbose
        if cache is None and settings['cache']:
            cache = RecognitionCache(settings['isomorphism_bound'])
        self.cache = cache

    def _log(self, message: str) -> None:
        if self.verbose:
            print(f"[DEBUG] {message}")

    def _cached(self, G: SimplicialComplex, name: str, compute: Callable[[], object]):
        if self.cache is not None and self.cache.has(G, name):
            return self.cache.get(G, name)
        value = compute()
        if self.cache is not None:
            self.cache.put(G, name, value)
        self._log(f"{name}({len(G)} simplices) = {value}")
        return value

    # -- verdicts -----------------------------------------------------------

    def is_contractible(self, G: SimplicialComplex) -> bool:
        """
        Collapsibility-style contractibility.

        A single point is contractible; the empty complex is not.
        """
        def compute() -> bool:
            search = _MaskSearch.of(G)
            return search.contractible(search.support)

        return self._cached(G, 'contractible', compute)

    def is_manifold(self, G: SimplicialComplex) -> Optional[int]:
        """
        d if every vertex link is a (d-1)-sphere, else None.

        The empty complex is the (-1)-manifold.
        """
        def compute() -> Optional[int]:
            d = G.dim
            for v in G.vertex_set:
                if self.is_sphere(link(G, (v,))) != d - 1:
                    return None
            return d

        return self._cached(G, 'manifold', compute)

    def is_sphere(self, G: SimplicialComplex) -> Optional[int]:
        """
        d if ``G`` is a d-manifold with a contractible vertex deletion.

        The empty complex is the (-1)-sphere and S⁰ the 0-sphere.
        """
        def compute() -> Optional[int]:
            if len(G) == 0:
                return -1
            d = G.dim
            if G.euler() != 1 + (-1) ** d:
                return None
            if self.is_manifold(G) != d:
                return None
            search = _MaskSearch.of(G)
            for v in iter_bits(search.support):
                if search.contractible(search.support & ~(1 << v)):
                    return d
            return None

        return self._cached(G, 'sphere', compute)

    def is_manifold_with_boundary(
        self, G: SimplicialComplex
    ) -> Optional[Tuple[int, SimplicialComplex]]:
        """
        (d, boundary) if every vertex link is a (d-1)-sphere or a (d-1)-ball.

        The boundary is generated by the (d-1)-simplices lying in exactly
        one d-simplex; it is empty for a manifold without boundary.

        Examples
        --------
        >>> from topology_toolkit.graphs import wheel_graph, whitney_complex
        >>> d, bd = Recognizer().is_manifold_with_boundary(whitney_complex(wheel_graph(4)))
        >>> d, bd.f_vector()
        (2, (4, 4))
        """
        if len(G) == 0:
            return None
        d = G.dim
        for v in G.vertex_set:
            lk = link(G, (v,))
            if self.is_sphere(lk) != d - 1 and self.is_ball(lk) != d - 1:
                return None
        stars = G.star_lists
        top = {i for i, x in enumerate(G) if x.dim == d}
        faces = [
            x for i, x in enumerate(G)
            if x.dim == d - 1 and sum(1 for j in stars[i] if j in top) == 1
        ]
        return d, closure(faces)

    def is_ball(self, G: SimplicialComplex) -> Optional[int]:
        """
        d if ``G`` is a contractible d-manifold with boundary whose boundary
        is a (d-1)-sphere. A point is the 0-ball.
        """
        def compute() -> Optional[int]:
            found = self.is_manifold_with_boundary(G)
            if found is None:
                return None
            d, boundary = found
            if self.is_sphere(boundary) != d - 1:
                return None
            return d if self.is_contractible(G) else None

        return self._cached(G, 'ball', compute)

    def is_dehn_sommerville(self, G: SimplicialComplex, d: int) -> bool:
        """
        χ(G) = 1 + (-1)^d and every vertex link is Dehn-Sommerville of
        dimension d-1; only the empty complex is Dehn-Sommerville for d = -1.
        """
        if d == -1:
            return len(G) == 0
        if len(G) == 0 or d < -1:
            return False

        def compute() -> bool:
            if G.euler() != 1 + (-1) ** d:
                return False
            return all(self.is_dehn_sommerville(link(G, (v,)), d - 1) for v in G.vertex_set)

        return self._cached(G, f'dehn_sommerville_{d}', compute)

    def edge_refine_dehn_sommerville(self, g: nx.Graph, e: Tuple[int, int], d: int) -> Tuple[bool, bool]:
        """Dehn-Sommerville verdicts of Whitney(g) before and after refining ``e``."""
        before = self.is_dehn_sommerville(whitney_complex(g), d)
        after = self.is_dehn_sommerville(whitney_complex(edge_refine(g, e)), d)
        if self.verbose and before and not after:
            print(f"[WARNING] Edge refinement of {e} lost the Dehn-Sommerville property")
        return before, after


_default: List[Recognizer] = []


def default_recognizer() -> Recognizer:
    """Process-wide recognizer used by the module-level functions."""
    if not _default:
        _default.append(Recognizer())
    return _default[0]


def is_contractible(G: SimplicialComplex) -> bool:
    return default_recognizer().is_contractible(G)


def is_sphere(G: SimplicialComplex) -> Optional[int]:
    return default_recognizer().is_sphere(G)


def is_ball(G: SimplicialComplex) -> Optional[int]:
    return default_recognizer().is_ball(G)


def is_manifold(G: SimplicialComplex) -> Optional[int]:
    return default_recognizer().is_manifold(G)


def is_manifold_with_boundary(G: SimplicialComplex) -> Optional[Tuple[int, SimplicialComplex]]:
    return default_recognizer().is_manifold_with_boundary(G)


def is_dehn_sommerville(G: SimplicialComplex, d: int) -> bool:
    return default_recognizer().is_dehn_sommerville(G, d)


def edge_refine_dehn_sommerville(g: nx.Graph, e: Tuple[int, int], d: int) -> Tuple[bool, bool]:
    return default_recognizer().edge_refine_dehn_sommerville(g, e, d)
