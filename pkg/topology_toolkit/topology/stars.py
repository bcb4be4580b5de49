"""
Stars, cores, unit balls and unit spheres.
"""

from dataclasses import dataclass
from typing import Dict, Iterable

from topology_toolkit.complexes.simplex import Simplex, SimplexSet, SimplicialComplex


def star(G: SimplicialComplex, x: Iterable[int]) -> SimplexSet:
    """
    Smallest open neighbourhood U(x): every simplex containing ``x``.

    Raises
    ------
    SimplexNotFoundError
        If ``x`` is not in ``G``.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> G = closure([[1, 2]])
    >>> [tuple(y) for y in star(G, [1])]
    [(1,), (1, 2)]
    """
    return SimplexSet(G, G.star_bits[G.index(x)])


def core(G: SimplicialComplex, x: Iterable[int]) -> SimplexSet:
    """Closure of {x}: all nonempty faces of ``x``."""
    return SimplexSet(G, G.core_bits[G.index(x)])


def unit_ball(G: SimplicialComplex, x: Iterable[int]) -> SimplexSet:
    """B(x), the closure of the star."""
    return star(G, x).closure()


def unit_sphere(G: SimplicialComplex, x: Iterable[int]) -> SimplexSet:
    """
    S(x) = B(x) minus U(x), a closed set.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> G = closure([[1, 2]])
    >>> [tuple(y) for y in unit_sphere(G, [1, 2])]
    [(1,), (2,)]
    """
    U = star(G, x)
    return U.closure() - U


@dataclass(frozen=True)
class StarBasis:
    """
    The star basis of the topology of a complex.

    Attributes
    ----------
    host : SimplicialComplex
    stars : dict
        Simplex → U(x).
    """

    host: SimplicialComplex
    stars: Dict[Simplex, SimplexSet]

    @classmethod
    def of(cls, G: SimplicialComplex) -> "StarBasis":
        return cls(G, {x: SimplexSet(G, b) for x, b in zip(G, G.star_bits)})

    def __len__(self) -> int:
        return len(self.stars)

    def intersection(self, x: Iterable[int], y: Iterable[int]) -> SimplexSet:
        """U(x) ∩ U(y); equals U(x ∪ y) or is empty."""
        G = self.host
        return SimplexSet(G, G.star_bits[G.index(x)] & G.star_bits[G.index(y)])

    def is_t0_witness(self) -> bool:
        """Distinct simplices have distinct stars."""
        return len({s.bits for s in self.stars.values()}) == len(self.stars)
