"""
Seeded random graphs and Whitney complexes.

All randomness comes from a SplitMix64 stream so that a seed gives the same
complexes on every platform and Python version:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    next = z ^ (z >> 31)

(all arithmetic mod 2^64). ``random()`` is ``(next >> 11) * 2^-53``.
"""

from itertools import combinations
from typing import Iterable, List, MutableSequence, Optional

import networkx as nx

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.graphs.graph import whitney_complex

_MASK = (1 << 64) - 1


class SplitMix64:
    """
    64-bit SplitMix pseudo-random stream.

    Examples
    --------
    >>> rng = SplitMix64(7)
    >>> a = [rng.randrange(10) for _ in range(5)]
    >>> rng = SplitMix64(7)
    >>> a == [rng.randrange(10) for _ in range(5)]
    True
    """

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), rejection-sampled from the top bits."""
        if n <= 0:
            raise ValueError(f"randrange() needs a positive bound, got {n}")
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        while True:
            r = self.next() >> (64 - bits)
            if r < n:
                return r

    def choice(self, seq):
        if not seq:
            raise IndexError("Cannot choose from an empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, seq: MutableSequence) -> None:
        """Fisher-Yates, from the last position down."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randrange(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def __repr__(self) -> str:
        return f"<SplitMix64: state={self.state:#018x}>"


def _rng(rng: Optional[SplitMix64], seed: int) -> SplitMix64:
    return rng if rng is not None else SplitMix64(seed)


def erdos_renyi(n: int, p: float, rng: Optional[SplitMix64] = None, seed: int = 0) -> nx.Graph:
    """
    G(n, p) on vertices 1..n.

    Vertex pairs are visited in lexicographic order, one ``random()`` draw
    each; the pair becomes an edge when the draw is below ``p``.

    Raises
    ------
    ValueError
        If ``p`` is outside [0, 1] or ``n`` is negative.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"Vertex count must be non-negative, got {n}")
    rng = _rng(rng, seed)
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    for a, b in combinations(range(1, n + 1), 2):
        if rng.random() < p:
            g.add_edge(a, b)
    return g


def random_graph_nm(n: int, m: int, rng: Optional[SplitMix64] = None, seed: int = 0) -> nx.Graph:
    """
    Uniform graph with ``n`` vertices and exactly ``m`` edges.

    The lexicographic pair list is shuffled and its first ``m`` pairs kept.

    Examples
    --------
    >>> g = random_graph_nm(14, 30, seed=1)
    >>> g.number_of_nodes(), g.number_of_edges()
    (14, 30)
    """
    pairs: List = list(combinations(range(1, n + 1), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"A graph on {n} vertices has between 0 and {len(pairs)} edges, got {m}")
    rng = _rng(rng, seed)
    rng.shuffle(pairs)
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(pairs[:m])
    return g


def random_whitney(
    n: int,
    p: Optional[float] = None,
    m: Optional[int] = None,
    seed: int = 0,
    rng: Optional[SplitMix64] = None,
) -> SimplicialComplex:
    """
    Whitney complex of a random graph, G(n, p) or G(n, m).

    Exactly one of ``p`` and ``m`` must be given.
    """
    if (p is None) == (m is None):
        raise ValueError("Give exactly one of p (edge probability) or m (edge count)")
    rng = _rng(rng, seed)
    g = erdos_renyi(n, p, rng) if p is not None else random_graph_nm(n, m, rng)
    return whitney_complex(g)


def random_whitney_family(
    count: int,
    vertices: Iterable[int],
    p: float,
    max_simplices: int,
    seed: int = 0,
) -> List[SimplicialComplex]:
    """
    ``count`` nonempty random Whitney complexes with at most ``max_simplices``
    simplices, vertex counts drawn from the inclusive range ``vertices``.

    Oversized draws are discarded; the stream makes the family a function
    of the arguments.
    """
    lo, hi = vertices
    rng = SplitMix64(seed)
    family: List[SimplicialComplex] = []
    attempts = 0
    while len(family) < count and attempts < 100 * max(count, 1):
        attempts += 1
        n = lo + rng.randrange(hi - lo + 1)
        G = whitney_complex(erdos_renyi(n, p, rng))
        if 0 < len(G) <= max_simplices:
            family.append(G)
    return family
