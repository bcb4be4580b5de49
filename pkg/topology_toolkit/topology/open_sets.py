"""
Open sets of the star topology.

Open sets are bitsets over the canonical simplex order of the host. The
enumerator closes the star basis under unions (the basis is already closed
under intersection up to the empty set) and then adjoins the empty set.
"""

from typing import FrozenSet, Iterator, List, Optional

from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex, iter_bits
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import BudgetExceededError, InvalidComplexError, TopologyLimitExceeded


class Topology:
    """
    The full set of open sets of a complex.

    Parameters
    ----------
    host : SimplicialComplex
    opens : frozenset of int
        Membership bitsets of the open sets, ∅ and the full set included.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> T = enumerate_topology(closure([[1, 2, 3]]))
    >>> len(T), len(T.closed_sets())
    (19, 19)
    """

    def __init__(self, host: SimplicialComplex, opens: FrozenSet[int]):
        self.host = host
        self.opens = frozenset(opens)

    def __len__(self) -> int:
        return len(self.opens)

    def __contains__(self, A) -> bool:
        bits = A.bits if isinstance(A, SimplexSet) else int(A)
        return bits in self.opens

    def __iter__(self) -> Iterator[SimplexSet]:
        for bits in sorted(self.opens, key=lambda b: (b.bit_count(), b)):
            yield SimplexSet(self.host, bits)

    def closed_sets(self) -> FrozenSet[int]:
        full = self.host.full_bits
        return frozenset(full & ~b for b in self.opens)

    def is_topology(self) -> bool:
        """Check the axioms directly (quadratic in the number of opens)."""
        if 0 not in self.opens or self.host.full_bits not in self.opens:
            return False
        opens = list(self.opens)
        for i, a in enumerate(opens):
            for b in opens[i + 1:]:
                if a | b not in self.opens or a & b not in self.opens:
                    return False
        return True

    def __repr__(self) -> str:
        return f"<Topology: {len(self.opens)} open sets on {len(self.host)} simplices>"


class TopologyEnumerator:
    """
    Enumerates all open sets of a complex.

    Parameters
    ----------
    limit : int, optional
        Abort once more than ``limit`` open sets (∅ included) exist. Taken
        from ``config.topology['limit']`` when omitted.
    config : ToolkitConfig, optional
    verbose : bool, default False
        Print progress lines.
    """

    def __init__(
        self,
        limit: Optional[int] = None,
        config: Optional[ToolkitConfig] = None,
        verbose: bool = False,
    ):
        config = resolve_config(config)
        self.limit = limit if limit is not None else config.topology['limit']
        self.verbose = verbose

    def enumerate(self, G: SimplicialComplex) -> Topology:
        """
        Close the star basis under union, then adjoin ∅.

        Raises
        ------
        TopologyLimitExceeded
            When the count passes the limit; carries the partial count.
        """
        basis = sorted(set(G.star_bits))
        opens = set(basis)
        if len(opens) + 1 > self.limit:
            raise TopologyLimitExceeded(self.limit, len(opens))
        frontier: List[int] = list(basis)
        rounds = 0
        while frontier:
            rounds += 1
            fresh: List[int] = []
            for a in frontier:
                for b in basis:
                    c = a | b
                    if c not in opens:
                        opens.add(c)
                        fresh.append(c)
                        if len(opens) + 1 > self.limit:
                            if self.verbose:
                                print(f"[ERROR] Limit {self.limit:,} reached after {rounds} rounds")
                            raise TopologyLimitExceeded(self.limit, len(opens))
            frontier = fresh
            if self.verbose:
                print(f"[DEBUG] Round {rounds}: {len(opens):,} open sets")
        opens.add(0)
        if self.verbose:
            print(f"[INFO] {len(opens):,} open sets on {len(G)} simplices")
        return Topology(G, frozenset(opens))


def enumerate_topology(
    G: SimplicialComplex,
    limit: Optional[int] = None,
    config: Optional[ToolkitConfig] = None,
) -> Topology:
    """
    All open sets of the star topology.

    Examples
    --------
    >>> from topology_toolkit.graphs import whitney_complex, cycle_graph
    >>> len(enumerate_topology(whitney_complex(cycle_graph(4))))
    47
    """
    return TopologyEnumerator(limit=limit, config=config).enumerate(G)


def _own(G: SimplicialComplex, A: SimplexSet) -> SimplexSet:
    if A.host is not G and A.host != G:
        raise InvalidComplexError("Simplex set does not live in this complex")
    return A


def is_open(G: SimplicialComplex, A: SimplexSet) -> bool:
    """Up-closed: x in A and x ⊆ y imply y in A."""
    return _own(G, A).is_open()


def is_closed(G: SimplicialComplex, A: SimplexSet) -> bool:
    """Down-closed: A is a subcomplex."""
    return _own(G, A).is_closed()


def _closed_bits(G: SimplicialComplex, bits: int) -> bool:
    core = G.core_bits
    for i in iter_bits(bits):
        if core[i] & ~bits:
            return False
    return True


def _closure_bits(G: SimplicialComplex, bits: int) -> int:
    core = G.core_bits
    out = 0
    for i in iter_bits(bits):
        out |= core[i]
    return out


def is_locally_closed(G: SimplicialComplex, A: SimplexSet) -> bool:
    """
    Intersection of an open and a closed set.

    Decided as: closure(A) minus A is closed.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> G = closure([[1, 2, 3]])
    >>> is_locally_closed(G, G.subset([[1], [1, 2], [1, 2, 3]]))
    False
    >>> is_locally_closed(G, G.subset([[1, 2]]))
    True
    """
    bits = _own(G, A).bits
    return _closed_bits(G, _closure_bits(G, bits) & ~bits)


def closure(G: SimplicialComplex, A: SimplexSet) -> SimplexSet:
    return _own(G, A).closure()


def interior(G: SimplicialComplex, A: SimplexSet) -> SimplexSet:
    return _own(G, A).interior()


def boundary(G: SimplicialComplex, A: SimplexSet) -> SimplexSet:
    """
    closure(A) ∩ closure(complement of A); always closed.

    For an open set this is closure(A) minus A, so boundary(U(x)) = S(x).
    """
    A = _own(G, A)
    return A.closure() & A.complement().closure()


def is_compact(G: SimplicialComplex, A: SimplexSet) -> bool:
    """Compact means closed in this setting."""
    return is_closed(G, A)


def relative_topology(topology: Topology, K: SimplicialComplex) -> Topology:
    """
    Open sets U ∩ K of the subspace K.

    The result lives on ``K`` itself; for a subcomplex it agrees with
    ``enumerate_topology(K)``.

    Raises
    ------
    InvalidComplexError
        If ``K`` is not contained in the host.
    """
    host = topology.host
    if not K.is_subcomplex_of(host):
        raise InvalidComplexError("Subspace is not contained in the host complex")
    positions = [(host.index(x), j) for j, x in enumerate(K)]
    opens = set()
    for bits in topology.opens:
        out = 0
        for i, j in positions:
            if (bits >> i) & 1:
                out |= 1 << j
        opens.add(out)
    return Topology(K, frozenset(opens))


def locally_closed_count(G: SimplicialComplex, max_simplices: int = 22) -> int:
    """
    Number of locally closed subsets, by exhaustive enumeration.

    The empty set is counted. Whitney(K₃) has 82 of 128, Whitney(K₄) 3771
    of 32768.

    Raises
    ------
    BudgetExceededError
        If the complex has more than ``max_simplices`` simplices.
    """
    n = len(G)
    if n > max_simplices:
        raise BudgetExceededError("locally_closed_count", n, max_simplices)
    count = 0
    for bits in range(1 << n):
        if _closed_bits(G, _closure_bits(G, bits) & ~bits):
            count += 1
    return count
