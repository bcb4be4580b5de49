"""
Core data types: simplices, finite abstract simplicial complexes and
arbitrary simplex sets inside a host complex.

Simplices are sorted tuples of non-negative vertex ids. A complex stores its
simplices in canonical order (dimension first, then lexicographic), and every
matrix or bitset in the toolkit indexes simplices in that order.
"""

from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from topology_toolkit.errors import InvalidComplexError, SimplexNotFoundError


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class Simplex(tuple):
    """
    A finite nonempty set of vertex ids stored as a strictly ascending tuple.

    Examples
    --------
    >>> x = Simplex((3, 1, 2))
    >>> x
    Simplex(1, 2, 3)
    >>> x.dim, x.omega
    (2, 1)
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]):
        verts = tuple(sorted(set(vertices)))
        if not verts:
            raise InvalidComplexError("A simplex must contain at least one vertex")
        for v in verts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidComplexError(
                    f"Vertex ids must be non-negative integers, got {v!r}"
                )
        return super().__new__(cls, verts)

    @classmethod
    def _trusted(cls, verts: Tuple[int, ...]) -> "Simplex":
        # caller guarantees a sorted, duplicate-free, nonempty tuple
        return tuple.__new__(cls, verts)

    @property
    def dim(self) -> int:
        return len(self) - 1

    @property
    def omega(self) -> int:
        """Parity (-1)^dim."""
        return -1 if len(self) % 2 == 0 else 1

    def faces(self) -> List["Simplex"]:
        """All nonempty subsets, the simplex itself included."""
        out = []
        for k in range(1, len(self) + 1):
            out.extend(Simplex._trusted(c) for c in combinations(self, k))
        return out

    def boundary_faces(self) -> List["Simplex"]:
        """Codimension-one faces, in the order of the deleted position."""
        if len(self) == 1:
            return []
        return [Simplex._trusted(self[:i] + self[i + 1:]) for i in range(len(self))]

    def __repr__(self) -> str:
        return f"Simplex({', '.join(map(str, self))})"

    def label(self) -> str:
        """Compact label used in matrix legends, e.g. ``1-2-3``."""
        return "-".join(map(str, self))


def canonical_key(x: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    return (len(x), tuple(x))


class FVector(tuple):
    """Simplex counts per dimension, ``counts[k]`` = number of k-simplices."""

    __slots__ = ()

    @property
    def euler(self) -> int:
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self))

    @property
    def total(self) -> int:
        return sum(self)


class SimplicialComplex:
    """
    Finite abstract simplicial complex.

    Immutable after construction. Simplices are kept in canonical order and
    indexed; bitsets over that order (see ``SimplexSet``) drive the
    point-set operations.

    Parameters
    ----------
    simplices : iterable of iterables of int
        The simplices. They must already be downward closed unless
        ``validate=False`` is passed by a constructor that guarantees it.
    validate : bool, default True
        Check downward closure.

    Raises
    ------
    InvalidComplexError
        If the collection is not closed under taking nonempty subsets.

    Examples
    --------
    >>> G = SimplicialComplex.from_facets([[1, 2, 3]])
    >>> len(G), G.dim
    (7, 2)
    >>> G.f_vector()
    (3, 3, 1)
    """

    def __init__(self, simplices: Iterable[Iterable[int]] = (), validate: bool = True):
        unique = {s if isinstance(s, Simplex) else Simplex(s) for s in simplices}
        ordered = sorted(unique, key=canonical_key)
        self._simplices: Tuple[Simplex, ...] = tuple(ordered)
        self._index: Dict[Tuple[int, ...], int] = {x: i for i, x in enumerate(ordered)}
        if validate:
            self._check_closed()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of a collection of vertex sets."""
        from topology_toolkit.complexes.constructors import closure

        return closure(facets)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    def _check_closed(self) -> None:
        for x in self._simplices:
            for y in x.boundary_faces():
                if y not in self._index:
                    raise InvalidComplexError(
                        f"Not downward closed: {x.label()} is present but its face "
                        f"{y.label()} is missing"
                    )

    # -- basic protocol -----------------------------------------------------

    @property
    def simplices(self) -> Tuple[Simplex, ...]:
        return self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._simplices)

    def __contains__(self, x) -> bool:
        return tuple(sorted(x)) in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"<SimplicialComplex: {len(self)} simplices, dim {self.dim}>"

    def index(self, x) -> int:
        """Position of ``x`` in canonical order."""
        try:
            return self._index[tuple(sorted(x))]
        except KeyError:
            raise SimplexNotFoundError(f"Simplex {tuple(sorted(x))} is not in the complex") from None

    def simplex(self, i: int) -> Simplex:
        return self._simplices[i]

    # -- derived data -------------------------------------------------------

    @cached_property
    def vertex_set(self) -> Tuple[int, ...]:
        return tuple(x[0] for x in self._simplices if len(x) == 1)

    @cached_property
    def vertex_position(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.vertex_set)}

    @property
    def dim(self) -> int:
        return len(self._simplices[-1]) - 1 if self._simplices else -1

    def f_vector(self) -> FVector:
        counts = [0] * (self.dim + 1)
        for x in self._simplices:
            counts[len(x) - 1] += 1
        return FVector(counts)

    @cached_property
    def omegas(self) -> Tuple[int, ...]:
        return tuple(x.omega for x in self._simplices)

    @cached_property
    def vertex_masks(self) -> Tuple[int, ...]:
        """Each simplex as a bitmask over ``vertex_set`` positions."""
        pos = self.vertex_position
        out = []
        for x in self._simplices:
            m = 0
            for v in x:
                m |= 1 << pos[v]
            out.append(m)
        return tuple(out)

    @cached_property
    def mask_index(self) -> Dict[int, int]:
        return {m: i for i, m in enumerate(self.vertex_masks)}

    @cached_property
    def star_lists(self) -> Tuple[Tuple[int, ...], ...]:
        """For each simplex, indices of the simplices containing it."""
        up: List[List[int]] = [[] for _ in self._simplices]
        for i, x in enumerate(self._simplices):
            for y in x.faces():
                up[self._index[y]].append(i)
        return tuple(tuple(sorted(u)) for u in up)

    @cached_property
    def core_lists(self) -> Tuple[Tuple[int, ...], ...]:
        """For each simplex, indices of its nonempty faces."""
        return tuple(
            tuple(sorted(self._index[y] for y in x.faces())) for x in self._simplices
        )

    @cached_property
    def star_bits(self) -> Tuple[int, ...]:
        out = []
        for members in self.star_lists:
            b = 0
            for j in members:
                b |= 1 << j
            out.append(b)
        return tuple(out)

    @cached_property
    def core_bits(self) -> Tuple[int, ...]:
        out = []
        for members in self.core_lists:
            b = 0
            for j in members:
                b |= 1 << j
            out.append(b)
        return tuple(out)

    @property
    def full_bits(self) -> int:
        return (1 << len(self._simplices)) - 1

    def euler(self) -> int:
        return sum(self.omegas)

    def facets(self) -> List[Simplex]:
        """Locally maximal simplices."""
        return [x for i, x in enumerate(self._simplices) if len(self.star_lists[i]) == 1]

    # -- subsets ------------------------------------------------------------

    def subset(self, members: Iterable[Iterable[int]]) -> "SimplexSet":
        bits = 0
        for x in members:
            bits |= 1 << self.index(x)
        return SimplexSet(self, bits)

    def as_set(self) -> "SimplexSet":
        return SimplexSet(self, self.full_bits)

    def empty_set(self) -> "SimplexSet":
        return SimplexSet(self, 0)

    def union_of(self, *others: "SimplicialComplex") -> "SimplicialComplex":
        simplices = set(self._simplices)
        for other in others:
            simplices.update(other.simplices)
        return SimplicialComplex(simplices, validate=False)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(x in other for x in self._simplices)


class SimplexSet:
    """
    An arbitrary subset of the simplices of a host complex.

    Members are stored as a bitset over the host's canonical order, so union,
    intersection and complement are integer operations.

    Parameters
    ----------
    host : SimplicialComplex
        The ambient complex.
    bits : int
        Membership bitset.
    """

    __slots__ = ("host", "bits")

    def __init__(self, host: SimplicialComplex, bits: int = 0):
        if bits < 0 or bits >> len(host):
            raise InvalidComplexError("Simplex set bits exceed the host complex")
        self.host = host
        self.bits = bits

    def _same_host(self, other: "SimplexSet") -> None:
        if other.host is not self.host and other.host != self.host:
            raise InvalidComplexError("Simplex sets live in different host complexes")

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[Simplex]:
        simplices = self.host.simplices
        for i in iter_bits(self.bits):
            yield simplices[i]

    def indices(self) -> List[int]:
        return list(iter_bits(self.bits))

    def __contains__(self, x) -> bool:
        i = self.host._index.get(tuple(x))
        return i is not None and (self.bits >> i) & 1 == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplexSet):
            return NotImplemented
        return self.bits == other.bits and self.host == other.host

    def __hash__(self) -> int:
        return hash((len(self.host), self.bits))

    def __or__(self, other: "SimplexSet") -> "SimplexSet":
        self._same_host(other)
        return SimplexSet(self.host, self.bits | other.bits)

    def __and__(self, other: "SimplexSet") -> "SimplexSet":
        self._same_host(other)
        return SimplexSet(self.host, self.bits & other.bits)

    def __sub__(self, other: "SimplexSet") -> "SimplexSet":
        self._same_host(other)
        return SimplexSet(self.host, self.bits & ~other.bits)

    def complement(self) -> "SimplexSet":
        return SimplexSet(self.host, self.host.full_bits & ~self.bits)

    def issubset(self, other: "SimplexSet") -> bool:
        return self.bits & ~other.bits == 0

    def members(self) -> Tuple[Simplex, ...]:
        return tuple(self)

    def closure(self) -> "SimplexSet":
        core = self.host.core_bits
        out = 0
        for i in iter_bits(self.bits):
            out |= core[i]
        return SimplexSet(self.host, out)

    def up_closure(self) -> "SimplexSet":
        star = self.host.star_bits
        out = 0
        for i in iter_bits(self.bits):
            out |= star[i]
        return SimplexSet(self.host, out)

    def interior(self) -> "SimplexSet":
        """Largest open set inside this one."""
        star = self.host.star_bits
        out = 0
        for i in iter_bits(self.bits):
            if star[i] & ~self.bits == 0:
                out |= 1 << i
        return SimplexSet(self.host, out)

    def is_open(self) -> bool:
        star = self.host.star_bits
        return all(star[i] & ~self.bits == 0 for i in iter_bits(self.bits))

    def is_closed(self) -> bool:
        core = self.host.core_bits
        return all(core[i] & ~self.bits == 0 for i in iter_bits(self.bits))

    def euler(self) -> int:
        om = self.host.omegas
        return sum(om[i] for i in iter_bits(self.bits))

    def dim(self) -> int:
        return max((len(x) - 1 for x in self), default=-1)

    def to_complex(self) -> SimplicialComplex:
        """The members as a complex; raises if the set is not closed."""
        return SimplicialComplex(self.members())

    def __repr__(self) -> str:
        shown = ", ".join(x.label() for x in list(self)[:6])
        more = ", ..." if len(self) > 6 else ""
        return f"<SimplexSet {len(self)}/{len(self.host)}: {{{shown}{more}}}>"


def simplex_or_none(G: SimplicialComplex, x) -> Optional[int]:
    return G._index.get(tuple(x))
