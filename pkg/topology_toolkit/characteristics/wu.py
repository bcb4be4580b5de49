"""
Euler and Wu characteristics of simplex sets.

ω_m(A) sums Π ω(x_i) over m-tuples of simplices of A whose common
intersection is itself a member of A. ``wu`` evaluates it by grouping
tuples by their intersection and inverting over the face poset:

    ω_m(A) = Σ_{w ∈ A} ω(w) Σ_{z ⊇ w} ω(z) F(z)^m,   F(z) = Σ_{x ∈ A, x ⊇ z} ω(x)

which is linear in the total star size. ``wu_bruteforce`` is the literal
tuple sum.
"""

from itertools import product
from typing import Callable, Optional, Tuple, Union

import numpy as np
import pandas as pd

from topology_toolkit.complexes.constructors import induced_subcomplex
from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex, iter_bits
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import InvalidComplexError, UnsupportedOrderError

SUPPORTED_ORDERS = (1, 2, 3, 4)

SetLike = Union[SimplexSet, SimplicialComplex]


def _as_set(A: SetLike) -> SimplexSet:
    return A.as_set() if isinstance(A, SimplicialComplex) else A


def _check_order(m: int) -> None:
    if m not in SUPPORTED_ORDERS:
        raise UnsupportedOrderError(
            f"Unsupported order m={m}. Supported orders: {', '.join(map(str, SUPPORTED_ORDERS))}"
        )


def euler(A: SetLike) -> int:
    """
    Σ ω(x) over the members; a valuation on arbitrary subsets.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> euler(closure([[1, 2], [2, 3], [3, 4], [1, 4]]))
    0
    """
    return _as_set(A).euler()


def wu(A: SetLike, m: int = 2, config: Optional[ToolkitConfig] = None) -> int:
    """
    Wu characteristic ω_m of an arbitrary simplex set.

    Parameters
    ----------
    A : SimplexSet or SimplicialComplex
    m : int, default 2
        Order, 1 to 4.

    Raises
    ------
    UnsupportedOrderError
        If ``m`` is outside 1..4.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> G = closure([[1, 2, 3]])
    >>> wu(G.subset([[1, 2, 3]]))
    1
    >>> wu(G.subset([[1, 2, 3], [1, 2]]))
    0
    """
    _check_order(m)
    A = _as_set(A)
    G = A.host
    if A.bits == G.full_bits and len(G) > resolve_config(config).characteristics['fast_threshold']:
        return wu_fast(G, m)
    om = G.omegas
    stars = G.star_lists
    F = [0] * len(G)
    for z, members in enumerate(stars):
        F[z] = sum(om[x] for x in members if (A.bits >> x) & 1)
    total = 0
    for w in iter_bits(A.bits):
        inner = 0
        for z in stars[w]:
            if F[z]:
                inner += om[z] * F[z] ** m
        total += om[w] * inner
    return total


def wu_bruteforce(A: SetLike, m: int = 2) -> int:
    """Literal m-fold tuple sum, for cross-checking ``wu`` on small sets."""
    _check_order(m)
    A = _as_set(A)
    G = A.host
    masks = G.vertex_masks
    mask_index = G.mask_index
    om = G.omegas
    members = A.indices()
    total = 0
    for tup in product(members, repeat=m):
        meet = -1
        sign = 1
        for i in tup:
            meet &= masks[i]
            sign *= om[i]
            if not meet:
                break
        if not meet:
            continue
        j = mask_index.get(meet)
        if j is not None and (A.bits >> j) & 1:
            total += sign
    return total


def wu_fast(G: SimplicialComplex, m: int = 2) -> int:
    """
    Star formula Σ_x ω(x) ω_m(U(x)) for a full complex.

    Inside a star every intersection contains x, so ω_m(U(x)) = χ(U(x))^m.

    Examples
    --------
    >>> from topology_toolkit.graphs import whitney_complex
    >>> import networkx as nx
    >>> wu_fast(whitney_complex(nx.octahedral_graph()))
    2
    """
    _check_order(m)
    om = G.omegas
    total = 0
    for x, members in enumerate(G.star_lists):
        chi_star = sum(om[y] for y in members)
        total += om[x] * chi_star ** m
    return total


def wu_h(A: SetLike, h: Union[np.ndarray, Callable[[int, int], int]]) -> int:
    """
    Interaction-weighted characteristic Σ h(x, y) over x, y ∈ A with x ∩ y ∈ A.

    ``h`` is an n × n matrix over the host's canonical order, or a
    function of two canonical indices.
    """
    A = _as_set(A)
    G = A.host
    weight = h if callable(h) else (lambda i, j: int(h[i, j]))
    masks = G.vertex_masks
    mask_index = G.mask_index
    members = A.indices()
    total = 0
    for i in members:
        for j in members:
            meet = masks[i] & masks[j]
            if not meet:
                continue
            k = mask_index.get(meet)
            if k is not None and (A.bits >> k) & 1:
                total += weight(i, j)
    return total


def ball_formula_check(G: SimplicialComplex, m: int = 2) -> bool:
    """
    Σ_x ω(x) ω_m(B(x)) = ω_m(G) and Σ_x ω(x) ω_m(S(x)) = 0.
    """
    _check_order(m)
    om = G.omegas
    ball_sum = 0
    sphere_sum = 0
    for i, bits in enumerate(G.star_bits):
        U = SimplexSet(G, bits)
        B = U.closure()
        ball_sum += om[i] * wu(B, m)
        sphere_sum += om[i] * wu(B - U, m)
    return ball_sum == wu_fast(G, m) and sphere_sum == 0


def relative_wu(G: SimplicialComplex, H: SimplicialComplex) -> int:
    """
    Σ ω(x)ω(y) over x ∈ G, y ∈ H with x ∩ y ≠ ∅.

    Raises
    ------
    InvalidComplexError
        If ``H`` is not a subcomplex of ``G``.
    """
    if not H.is_subcomplex_of(G):
        raise InvalidComplexError("relative_wu needs a subcomplex as second argument")
    pos = G.vertex_position
    h_masks = []
    for y in H:
        mask = 0
        for v in y:
            mask |= 1 << pos[v]
        h_masks.append((mask, y.omega))
    total = 0
    for mx, wx in zip(G.vertex_masks, G.omegas):
        for my, wy in h_masks:
            if mx & my:
                total += wx * wy
    return total


def relative_wu_under_refinement(
    G: SimplicialComplex,
    H: SimplicialComplex,
    verbose: bool = False,
) -> Tuple[int, int]:
    """
    ω(G, H) before and after one Barycentric refinement of the pair.

    A change is only reported, never raised.
    """
    from topology_toolkit.graphs.refinement import barycentric_refine

    before = relative_wu(G, H)
    G1, mapping = barycentric_refine(G, return_mapping=True)
    H1 = induced_subcomplex(G1, [v for v, x in mapping.items() if x in H])
    after = relative_wu(G1, H1)
    if verbose and before != after:
        print(f"[WARNING] Relative Wu characteristic changed under refinement: {before} -> {after}")
    return before, after


def fermi_characteristic(G: SimplicialComplex) -> int:
    """
    Π ω(x), equal to det(L).

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> fermi_characteristic(closure([[1, 2]]))
    -1
    """
    odd = sum(1 for w in G.omegas if w < 0)
    return -1 if odd % 2 else 1


def star_characteristics(G: SimplicialComplex, m: int = 2) -> pd.DataFrame:
    """
    Table of χ and ω_m of U(x), B(x) and S(x) for every simplex.

    The column ``wu_ge_euler`` monitors ω_m(U(x)) ≥ χ(U(x)).
    """
    _check_order(m)
    rows = []
    for x, bits in zip(G, G.star_bits):
        U = SimplexSet(G, bits)
        B = U.closure()
        S = B - U
        chi_u, wu_u = U.euler(), wu(U, m)
        rows.append({
            'simplex': x.label(),
            'dim': x.dim,
            'omega': x.omega,
            'euler_U': chi_u,
            'wu_U': wu_u,
            'euler_B': B.euler(),
            'wu_B': wu(B, m),
            'euler_S': S.euler(),
            'wu_S': wu(S, m),
            'wu_ge_euler': wu_u >= chi_u,
        })
    return pd.DataFrame(rows)
