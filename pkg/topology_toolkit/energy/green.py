"""
Connection matrix, Green matrices and the energy theorems.

For two simplices the stars meet in U(x) ∩ U(y) = U(x ∪ y) when x ∪ y is
a simplex and in ∅ otherwise, and inside a star every intersection
contains its centre, so ω_m(U(z)) = χ(U(z))^m. Star Green entries and
tensor energies therefore never need the enumerated topology.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from topology_toolkit import linalg
from topology_toolkit.characteristics.wu import wu, wu_h
from topology_toolkit.complexes.simplex import SimplexSet, SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import BudgetExceededError, InvalidComplexError, UnsupportedOrderError

REGIONS = ('star', 'sphere', 'ball')


@dataclass(frozen=True)
class ConnectionMatrix:
    """L(x, y) = 1 when x and y intersect; unimodular with det(L) = Π ω(x)."""

    host: SimplicialComplex
    entries: np.ndarray

    def det(self) -> int:
        return linalg.det(linalg.from_numpy(self.entries))


@dataclass(frozen=True)
class GreenMatrix:
    """g(x, y) = ω(x)ω(y)·ω_m(R(x) ∩ R(y)) for a region R ∈ {U, S, B}."""

    host: SimplicialComplex
    entries: np.ndarray
    order: int
    region: str


def _star_euler(G: SimplicialComplex) -> List[int]:
    om = G.omegas
    return [sum(om[y] for y in members) for members in G.star_lists]


def connection_matrix(G: SimplicialComplex) -> ConnectionMatrix:
    """
    L(x, y) = χ(core(x) ∩ core(y)), which is 1 for intersecting simplices.

    Raises
    ------
    InvalidComplexError
        For the empty complex.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> connection_matrix(closure([[1, 2]])).entries.tolist()
    [[1, 0, 1], [0, 1, 1], [1, 1, 1]]
    """
    if len(G) == 0:
        raise InvalidComplexError("The connection matrix of the empty complex is undefined")
    n = len(G)
    core = G.core_bits
    L = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            meet = core[i] & core[j]
            if meet:
                L[i, j] = L[j, i] = SimplexSet(G, meet).euler()
    return ConnectionMatrix(G, L)


def _check_green(m: int, region: str) -> None:
    if m not in (1, 2):
        raise UnsupportedOrderError(f"Green matrices support m=1 or m=2, got m={m}")
    if region not in REGIONS:
        raise ValueError(
            f"Unknown region: '{region}'. Supported regions: {', '.join(REGIONS)}"
        )


def green_matrix(G: SimplicialComplex, m: int = 1, region: str = 'star') -> GreenMatrix:
    """
    Green matrix of order ``m`` over the star, sphere or ball region.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> green_matrix(closure([[1, 2]])).entries.tolist()
    [[0, -1, 1], [-1, 0, 1], [1, 1, -1]]
    """
    _check_green(m, region)
    n = len(G)
    om = G.omegas
    g = np.zeros((n, n), dtype=np.int64)
    if region == 'star':
        chi = _star_euler(G)
        masks = G.vertex_masks
        mask_index = G.mask_index
        for i in range(n):
            for j in range(i, n):
                z = mask_index.get(masks[i] | masks[j])
                if z is not None:
                    g[i, j] = g[j, i] = om[i] * om[j] * chi[z] ** m
    else:
        regions = []
        for bits in G.star_bits:
            U = SimplexSet(G, bits)
            B = U.closure()
            regions.append(B if region == 'ball' else B - U)
        for i in range(n):
            for j in range(i, n):
                meet = regions[i] & regions[j]
                if meet:
                    g[i, j] = g[j, i] = om[i] * om[j] * wu(meet, m)
    return GreenMatrix(G, g, m, region)


def green_h_matrix(G: SimplicialComplex, h: np.ndarray) -> GreenMatrix:
    """
    g_h(x, y) = ω(x)ω(y)·ω_h(U(x) ∩ U(y)) for an interaction matrix ``h``.
    """
    n = len(G)
    h = np.asarray(h, dtype=np.int64)
    if h.shape != (n, n):
        raise ValueError(f"Interaction matrix must be {n} x {n}, got {h.shape}")
    om = G.omegas
    star_energy = []
    for members in G.star_lists:
        idx = np.array(members)
        star_energy.append(int(h[np.ix_(idx, idx)].sum()))
    masks = G.vertex_masks
    mask_index = G.mask_index
    g = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            z = mask_index.get(masks[i] | masks[j])
            if z is not None:
                g[i, j] = om[i] * om[j] * star_energy[z]
    return GreenMatrix(G, g, 2, 'star')


def energy_sum(G: SimplicialComplex, m: int = 1) -> int:
    """
    Total of the order-m star Green tensor; equals ω_m(G).

    Tuples are streamed: a partial tuple whose vertex union is no longer a
    simplex contributes nothing and is pruned.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> energy_sum(closure([[1, 2]]), 3)
    1
    """
    if m not in (1, 2, 3, 4):
        raise UnsupportedOrderError(f"energy_sum supports m=1..4, got m={m}")
    chi = _star_euler(G)
    om = G.omegas
    masks = G.vertex_masks
    mask_index = G.mask_index
    n = len(G)

    def walk(depth: int, union: int, sign: int) -> int:
        if depth == m:
            return sign * chi[mask_index[union]] ** m
        total = 0
        for i in range(n):
            grown = union | masks[i]
            if grown in mask_index:
                total += walk(depth + 1, grown, sign * om[i])
        return total

    return walk(0, 0, 1) if n else 0


def general_energy_check(G: SimplicialComplex, h: np.ndarray) -> bool:
    """Σ g_h(x, y) = ω_h(G)."""
    g = green_h_matrix(G, h)
    return int(g.entries.sum()) == wu_h(G, np.asarray(h))


def curvature(G: SimplicialComplex, x) -> int:
    """
    Row sum of g₁ at ``x``; equals ω(x)·χ(U(x)).

    Raises
    ------
    SimplexNotFoundError
        If ``x`` is not in ``G``.
    """
    i = G.index(x)
    om = G.omegas
    chi = _star_euler(G)
    masks = G.vertex_masks
    mask_index = G.mask_index
    row = 0
    for j in range(len(G)):
        z = mask_index.get(masks[i] | masks[j])
        if z is not None:
            row += om[i] * om[j] * chi[z]
    return row


def green_star_identity(G: SimplicialComplex) -> bool:
    """L · g₁ = I over the integers."""
    L = connection_matrix(G).entries
    g = green_matrix(G, 1, 'star').entries
    return bool(np.array_equal(L @ g, np.eye(len(G), dtype=np.int64)))


def _guard(G: SimplicialComplex, config: Optional[ToolkitConfig], what: str) -> None:
    bound = resolve_config(config).energy['det_size_bound']
    if len(G) > bound:
        raise BudgetExceededError(what, len(G), bound)


def green_matrix_stats(g: GreenMatrix, config: Optional[ToolkitConfig] = None) -> Dict[str, int]:
    """Total, trace, supertrace, exact determinant and nullity."""
    _guard(g.host, config, "green_matrix_stats")
    om = np.array(g.host.omegas, dtype=np.int64)
    M = linalg.from_numpy(g.entries)
    return {
        'total': int(g.entries.sum()),
        'trace': int(np.trace(g.entries)),
        'supertrace': int((om * np.diag(g.entries)).sum()),
        'determinant': linalg.det(M),
        'nullity': linalg.nullity(M),
    }


def nullity_report(G: SimplicialComplex) -> Dict[str, int]:
    """
    Kernel dimensions of the star, ball and sphere Green matrices for m = 1, 2.

    Keys ``g1, b1, s1, g2, b2, s2``.
    """
    out = {}
    for m in (1, 2):
        for key, region in (('g', 'star'), ('b', 'ball'), ('s', 'sphere')):
            entries = green_matrix(G, m, region).entries
            out[f"{key}{m}"] = linalg.nullity(linalg.from_numpy(entries))
    return {k: out[k] for k in ('g1', 'b1', 's1', 'g2', 'b2', 's2')}


def monitor_ones_positive_definite(G: SimplicialComplex, verbose: bool = False) -> Dict[str, bool]:
    """
    Observe whether the Green matrix of the all-ones interaction is
    invertible and positive definite. Reported, never raised.
    """
    n = len(G)
    g = green_h_matrix(G, np.ones((n, n), dtype=np.int64)).entries
    invertible = linalg.det(linalg.from_numpy(g)) != 0 if n else True
    positive = bool(np.all(np.linalg.eigvalsh(g.astype(float)) > 0)) if n else True
    if verbose and not (invertible and positive):
        print(f"[WARNING] All-ones Green matrix: invertible={invertible}, positive definite={positive}")
    return {'invertible': invertible, 'positive_definite': positive}
