"""
Exterior derivative, Hodge Laplacian and Betti numbers.

Every simplex is oriented by its ascending vertex order. For a k-simplex x
and the face y obtained by deleting the vertex at position i (0-based),
sign(y, x) = (-1)^i.
"""

from functools import cached_property
from typing import List, Optional, Sequence, Union

import numpy as np
from sympy.polys.matrices import DomainMatrix

from topology_toolkit import linalg
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config


class OrientedComplex:
    """
    A complex with the ascending orientation and its derivative blocks.

    Parameters
    ----------
    base : SimplicialComplex

    Attributes
    ----------
    offsets : list of int
        ``offsets[k]`` is the canonical index of the first k-simplex.
    """

    def __init__(self, base: SimplicialComplex):
        self.base = base
        f = base.f_vector()
        self.f = tuple(f)
        self.offsets = [0]
        for count in f:
            self.offsets.append(self.offsets[-1] + count)

    @staticmethod
    def sign(position: int) -> int:
        return -1 if position % 2 else 1

    @cached_property
    def derivative_blocks(self) -> List[DomainMatrix]:
        """
        ``blocks[k]`` = D_k, the map from (k-1)-forms to k-forms, of shape
        (f_k, f_{k-1}); ``blocks[0]`` is the empty (f_0 × 0) matrix.
        """
        G = self.base
        blocks = []
        for k, count in enumerate(self.f):
            if k == 0:
                blocks.append(linalg.sparse_matrix({}, (count, 0)))
                continue
            lo, below = self.offsets[k], self.offsets[k - 1]
            entries = {}
            for r in range(count):
                x = G.simplex(lo + r)
                for i, y in enumerate(x.boundary_faces()):
                    entries[(r, G._index[y] - below)] = self.sign(i)
            blocks.append(linalg.sparse_matrix(entries, (count, self.f[k - 1])))
        return blocks

    def block(self, k: int) -> DomainMatrix:
        """D_k, or an empty matrix outside 1..dim."""
        if 0 <= k < len(self.f):
            return self.derivative_blocks[k]
        rows = self.f[k] if 0 <= k < len(self.f) else 0
        cols = self.f[k - 1] if 0 <= k - 1 < len(self.f) else 0
        return linalg.sparse_matrix({}, (rows, cols))

    @cached_property
    def dense_blocks(self) -> List[np.ndarray]:
        return [linalg.to_numpy(D) for D in self.derivative_blocks]

    def exterior_derivative(self) -> np.ndarray:
        """Full n × n matrix d with d @ d == 0."""
        n = len(self.base)
        d = np.zeros((n, n), dtype=np.int64)
        for k in range(1, len(self.f)):
            lo, hi = self.offsets[k], self.offsets[k + 1]
            below, top = self.offsets[k - 1], self.offsets[k]
            d[lo:hi, below:top] = self.dense_blocks[k]
        return d

    def hodge_blocks(self) -> List[np.ndarray]:
        """
        Diagonal blocks L_k = D_kD_kᵀ + D_{k+1}ᵀD_{k+1} of (d + dᵀ)².
        """
        out = []
        for k, count in enumerate(self.f):
            L = np.zeros((count, count), dtype=np.int64)
            if k > 0:
                D = self.dense_blocks[k]
                L += D @ D.T
            if k + 1 < len(self.f):
                D = self.dense_blocks[k + 1]
                L += D.T @ D
            out.append(L)
        return out

    @cached_property
    def ranks(self) -> List[int]:
        return [linalg.rank(D) for D in self.derivative_blocks] + [0]

    def betti(self) -> List[int]:
        r = self.ranks
        return [count - r[k] - r[k + 1] for k, count in enumerate(self.f)]

    def harmonic_basis(self, k: int) -> List[list]:
        """Exact basis of ker L_k = ker D_kᵀ ∩ ker D_{k+1}."""
        if not 0 <= k < len(self.f):
            return []
        down = self.block(k).transpose()
        up = self.block(k + 1)
        stacked = linalg.vstack([down, up], self.f[k])
        return linalg.nullspace(stacked)

    def __repr__(self) -> str:
        return f"<OrientedComplex: f={self.f}>"


Complexish = Union[SimplicialComplex, OrientedComplex]


def oriented(G: Complexish) -> OrientedComplex:
    return G if isinstance(G, OrientedComplex) else OrientedComplex(G)


def exterior_derivative(G: Complexish) -> np.ndarray:
    """
    Exterior derivative as an n × n integer matrix in canonical order.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> exterior_derivative(closure([[1, 2]]))[2].tolist()
    [-1, 1, 0]
    """
    return oriented(G).exterior_derivative()


def hodge_blocks(G: Complexish) -> List[np.ndarray]:
    return oriented(G).hodge_blocks()


def betti(G: Complexish) -> List[int]:
    """
    Betti numbers over the rationals.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> betti(closure([[1, 2], [2, 3], [3, 4], [1, 4]]))
    [1, 1]
    """
    return oriented(G).betti()


def harmonic_basis(G: Complexish, k: int) -> List[list]:
    return oriented(G).harmonic_basis(k)


def euler_poincare_check(G: Complexish) -> bool:
    """Σ (-1)^k f_k = Σ (-1)^k b_k."""
    O = oriented(G)
    lhs = sum((-1) ** k * c for k, c in enumerate(O.f))
    rhs = sum((-1) ** k * b for k, b in enumerate(O.betti()))
    return lhs == rhs


def heat_supertrace(G: Complexish, t: float) -> float:
    """str(exp(-tL)) from the block eigenvalues."""
    total = 0.0
    for k, L in enumerate(oriented(G).hodge_blocks()):
        if L.size == 0:
            continue
        eigenvalues = np.linalg.eigvalsh(L.astype(float))
        total += (-1) ** k * float(np.exp(-t * eigenvalues).sum())
    return total


def mckean_singer_check(
    G: Complexish,
    t: float,
    tolerance: Optional[float] = None,
    config: Optional[ToolkitConfig] = None,
) -> bool:
    """
    |str(exp(-tL)) - χ| below the tolerance (default 1e-8).

    Raises
    ------
    ValueError
        If ``t`` is not positive.
    """
    if t <= 0:
        raise ValueError(f"Heat time must be positive, got {t}")
    if tolerance is None:
        tolerance = resolve_config(config).hodge['heat_tolerance']
    O = oriented(G)
    chi = sum((-1) ** k * c for k, c in enumerate(O.f))
    return abs(heat_supertrace(O, t) - chi) < tolerance


def block_sizes(G: Complexish) -> Sequence[int]:
    return oriented(G).f
