"""
Interaction (Wu) cohomology.

The cochain complex lives on ordered pairs (x, y) of intersecting
simplices, graded by |x| + |y|. The derivative deletes a vertex from x
with sign (-1)^k, or from y with sign (-1)^(|x| + k), where k is the
1-based position of the deleted vertex; faces that no longer intersect
are dropped. Betti numbers are the nullities of the diagonal blocks of
(D + Dᵀ)².
"""

import time
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from topology_toolkit import linalg
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.config import ToolkitConfig, resolve_config
from topology_toolkit.errors import BudgetExceededError

Pair = Tuple[int, int]


class InteractionComplex:
    """
    Intersecting simplex pairs of a complex, blocked by total cardinality.

    Attributes
    ----------
    host : SimplicialComplex
    blocks : dict
        degree → list of pairs (canonical indices), in canonical order.
    """

    def __init__(self, host: SimplicialComplex):
        self.host = host
        masks = host.vertex_masks
        sizes = [len(x) for x in host]
        blocks: Dict[int, List[Pair]] = {}
        for i, mi in enumerate(masks):
            for j, mj in enumerate(masks):
                if mi & mj:
                    blocks.setdefault(sizes[i] + sizes[j], []).append((i, j))
        self.blocks = dict(sorted(blocks.items()))
        self.position: Dict[Pair, int] = {}
        for pairs in self.blocks.values():
            for p, pair in enumerate(pairs):
                self.position[pair] = p

    @property
    def degrees(self) -> List[int]:
        return list(self.blocks)

    @property
    def pairs(self) -> List[Pair]:
        return [pair for pairs in self.blocks.values() for pair in pairs]

    def __len__(self) -> int:
        return len(self.position)

    def derivative_block(self, t: int) -> DomainMatrix:
        """
        Rows: pairs of degree t. Columns: pairs of degree t - 1.
        """
        rows = self.blocks.get(t, [])
        cols = self.blocks.get(t - 1, [])
        G = self.host
        index = G._index
        entries: Dict[Tuple[int, int], int] = {}
        if rows and cols:
            for r, (i, j) in enumerate(rows):
                x, y = G.simplex(i), G.simplex(j)
                for k, face in enumerate(x.boundary_faces(), start=1):
                    c = self.position.get((index[face], j))
                    if c is not None:
                        entries[(r, c)] = entries.get((r, c), 0) + (-1) ** k
                for k, face in enumerate(y.boundary_faces(), start=1):
                    c = self.position.get((i, index[face]))
                    if c is not None:
                        entries[(r, c)] = entries.get((r, c), 0) + (-1) ** (len(x) + k)
        return linalg.sparse_matrix(entries, (len(rows), len(cols)))

    def __repr__(self) -> str:
        return f"<InteractionComplex: {len(self)} pairs in degrees {self.degrees}>"


def wu_betti(
    G: SimplicialComplex,
    budget_seconds: Optional[float] = None,
    config: Optional[ToolkitConfig] = None,
    verbose: bool = False,
) -> List[int]:
    """
    Interaction Betti numbers, one per degree |x| + |y| = 2 .. 2(dim + 1).

    Parameters
    ----------
    G : SimplicialComplex
    budget_seconds : float, optional
        Wall-clock budget, checked between blocks. Defaults to
        ``config.hodge['wu_betti_seconds']``.

    Raises
    ------
    BudgetExceededError
        When the budget runs out before every block is done.

    Examples
    --------
    >>> from topology_toolkit.complexes import closure
    >>> wu_betti(closure([[1, 2], [2, 3], [3, 4], [1, 4]]))
    [0, 1, 1]
    """
    if budget_seconds is None:
        budget_seconds = resolve_config(config).hodge['wu_betti_seconds']
    start = time.monotonic()
    C = InteractionComplex(G)
    if verbose:
        print(f"[INFO] Interaction complex: {len(C):,} pairs")
    degrees = C.degrees
    derivative = {t: C.derivative_block(t) for t in degrees + [degrees[-1] + 1]} if degrees else {}
    out = []
    for t in degrees:
        spent = time.monotonic() - start
        if spent > budget_seconds:
            raise BudgetExceededError("wu_betti", round(spent, 2), budget_seconds)
        n_t = len(C.blocks[t])
        down = derivative[t].transpose()
        up = derivative[t + 1]
        stacked = linalg.vstack([down, up], n_t)
        out.append(n_t - linalg.rank(stacked))
        if verbose:
            print(f"[DEBUG] Degree {t}: {n_t} pairs, nullity {out[-1]}")
    return out
