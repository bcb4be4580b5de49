"""
Exact linear algebra over the integers and rationals.

Thin helpers around sympy's ``DomainMatrix``: ranks and kernels are taken
over QQ, determinants over ZZ (fraction-free elimination). numpy appears
only at the edges, for integer products and exports.
"""

from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from sympy import QQ, ZZ, Rational
from sympy.polys.matrices import DomainMatrix


def _rows(M: DomainMatrix) -> Dict[int, Dict[int, object]]:
    # sparse representation: {row: {col: value}}
    return M.to_sparse().rep


def sparse_matrix(
    entries: Mapping[Tuple[int, int], int],
    shape: Tuple[int, int],
    domain=ZZ,
) -> DomainMatrix:
    """
    Build a DomainMatrix from ``{(row, col): value}``; zeros are skipped.

    Examples
    --------
    >>> M = sparse_matrix({(0, 1): 1, (1, 0): -1}, (2, 2))
    >>> det(M)
    1
    """
    rows: Dict[int, Dict[int, object]] = {}
    for (i, j), value in entries.items():
        if value:
            rows.setdefault(i, {})[j] = domain(value)
    return DomainMatrix(rows, shape, domain)


def from_rows(rows: Sequence[Sequence[int]], domain=ZZ) -> DomainMatrix:
    n = len(rows)
    m = len(rows[0]) if n else 0
    return DomainMatrix([[domain(int(v)) for v in row] for row in rows], (n, m), domain)


def from_numpy(a: np.ndarray, domain=ZZ) -> DomainMatrix:
    return from_rows(a.tolist(), domain)


def to_numpy(M: DomainMatrix) -> np.ndarray:
    """Integer matrix as a numpy int64 array."""
    n, m = M.shape
    out = np.zeros((n, m), dtype=np.int64)
    for i, row in _rows(M).items():
        for j, value in row.items():
            out[i, j] = int(value)
    return out


def rank(M: DomainMatrix) -> int:
    n, m = M.shape
    if n == 0 or m == 0:
        return 0
    return M.convert_to(QQ).rank()


def nullity(M: DomainMatrix) -> int:
    """Dimension of the kernel of ``M`` acting on column vectors."""
    return M.shape[1] - rank(M)


def det(M: DomainMatrix) -> int:
    """Exact determinant over ZZ; 1 for the 0×0 matrix."""
    if M.shape[0] == 0:
        return 1
    return int(M.convert_to(ZZ).det())


def nullspace(M: DomainMatrix) -> List[List[Rational]]:
    """
    Basis of the kernel over QQ, one list per basis vector.

    Examples
    --------
    >>> nullspace(from_rows([[1, 1]]))
    [[-1, 1]]
    """
    n, m = M.shape
    if m == 0:
        return []
    if n == 0:
        return [[Rational(int(i == j)) for j in range(m)] for i in range(m)]
    basis = M.convert_to(QQ).nullspace().to_Matrix()
    return [list(basis.row(i)) for i in range(basis.rows)]


def vstack(blocks: Sequence[DomainMatrix], columns: int, domain=ZZ) -> DomainMatrix:
    """Stack matrices with a common column count (empty blocks allowed)."""
    rows: Dict[int, Dict[int, object]] = {}
    offset = 0
    for block in blocks:
        for i, row in _rows(block.convert_to(domain)).items():
            rows[offset + i] = dict(row)
        offset += block.shape[0]
    return DomainMatrix(rows, (offset, columns), domain)


def trace_on_subspace(basis: List[List[Rational]], operator: np.ndarray) -> Rational:
    """
    Trace of the projection of ``operator`` onto span(basis).

    With K the matrix whose columns form the basis, returns
    tr((KᵀK)⁻¹ KᵀUK).
    """
    k = len(basis)
    if k == 0:
        return Rational(0)
    n = len(basis[0])
    K = DomainMatrix([[QQ.from_sympy(basis[c][r]) for c in range(k)] for r in range(n)], (n, k), QQ)
    U = from_numpy(operator, QQ)
    Kt = K.transpose()
    gram = Kt.matmul(K)
    image = Kt.matmul(U).matmul(K)
    solved = gram.inv().matmul(image)
    return Rational(solved.to_Matrix().trace())
