"""
Boundary matrices and Betti numbers over the two-element field.

Working mod 2 drops the orientation signs of the boundary operator. Betti numbers
over GF(2) agree with rational Betti numbers unless the integral homology has
2-torsion, which clique complexes of small networks practically never show; the
commands print the coefficient field with every Betti report.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np
from scipy.sparse import csc_matrix, csr_matrix, issparse

from simplicialcentrality.apps import get_setting
from simplicialcentrality.common import ArgumentError
from simplicialcentrality.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


class BettiVector(tuple):
    """Betti numbers ``(b0, b1, ..., b_max_dim)``."""

    def __repr__(self):
        return f"BettiVector({list(self)})"


@dataclass(frozen=True)
class BoundaryMatrix:
    """Face incidence of the k-simplices (columns) on the (k-1)-simplices (rows)."""

    k: int
    rows: tuple
    columns: tuple
    matrix: csc_matrix

    @property
    def shape(self):
        return self.matrix.shape

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()


def boundary_matrix(c: SimplicialComplex, k: int) -> BoundaryMatrix:
    if not 1 <= k <= c.dimension:
        raise ArgumentError(f"Boundary matrices exist for 1 <= k <= {c.dimension}, got {k}.")
    rows, columns = c.simplices(k - 1), c.simplices(k)
    row_ind, col_ind = [], []
    for j, s in enumerate(columns):
        for face in combinations(s, k):
            row_ind.append(c.index(face))
            col_ind.append(j)
    data = np.ones(len(row_ind), dtype=np.uint8)
    matrix = csc_matrix((data, (row_ind, col_ind)), shape=(len(rows), len(columns)))
    return BoundaryMatrix(k=k, rows=rows, columns=columns, matrix=matrix)


########################################################################################
# Rank over GF(2)
########################################################################################
def _packed_rows(matrix):
    """Yield each row as a Python int with bit j set for a 1 in column j."""
    if issparse(matrix):
        csr = csr_matrix(matrix)
        csr.sum_duplicates()
        for i in range(csr.shape[0]):
            start, end = csr.indptr[i], csr.indptr[i + 1]
            bits = 0
            for j, v in zip(csr.indices[start:end], csr.data[start:end]):
                if v % 2:
                    bits |= 1 << int(j)
            yield bits
        return
    packed = np.packbits((np.asarray(matrix) % 2).astype(np.uint8), axis=1, bitorder="little")
    for row in packed:
        yield int.from_bytes(row.tobytes(), "little")


def _dense_rank(matrix) -> int:
    # A row operation is a single XOR over the whole packed row. Rows are reduced
    # against pivots keyed by their lowest bit.
    pivots = {}
    for bits in _packed_rows(matrix):
        while bits:
            low = bits & -bits
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = bits
                break
            bits ^= pivot
    return len(pivots)


def _sparse_rank(matrix) -> int:
    # Column reduction on sets of row indices: add earlier columns sharing the same
    # lowest row until the lowest row is new or the column vanishes.
    matrix = csc_matrix(matrix)
    by_low = {}
    rank = 0
    for j in range(matrix.shape[1]):
        start, end = matrix.indptr[j], matrix.indptr[j + 1]
        column = {int(r) for r, v in zip(matrix.indices[start:end], matrix.data[start:end]) if v % 2}
        while column:
            low = max(column)
            if low not in by_low:
                by_low[low] = column
                rank += 1
                break
            column = column ^ by_low[low]
    return rank


def gf2_rank(matrix, dense_columns_limit: Optional[int] = None) -> int:
    """Rank over GF(2) of a 0/1 matrix (numpy array or scipy sparse matrix)."""
    if dense_columns_limit is None:
        dense_columns_limit = get_setting("SIMPLICIAL_DENSE_RANK_COLUMNS")
    n_rows, n_cols = matrix.shape
    if n_rows == 0 or n_cols == 0:
        return 0
    if n_cols < dense_columns_limit:
        return _dense_rank(matrix)
    logger.debug(f"Using sparse elimination for a {n_rows}x{n_cols} matrix")
    return _sparse_rank(matrix)


def boundary_ranks(c: SimplicialComplex, top: int, threads: Optional[int] = None) -> dict:
    """``{k: rank of the k-th boundary matrix}`` for 1 <= k <= min(top, K)."""
    ks = list(range(1, min(top, c.dimension) + 1))
    if threads == 1 or len(ks) < 2:
        ranks = [gf2_rank(boundary_matrix(c, k).matrix) for k in ks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ranks = list(pool.map(lambda k: gf2_rank(boundary_matrix(c, k).matrix), ks))
    return dict(zip(ks, ranks))


def betti_numbers(
    c: SimplicialComplex, max_dim: Optional[int] = None, threads: Optional[int] = None
) -> BettiVector:
    """b_k = f_k - rank d_k - rank d_(k+1) for k = 0 .. max_dim."""
    if max_dim is None:
        max_dim = get_setting("SIMPLICIAL_HOMOLOGY_DIM")
    if max_dim < 0:
        raise ArgumentError(f"max_dim must be non-negative, got {max_dim}.")
    ranks = boundary_ranks(c, max_dim + 1, threads=threads)
    f = c.f_vector
    betti = []
    for k in range(max_dim + 1):
        f_k = f[k] if k < len(f) else 0
        betti.append(f_k - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return BettiVector(betti)


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** k * f_k for k, f_k in enumerate(c.f_vector))


def nested_betti_numbers(order, checkpoints, max_dim: int) -> list:
    """
    Betti numbers of every prefix ``order[:n]`` for ``n`` in ``checkpoints``
    (non-decreasing). Each prefix must itself be a complex, faces before cofaces.

    The boundary columns are reduced once, in order. A column is only ever reduced
    by earlier columns, so the non-zero reduced columns within a prefix count the
    rank of that prefix's boundary matrix.
    """
    arrival = {}
    pivots = {}
    counts = [0] * (max_dim + 1)
    ranks = [0] * (max_dim + 2)
    checkpoints = list(checkpoints)
    result = []

    def emit(position):
        while len(result) < len(checkpoints) and checkpoints[len(result)] == position:
            result.append(
                BettiVector(counts[k] - ranks[k] - ranks[k + 1] for k in range(max_dim + 1))
            )

    emit(0)
    for position, s in enumerate(order, start=1):
        k = len(s) - 1
        arrival[s] = position
        if k <= max_dim:
            counts[k] += 1
        if 1 <= k <= max_dim + 1:
            column = {arrival[face] for face in combinations(s, k)}
            while column:
                low = max(column)
                pivot = pivots.get(low)
                if pivot is None:
                    pivots[low] = column
                    ranks[k] += 1
                    break
                column ^= pivot
        emit(position)
    if len(result) != len(checkpoints):
        raise ArgumentError("Checkpoints must be non-decreasing prefix lengths of the order.")
    logger.debug(f"Reduced {len(order)} simplices for {len(checkpoints)} filtration steps")
    return result
