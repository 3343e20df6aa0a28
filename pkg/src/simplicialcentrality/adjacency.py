"""
Strength of adjacency between same-dimension simplices and the per-level weighted
simplicial adjacency matrix.

Two distinct k-simplices are adjacent when some simplex of the complex contains both;
the strength of the adjacency is the largest dimension among such simplices. Every
containing simplex is a face of a containing facet, so strengths are read off the
facet list.
"""

import csv
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, TextIO

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix

from simplicialcentrality.apps import get_setting
from simplicialcentrality.common import ArgumentError
from simplicialcentrality.simplicial import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


def strength(c: SimplicialComplex, a: Simplex, b: Simplex) -> int:
    """Dimension of the largest simplex of ``c`` having both ``a`` and ``b`` as faces,
    or 0 when there is none.
    """
    c.require(a)
    c.require(b)
    if len(a) != len(b):
        raise ArgumentError(
            f"Strength is defined between simplices of one dimension, got "
            f"{c.format_simplex(a)} and {c.format_simplex(b)}."
        )
    if a == b:
        raise ArgumentError("Strength is defined between distinct simplices.")
    union = sorted(set(a) | set(b))
    return max((len(f) - 1 for f in c.facets_containing(union)), default=0)


def _check_level(c: SimplicialComplex, k: int):
    if not 0 <= k <= c.dimension:
        raise ArgumentError(
            f"Level {k} is outside 0..{c.dimension} for this complex."
        )


@dataclass(frozen=True)
class LevelAdjacency:
    """The weighted simplicial adjacency matrix of level ``level``.

    ``matrix`` is a symmetric scipy COO matrix (both triangles stored, zero
    diagonal); row/column ``i`` is the simplex ``index[i]``.
    """

    level: int
    index: tuple
    matrix: coo_matrix

    @property
    def size(self) -> int:
        return len(self.index)

    def triplets(self) -> list:
        """Upper-triangle entries ``(i, j, weight)`` with ``i < j``, sorted."""
        return sorted(
            (int(i), int(j), int(w))
            for i, j, w in zip(self.matrix.row, self.matrix.col, self.matrix.data)
            if i < j
        )

    def neighbors(self) -> list:
        """``neighbors[i]`` is the set of positions adjacent to position ``i``."""
        result = [set() for _ in self.index]
        for i, j, _ in self.triplets():
            result[i].add(j)
            result[j].add(i)
        return result

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel().astype(np.int64)

    def to_dense(self, limit: Optional[int] = None) -> np.ndarray:
        if limit is None:
            limit = get_setting("SIMPLICIAL_DENSE_RENDER_LIMIT")
        if self.size > limit:
            raise ArgumentError(
                f"Level {self.level} has {self.size} simplices; dense rendering is "
                f"limited to {limit} (SIMPLICIAL_DENSE_RENDER_LIMIT)."
            )
        return self.matrix.toarray()

    def to_networkx(self) -> nx.Graph:
        """Weighted graph on positions ``0 .. size - 1``; ``weight`` is the strength."""
        g = nx.Graph()
        g.add_nodes_from(range(self.size))
        g.add_weighted_edges_from(self.triplets())
        return g


def weighted_adjacency_matrix(c: SimplicialComplex, k: int) -> LevelAdjacency:
    """Build the level-``k`` weighted simplicial adjacency matrix of ``c``."""
    _check_level(c, k)
    index = c.simplices(k)
    weights = {}
    for f in c.facet_list:
        dim = len(f) - 1
        if dim <= k:
            continue
        # Every pair of k-faces of a facet is adjacent with at least its dimension.
        for a, b in combinations(combinations(f, k + 1), 2):
            key = (c.index(a), c.index(b))
            if weights.get(key, 0) < dim:
                weights[key] = dim

    rows, cols, data = [], [], []
    for (i, j), w in weights.items():
        rows += [i, j]
        cols += [j, i]
        data += [w, w]
    n = len(index)
    matrix = coo_matrix(
        (np.array(data, dtype=np.int64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(n, n),
    )
    logger.debug(f"Level {k}: {n} simplices, {len(weights)} adjacent pairs")
    return LevelAdjacency(level=k, index=index, matrix=matrix)


def level_graph(level: LevelAdjacency) -> nx.Graph:
    return level.to_networkx()


def row_sums(level: LevelAdjacency) -> dict:
    """Row sum of every simplex of the level, keyed by simplex."""
    return dict(zip(level.index, (int(x) for x in level.row_sums())))


########################################################################################
# Export
########################################################################################
def matrix_to_dict(c: SimplicialComplex, level: LevelAdjacency) -> dict:
    """Sparse JSON form: the index labels plus upper-triangle triplets."""
    return {
        "level": level.level,
        "index": [c.format_simplex(s) for s in level.index],
        "entries": [list(t) for t in level.triplets()],
    }


def write_matrix_csv(
    c: SimplicialComplex, level: LevelAdjacency, stream: TextIO, limit: Optional[int] = None
):
    """Dense CSV: a header row of simplex labels, then one labelled row per simplex."""
    dense = level.to_dense(limit=limit)
    names = [c.format_simplex(s) for s in level.index]
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([""] + names)
    for name, row in zip(names, dense):
        writer.writerow([name] + [int(x) for x in row])
