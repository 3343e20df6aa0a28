"""
Generalised centrality measures on the simplices of a complex.

- maximal generalised degree: sum of the dimensions of the facets strictly
  containing a simplex;
- generalised clustering coefficient: adjacencies among a simplex's same-level
  neighbours over D(D-1)/2, optionally rescaled per dimension by its maximum;
- generalised weighted betweenness: share of minimum-weight paths between other
  pairs of same-level simplices that pass through a simplex, where path weight is
  the sum of the adjacency strengths along the path.

Scores that are not integers are kept as ``fractions.Fraction`` so results can be
compared exactly; exports convert them to floats.
"""

import heapq
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, count
from typing import Optional, Sequence

import networkx as nx

from simplicialcentrality.adjacency import (
    LevelAdjacency,
    _check_level,
    weighted_adjacency_matrix,
)
from simplicialcentrality.apps import get_setting
from simplicialcentrality.common import ArgumentError, Measure
from simplicialcentrality.simplicial import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


@dataclass
class ScoreMap:
    """Scores of one measure, keyed by simplex.

    ``level`` is set when every scored simplex belongs to one level (betweenness is
    always computed level by level, each simplex at its own dimension).
    """

    measure: str
    scores: dict = field(default_factory=dict)
    level: Optional[int] = None

    def __getitem__(self, s):
        return self.scores[s]

    def __contains__(self, s):
        return s in self.scores

    def __len__(self):
        return len(self.scores)

    def __iter__(self):
        return iter(self.scores)

    def items(self):
        return self.scores.items()

    def by_dimension(self) -> dict:
        result = {}
        for s, score in self.scores.items():
            result.setdefault(len(s) - 1, {})[s] = score
        return result

    def maximum(self, dim: Optional[int] = None):
        values = [v for s, v in self.scores.items() if dim is None or len(s) - 1 == dim]
        return max(values, default=0)

    def argmax(self, dim: Optional[int] = None) -> Optional[Simplex]:
        """Highest-scoring simplex; ties go to the canonically first one."""
        candidates = [
            (s, v) for s, v in self.scores.items() if dim is None or len(s) - 1 == dim
        ]
        if not candidates:
            return None
        best = max(v for _, v in candidates)
        return min((len(s), s) for s, v in candidates if v == best)[1]

    @classmethod
    def merge(cls, measure: str, maps: Sequence["ScoreMap"]) -> "ScoreMap":
        scores = {}
        for m in maps:
            scores.update(m.scores)
        return cls(measure=measure, scores=scores)


@dataclass(frozen=True)
class LevelComponents:
    level: int
    blocks: tuple  # tuple of sorted tuples of simplices, ordered by first simplex

    def component_of(self, s: Simplex) -> tuple:
        for block in self.blocks:
            if s in block:
                return block
        raise ArgumentError(f"{s} is not a {self.level}-simplex.")

    def __len__(self):
        return len(self.blocks)


########################################################################################
# Maximal generalised degree
########################################################################################
def maximal_generalised_degree(c: SimplicialComplex, s: Simplex) -> int:
    c.require(s)
    return sum(len(f) - 1 for f in c.facets_containing(s) if len(f) > len(s))


def maximal_generalised_degrees(c: SimplicialComplex) -> ScoreMap:
    """Degree of every simplex, accumulated facet by facet."""
    scores = dict.fromkeys(c, 0)
    for f in c.facet_list:
        dim = len(f) - 1
        for size in range(1, len(f)):
            for s in combinations(f, size):
                scores[s] += dim
    return ScoreMap(measure=Measure.DEGREE, scores=scores)


########################################################################################
# Generalised clustering coefficient
########################################################################################
def _gcc(pairs: int, degree: int) -> Fraction:
    if degree <= 1:
        return Fraction(0)
    return Fraction(2 * pairs, degree * (degree - 1))


def level_neighbors(c: SimplicialComplex, s: Simplex) -> set:
    """The same-dimension simplices adjacent to ``s``."""
    c.require(s)
    k = len(s)
    result = set()
    for f in c.facets_containing(s):
        if len(f) > k:
            result.update(t for t in combinations(f, k) if t != s)
    return result


def generalised_clustering_coefficient(c: SimplicialComplex, s: Simplex) -> Fraction:
    neighbors = sorted(level_neighbors(c, s))
    pairs = sum(
        1
        for a, b in combinations(neighbors, 2)
        if c.facets_containing(sorted(set(a) | set(b)))
    )
    return _gcc(pairs, maximal_generalised_degree(c, s))


def generalised_clustering_coefficients(
    c: SimplicialComplex, degrees: Optional[ScoreMap] = None
) -> ScoreMap:
    """Raw GCC of every simplex, one adjacency matrix per level."""
    if degrees is None:
        degrees = maximal_generalised_degrees(c)
    scores = {}
    for k in range(c.dimension + 1):
        level = weighted_adjacency_matrix(c, k)
        neighbors = level.neighbors()
        for i, s in enumerate(level.index):
            pairs = sum(len(neighbors[i] & neighbors[j]) for j in neighbors[i]) // 2
            scores[s] = _gcc(pairs, degrees[s])
    return ScoreMap(measure=Measure.GCC, scores=scores)


def normalize_gcc(scores: ScoreMap) -> ScoreMap:
    """Divide each score by the largest score of the same dimension."""
    maxima = {dim: max(values.values()) for dim, values in scores.by_dimension().items()}
    normalized = {}
    for s, value in scores.items():
        top = maxima[len(s) - 1]
        normalized[s] = Fraction(value) / top if top else Fraction(0)
    return ScoreMap(measure=Measure.GCC_NORMALIZED, scores=normalized)


########################################################################################
# Level connectivity and walks
########################################################################################
def level_components(c: SimplicialComplex, k: int) -> LevelComponents:
    level = weighted_adjacency_matrix(c, k)
    blocks = [
        tuple(sorted(level.index[i] for i in component))
        for component in nx.connected_components(level.to_networkx())
    ]
    return LevelComponents(level=k, blocks=tuple(sorted(blocks)))


def is_level_connected(c: SimplicialComplex, k: int) -> bool:
    return len(level_components(c, k)) == 1


def shortest_path_length(
    c: SimplicialComplex, k: int, a: Simplex, b: Simplex
) -> Optional[int]:
    """Minimum total strength over walks from ``a`` to ``b`` at level ``k``; None
    when they lie in different components.
    """
    _check_level(c, k)
    for s in (a, b):
        c.require(s)
        if len(s) - 1 != k:
            raise ArgumentError(f"{c.format_simplex(s)} is not a {k}-simplex.")
    if a == b:
        return 0
    level = weighted_adjacency_matrix(c, k)
    try:
        return int(
            nx.dijkstra_path_length(
                level.to_networkx(), c.index(a), c.index(b), weight="weight"
            )
        )
    except nx.NetworkXNoPath:
        return None


def walk_length(c: SimplicialComplex, walk: Sequence[Simplex]) -> int:
    """
    Length of an explicit generalised walk ``s1, l1, s2, l2, ..., sn``: the sum of the
    dimensions of the connecting simplices ``l``. Each connector must contain the
    simplices on both sides of it.
    """
    if len(walk) % 2 == 0:
        raise ArgumentError("A walk alternates simplices and connectors, so its length is odd.")
    stops, connectors = walk[0::2], walk[1::2]
    k = len(stops[0])
    total = 0
    for before, connector, after in zip(stops, connectors, stops[1:]):
        for s in (before, connector, after):
            c.require(s)
        if len(before) != k or len(after) != k:
            raise ArgumentError("Every stop of a walk has the same dimension.")
        if not (set(before) | set(after)) <= set(connector) or len(connector) <= k:
            raise ArgumentError(
                f"{c.format_simplex(connector)} does not connect "
                f"{c.format_simplex(before)} and {c.format_simplex(after)}."
            )
        total += len(connector) - 1
    return total


########################################################################################
# Generalised weighted betweenness
########################################################################################
def _single_source_dependencies(adjacency: list, source: int) -> dict:
    """Dijkstra from ``source`` with exact path counting, then Brandes dependency
    accumulation. Returns ``{v: dependency}`` for every reached ``v != source``.
    """
    settled = []
    preds = {source: []}
    sigma = {source: 1}
    dist = {}
    seen = {source: 0}
    c = count()
    heap = [(0, next(c), source, source)]
    while heap:
        d, _, pred, v = heapq.heappop(heap)
        if v in dist:
            continue
        if v != source:
            sigma[v] += sigma[pred]
        settled.append(v)
        dist[v] = d
        for w, weight in adjacency[v]:
            vw = d + weight
            if w not in dist and (w not in seen or vw < seen[w]):
                seen[w] = vw
                heapq.heappush(heap, (vw, next(c), v, w))
                sigma[w] = 0
                preds[w] = [v]
            elif vw == seen.get(w):
                sigma[w] += sigma[v]
                preds[w].append(v)

    delta = dict.fromkeys(settled, Fraction(0))
    for w in reversed(settled):
        for v in preds[w]:
            delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
    del delta[source]
    return delta


def _raw_betweenness(level: LevelAdjacency, threads: Optional[int] = None) -> list:
    adjacency = [[] for _ in level.index]
    for i, j, w in level.triplets():
        adjacency[i].append((j, w))
        adjacency[j].append((i, w))

    sources = range(level.size)
    if threads == 1 or level.size < 2:
        results = [_single_source_dependencies(adjacency, s) for s in sources]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda s: _single_source_dependencies(adjacency, s), sources))

    # Reduce in source order so sums are reproducible regardless of scheduling.
    totals = [Fraction(0)] * level.size
    for dependencies in results:
        for v, value in dependencies.items():
            totals[v] += value
    # Each unordered pair was counted once from each endpoint.
    return [total / 2 for total in totals]


def generalised_weighted_betweenness(
    c: SimplicialComplex, k: int, normalized: bool = True, threads: Optional[int] = None
) -> ScoreMap:
    """Betweenness of every k-simplex in the level-k weighted adjacency graph.

    When ``normalized``, each score is divided by (n-1)(n-2)/2 where n is the number
    of k-simplices in its component; components with n <= 2 score 0.
    """
    _check_level(c, k)
    if threads is None:
        threads = get_setting("SIMPLICIAL_THREADS")
    level = weighted_adjacency_matrix(c, k)
    raw = _raw_betweenness(level, threads=threads)
    logger.debug(f"Betweenness computed for {level.size} simplices at level {k}")

    if not normalized:
        return ScoreMap(
            measure=Measure.BETWEENNESS, scores=dict(zip(level.index, raw)), level=k
        )

    scores = {}
    for block in level_components(c, k).blocks:
        n = len(block)
        for s in block:
            if n <= 2:
                scores[s] = Fraction(0)
            else:
                scores[s] = raw[c.index(s)] / Fraction((n - 1) * (n - 2), 2)
    return ScoreMap(measure=Measure.BETWEENNESS_NORMALIZED, scores=scores, level=k)


def all_level_betweenness(
    c: SimplicialComplex, normalized: bool = True, threads: Optional[int] = None
) -> ScoreMap:
    """Betweenness of every simplex, each scored at its own level."""
    maps = [
        generalised_weighted_betweenness(c, k, normalized=normalized, threads=threads)
        for k in range(c.dimension + 1)
    ]
    measure = Measure.BETWEENNESS_NORMALIZED if normalized else Measure.BETWEENNESS
    return ScoreMap.merge(measure, maps)


########################################################################################
# Export rows
########################################################################################
def score_table(c: SimplicialComplex, raw: ScoreMap, normalized: Optional[ScoreMap] = None):
    """Rows ``(simplex, dimension, measure, raw, normalized)`` in canonical order."""
    rows = []
    for s in c:
        if s not in raw:
            continue
        rows.append(
            (
                c.format_simplex(s),
                len(s) - 1,
                str(raw.measure),
                raw[s],
                normalized[s] if normalized is not None else None,
            )
        )
    return rows
