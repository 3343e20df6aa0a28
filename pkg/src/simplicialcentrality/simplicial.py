"""
Simplicial complexes and their construction from an unweighted, undirected network.

A simplex is stored as a strictly increasing tuple of dense integer vertex ids. The
original vertex labels from the edge-list file are kept in a side table on the
complex, so every report can print ``[10,18,19]`` instead of internal ids.

The clique complex is built from the maximal cliques of the graph (pivoting
Bron-Kerbosch, via ``networkx.find_cliques``); the maximal cliques are exactly the
facets, and the rest of the complex is their downward closure.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from simplicialcentrality.apps import get_setting
from simplicialcentrality.common import (
    ArgumentError,
    ComplexFormatError,
    ComplexTooLargeError,
    EdgeListParseError,
)

logger = logging.getLogger(__name__)

Simplex = tuple  # tuple[int, ...], strictly increasing

# Edge-list tokens are separated by commas and/or whitespace.
token_separator = re.compile(r"[,\s]+")
vertices_header = re.compile(r"^vertices\s*:(.*)$", re.IGNORECASE)


def simplex(vertices: Iterable[int]) -> Simplex:
    """Return the canonical form of a vertex collection."""
    vertices = list(vertices)
    canonical = tuple(sorted(set(vertices)))
    if not canonical:
        raise ArgumentError("A simplex needs at least one vertex.")
    if len(canonical) != len(vertices):
        raise ArgumentError(f"Duplicate vertices in simplex {vertices}.")
    if canonical[0] < 0:
        raise ArgumentError(f"Vertex ids must be non-negative, got {canonical[0]}.")
    return canonical


def dimension(s: Simplex) -> int:
    return len(s) - 1


def faces(s: Simplex) -> frozenset:
    """All non-empty proper subsets of ``s``."""
    return frozenset(
        sub for size in range(1, len(s)) for sub in combinations(s, size)
    )


def _label_sort_key(labels):
    # Numeric labels sort numerically so v2 precedes v10, with the text breaking ties
    # such as "01" and "1"; anything else sorts as text.
    if all(re.fullmatch(r"-?\d+", label) for label in labels):
        return lambda label: (int(label), label)
    return lambda label: label


########################################################################################
# Graph ingestion
########################################################################################
@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on dense vertex ids ``0 .. len(labels) - 1``."""

    labels: tuple
    edges: frozenset = frozenset()
    self_loops_dropped: int = 0

    def __post_init__(self):
        n = len(self.labels)
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ArgumentError(f"Edge ({u}, {v}) is not a valid edge on {n} vertices.")

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build a Graph from any networkx graph, labelling vertices by ``str(node)``."""
        labels = [str(node) for node in g.nodes]
        ordered = sorted(labels, key=_label_sort_key(labels))
        ids = {label: i for i, label in enumerate(ordered)}
        edges = frozenset(
            (min(ids[str(u)], ids[str(v)]), max(ids[str(u)], ids[str(v)]))
            for u, v in g.edges
            if u != v
        )
        return cls(labels=tuple(ordered), edges=edges)


def parse_edge_list(text: str, path: Optional[Union[str, Path]] = None) -> Graph:
    """
    Parse line-oriented edge-list text.

    Each non-comment line holds two vertex labels separated by whitespace or a
    comma. ``#`` starts a comment. A ``vertices:`` line lists labels that must exist
    even when no edge mentions them (isolated vertices). Labels are relabelled to
    dense ids in natural label order; self-loops are dropped and duplicate edges
    merged.
    """
    labels = set()
    raw_edges = []
    self_loops = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        header = vertices_header.match(line)
        if header:
            labels.update(t for t in token_separator.split(header.group(1)) if t)
            continue
        tokens = [t for t in token_separator.split(line) if t]
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected two vertex labels, found {len(tokens)}", line_number, path
            )
        u, v = tokens
        labels.update(tokens)
        if u == v:
            self_loops += 1
            continue
        raw_edges.append((u, v))

    ordered = sorted(labels, key=_label_sort_key(labels))
    ids = {label: i for i, label in enumerate(ordered)}
    edges = frozenset(
        (min(ids[u], ids[v]), max(ids[u], ids[v])) for u, v in raw_edges
    )
    if self_loops:
        logger.warning(f"Dropped {self_loops} self-loop(s) while parsing the edge list")
    logger.debug(f"Parsed {len(ordered)} vertices and {len(edges)} distinct edges")
    return Graph(labels=tuple(ordered), edges=edges, self_loops_dropped=self_loops)


def read_edge_list(path: Union[str, Path]) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), path=path)


########################################################################################
# Simplicial complex
########################################################################################
@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """
    An immutable, downward-closed family of simplices.

    Construct it with ``SimplicialComplex.from_simplices``, which adds every face of
    the given simplices. Levels are kept in canonical (lexicographic) order, and that
    order is the row/column order of every matrix derived from the complex.
    """

    labels: tuple
    levels: tuple  # levels[k] is the sorted tuple of k-simplices
    facet_list: tuple = field(repr=False)
    _index: dict = field(repr=False)
    _facets_by_vertex: dict = field(repr=False)

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Iterable[int]],
        labels: Optional[Sequence[str]] = None,
        max_simplices: Optional[int] = None,
    ) -> "SimplicialComplex":
        if max_simplices is None:
            max_simplices = get_setting("SIMPLICIAL_MAX_SIMPLICES")
        # Largest first: once a simplex is in the closure, so are all its faces, and
        # any generator already present can be skipped.
        generators = sorted({simplex(s) for s in simplices}, key=len, reverse=True)
        closure = set()
        for s in generators:
            if s in closure:
                continue
            if (1 << len(s)) - 1 <= max_simplices:
                for size in range(len(s), 0, -1):
                    closure.update(combinations(s, size))
            if (1 << len(s)) - 1 > max_simplices or len(closure) > max_simplices:
                raise ComplexTooLargeError(
                    f"The complex has more than {max_simplices} simplices; raise "
                    "SIMPLICIAL_MAX_SIMPLICES or bound the clique dimension."
                )

        if labels is None:
            top = max((s[-1] for s in closure), default=-1)
            labels = [str(v) for v in range(top + 1)]
        labels = tuple(str(label) for label in labels)
        if closure and max(s[-1] for s in closure) >= len(labels):
            raise ArgumentError("A simplex references a vertex with no label.")

        by_dim = {}
        for s in closure:
            by_dim.setdefault(len(s) - 1, []).append(s)
        top_dim = max(by_dim, default=-1)
        levels = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top_dim + 1))
        index = {s: i for level in levels for i, s in enumerate(level)}

        # In a downward-closed family a simplex is contained in a larger one iff it is
        # a face of a simplex exactly one dimension up.
        covered = set()
        for level in levels[1:]:
            for s in level:
                covered.update(combinations(s, len(s) - 1))
        facet_list = tuple(s for level in levels for s in level if s not in covered)
        facets_by_vertex = {}
        for position, f in enumerate(facet_list):
            for v in f:
                facets_by_vertex.setdefault(v, set()).add(position)

        return cls(
            labels=labels,
            levels=levels,
            facet_list=facet_list,
            _index=index,
            _facets_by_vertex=facets_by_vertex,
        )

    @classmethod
    def empty(cls, labels: Sequence[str] = ()) -> "SimplicialComplex":
        return cls.from_simplices((), labels=labels)

    # ------------------------------------------------------------------------------
    # Shape
    # ------------------------------------------------------------------------------
    @property
    def dimension(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return len(self.levels) - 1

    @property
    def f_vector(self) -> tuple:
        return tuple(len(level) for level in self.levels)

    def simplices(self, k: int) -> tuple:
        """The k-simplices in canonical order (empty when the level does not exist)."""
        if 0 <= k < len(self.levels):
            return self.levels[k]
        return ()

    def __iter__(self):
        for level in self.levels:
            yield from level

    def __len__(self):
        return len(self._index)

    def __contains__(self, s):
        return s in self._index

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.levels == other.levels

    def __hash__(self):
        return hash((self.labels, self.levels))

    def index(self, s: Simplex) -> int:
        """Position of ``s`` within its own level."""
        try:
            return self._index[s]
        except KeyError:
            raise ArgumentError(f"{self.format_simplex(s)} is not in the complex.") from None

    def require(self, s: Simplex) -> Simplex:
        if s not in self._index:
            raise ArgumentError(f"{self.format_simplex(s)} is not in the complex.")
        return s

    # ------------------------------------------------------------------------------
    # Facets
    # ------------------------------------------------------------------------------
    def is_facet(self, s: Simplex) -> bool:
        return self.require(s) in self.facets_containing(s)

    def facets_containing(self, vertices: Iterable[int]) -> tuple:
        """Facets that contain every vertex of ``vertices`` (need not be a simplex)."""
        vertices = tuple(vertices)
        if not vertices:
            return ()
        candidates = None
        for v in vertices:
            positions = self._facets_by_vertex.get(v, set())
            candidates = positions if candidates is None else candidates & positions
            if not candidates:
                return ()
        return tuple(self.facet_list[p] for p in sorted(candidates))

    # ------------------------------------------------------------------------------
    # Labels
    # ------------------------------------------------------------------------------
    def simplex_of(self, *labels) -> Simplex:
        """Look a simplex up by its vertex labels, e.g. ``c.simplex_of(4, 5, 6)``."""
        ids = {label: i for i, label in enumerate(self.labels)}
        try:
            s = simplex(ids[str(label)] for label in labels)
        except KeyError as exc:
            raise ArgumentError(f"Unknown vertex label {exc.args[0]}.") from None
        return self.require(s)

    def format_simplex(self, s: Simplex) -> str:
        names = [self.labels[v] if v < len(self.labels) else str(v) for v in s]
        return "[" + ",".join(names) + "]"


def clique_complex(
    g: Graph, max_dim: Optional[int] = None, max_simplices: Optional[int] = None
) -> SimplicialComplex:
    """
    Build the clique complex of ``g``: every clique with at most ``max_dim + 1``
    vertices becomes a simplex (all cliques when ``max_dim`` is None).
    """
    if max_dim is not None and max_dim < 1:
        raise ArgumentError(f"max_dim must be at least 1, got {max_dim}.")
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx())]
    logger.debug(f"Found {len(cliques)} maximal cliques")
    if max_dim is not None:
        size = max_dim + 1
        truncated = []
        for c in cliques:
            if len(c) > size:
                truncated.extend(combinations(c, size))
            else:
                truncated.append(c)
        cliques = truncated
    complex_ = SimplicialComplex.from_simplices(
        cliques, labels=g.labels, max_simplices=max_simplices
    )
    logger.debug(f"Built clique complex with f-vector {complex_.f_vector}")
    return complex_


def facets(c: SimplicialComplex) -> frozenset:
    """The maximal simplices of ``c``."""
    return frozenset(c.facet_list)


def skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    """The sub-complex of all simplices of dimension at most ``k``."""
    return SimplicialComplex.from_simplices(
        (s for level in c.levels[: k + 1] for s in level), labels=c.labels
    )


def is_downward_closed(simplices) -> bool:
    """True when every face of every member is also a member."""
    members = simplices if isinstance(simplices, SimplicialComplex) else set(simplices)
    return all(
        sub in members
        for s in members
        for sub in combinations(s, len(s) - 1)
        if sub
    )


########################################################################################
# Complex JSON
########################################################################################
def complex_to_dict(c: SimplicialComplex) -> dict:
    # Facets are given as positions in the flattened canonical order: level 0 first,
    # lexicographic within each level.
    offsets, total = [], 0
    for level in c.levels:
        offsets.append(total)
        total += len(level)
    return {
        "labels": list(c.labels),
        "simplices": {str(k): [list(s) for s in level] for k, level in enumerate(c.levels)},
        "facets": [offsets[len(f) - 1] + c.index(f) for f in c.facet_list],
        "f_vector": list(c.f_vector),
    }


def complex_from_dict(data: dict) -> SimplicialComplex:
    try:
        simplices = [s for level in data["simplices"].values() for s in level]
        c = SimplicialComplex.from_simplices(simplices, labels=data["labels"])
    except (KeyError, TypeError, AttributeError, ArgumentError) as exc:
        raise ComplexFormatError(f"Malformed complex JSON: {exc!r}") from exc
    if list(c.f_vector) != list(data.get("f_vector", c.f_vector)):
        raise ComplexFormatError(
            f"Complex JSON f_vector {data['f_vector']} does not match its simplices "
            f"{list(c.f_vector)}."
        )
    if "facets" in data and complex_to_dict(c)["facets"] != data["facets"]:
        raise ComplexFormatError("Complex JSON facet list does not match its simplices.")
    return c


def dumps_complex(c: SimplicialComplex) -> str:
    return json.dumps(complex_to_dict(c), indent=1) + "\n"


def write_complex_json(c: SimplicialComplex, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_complex(c), encoding="utf-8")
    return path


def read_complex_json(path: Union[str, Path]) -> SimplicialComplex:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"{path}: not valid JSON ({exc})") from exc
    return complex_from_dict(data)
