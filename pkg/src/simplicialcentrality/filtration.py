"""
Centrality-driven filtrations.

For a threshold delta the sub-complex contains every simplex scoring at least delta
together with all of its faces, whatever their own scores. Lowering delta can only
add simplices, so a descending threshold list yields a nested sequence of
sub-complexes; the Betti numbers of each one are reported.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence, Union

from simplicialcentrality import centrality
from simplicialcentrality.apps import get_setting
from simplicialcentrality.common import (
    ArgumentError,
    FiltrationInvariantError,
    Measure,
    Provenance,
)
from simplicialcentrality.homology import BettiVector, nested_betti_numbers
from simplicialcentrality.simplicial import SimplicialComplex, faces

logger = logging.getLogger(__name__)

AUTO = "auto"


@dataclass
class FiltrationStep:
    """
    One threshold of a filtration. The simplices of the step are the first ``size``
    entries of ``order``, a sequence shared by every step of one report, so each
    step is a prefix of the next.
    """

    threshold: Fraction
    order: tuple = field(repr=False)
    size: int
    f_vector: tuple
    labels: tuple = field(repr=False, default=())
    added: tuple = ()
    provenance: dict = field(default_factory=dict)
    betti: Optional[BettiVector] = None

    @cached_property
    def subcomplex(self) -> SimplicialComplex:
        return SimplicialComplex.from_simplices(self.order[: self.size], labels=self.labels)

    def __iter__(self):
        return iter(self.order[: self.size])


@dataclass
class FiltrationReport:
    measure: str
    thresholds: tuple
    steps: list
    homology_dim: int
    coefficient_field: str = "GF(2)"
    notes: tuple = ()


def score_all_simplices(
    c: SimplicialComplex, measure: str, threads: Optional[int] = None
) -> centrality.ScoreMap:
    """Score every simplex of ``c`` with ``measure``, each at its own dimension."""
    if measure not in Measure.values:
        raise ArgumentError(
            f"Unknown measure {measure!r}; choose from {', '.join(Measure.values)}."
        )
    if measure == Measure.DEGREE:
        return centrality.maximal_generalised_degrees(c)
    if measure in (Measure.GCC, Measure.GCC_NORMALIZED):
        raw = centrality.generalised_clustering_coefficients(c)
        return raw if measure == Measure.GCC else centrality.normalize_gcc(raw)
    return centrality.all_level_betweenness(
        c, normalized=measure == Measure.BETWEENNESS_NORMALIZED, threads=threads
    )


def _meets(score, delta, tolerance) -> bool:
    if isinstance(score, int) and Fraction(delta).denominator == 1:
        return score >= delta
    return float(score) >= float(delta) - tolerance


def subcomplex_at(
    c: SimplicialComplex,
    scores: centrality.ScoreMap,
    delta,
    tolerance: Optional[float] = None,
) -> SimplicialComplex:
    """Simplices scoring at least ``delta`` plus all their faces."""
    if tolerance is None:
        tolerance = get_setting("SIMPLICIAL_THRESHOLD_TOLERANCE")
    missing = [s for s in c if s not in scores]
    if missing:
        raise ArgumentError(
            f"{len(missing)} simplices have no score, e.g. {c.format_simplex(missing[0])}."
        )
    selected = [s for s in c if _meets(scores[s], delta, tolerance)]
    return SimplicialComplex.from_simplices(selected, labels=c.labels)


def parse_thresholds(text: Union[str, Sequence]) -> Union[str, list]:
    """Parse ``"auto"`` or a comma-separated, strictly decreasing threshold list."""
    if isinstance(text, str):
        if text.strip().lower() == AUTO:
            return AUTO
        parts = [p.strip() for p in text.split(",") if p.strip()]
    else:
        parts = list(text)
    if not parts:
        raise ArgumentError("No thresholds given.")
    try:
        values = [Fraction(str(p)) for p in parts]
    except ValueError as exc:
        raise ArgumentError(f"Invalid threshold: {exc}") from exc
    for higher, lower in zip(values, values[1:]):
        if not higher > lower:
            raise ArgumentError(
                f"Thresholds must be strictly decreasing, got {float(higher):g} "
                f"before {float(lower):g}."
            )
    return values


def auto_thresholds(scores: centrality.ScoreMap) -> list:
    """The distinct score values, highest first."""
    return sorted({Fraction(v) for v in scores.scores.values()}, reverse=True)


def clamp_homology_dim(c: SimplicialComplex, homology_dim: Optional[int]) -> int:
    configured = get_setting("SIMPLICIAL_HOMOLOGY_DIM") if homology_dim is None else homology_dim
    if configured < 0:
        raise ArgumentError(f"Homology dimension must be non-negative, got {configured}.")
    clamped = min(configured, max(c.dimension, 0))
    if homology_dim is not None and clamped < homology_dim:
        logger.warning(
            f"Homology dimension {homology_dim} exceeds the complex dimension "
            f"{c.dimension}; using {clamped}"
        )
    return clamped


def check_step(present: set, added: Sequence, threshold=None):
    """
    Raise FiltrationInvariantError unless ``added`` extends ``present`` to a larger
    complex: nothing in ``added`` is already present, and every codimension-one
    face of an added simplex is present or added before it.
    """
    seen = set(present)
    where = "" if threshold is None else f" at threshold {float(threshold):g}"
    for s in added:
        if s in seen:
            raise FiltrationInvariantError(
                f"Step{where} re-adds {s}; steps are not nested."
            )
        if len(s) > 1:
            for face in combinations(s, len(s) - 1):
                if face not in seen:
                    raise FiltrationInvariantError(
                        f"Step{where} adds {s} without its face {face}."
                    )
        seen.add(s)
    return seen


def run_filtration(
    c: SimplicialComplex,
    measure: str,
    thresholds: Union[str, Sequence] = AUTO,
    homology_dim: Optional[int] = None,
    scores: Optional[centrality.ScoreMap] = None,
    threads: Optional[int] = None,
) -> FiltrationReport:
    """Build one sub-complex per threshold and compute its Betti numbers."""
    if threads is None:
        threads = get_setting("SIMPLICIAL_THREADS")
    tolerance = get_setting("SIMPLICIAL_THRESHOLD_TOLERANCE")
    if scores is None:
        scores = score_all_simplices(c, measure, threads=threads)
    deltas = parse_thresholds(thresholds)
    if deltas == AUTO:
        deltas = auto_thresholds(scores)
    homology_dim = clamp_homology_dim(c, homology_dim)

    # Highest score first so each step extends the previous one.
    ranked = sorted(c, key=lambda s: (-float(scores[s]), len(s), s))
    order = []
    present = set()
    cursor = 0
    counts = []
    pending = []
    for delta in deltas:
        provenance = {}
        while cursor < len(ranked) and _meets(scores[ranked[cursor]], delta, tolerance):
            s = ranked[cursor]
            cursor += 1
            if s in present:
                continue
            provenance[s] = Provenance.SCORED
            for face in faces(s):
                if face not in present:
                    provenance.setdefault(face, Provenance.FACE_CLOSURE)
        # Faces before cofaces, so every prefix of ``order`` is a complex.
        added = tuple(sorted(provenance, key=lambda s: (len(s), s)))
        present = check_step(present, added, delta)
        order.extend(added)
        for s in added:
            if len(counts) < len(s):
                counts.extend([0] * (len(s) - len(counts)))
            counts[len(s) - 1] += 1
        pending.append((delta, added, provenance, tuple(counts)))
        logger.debug(
            f"{measure} >= {float(delta):g}: {len(added)} new simplices, "
            f"f-vector {tuple(counts)}"
        )

    order = tuple(order)
    steps = []
    size = 0
    for delta, added, provenance, f_vector in pending:
        size += len(added)
        steps.append(
            FiltrationStep(
                threshold=delta,
                order=order,
                size=size,
                f_vector=f_vector,
                labels=c.labels,
                added=added,
                provenance=provenance,
            )
        )
    bettis = nested_betti_numbers(order, [step.size for step in steps], homology_dim)
    for step, betti in zip(steps, bettis):
        step.betti = betti

    notes = []
    if measure in (Measure.BETWEENNESS, Measure.BETWEENNESS_NORMALIZED):
        notes.append(
            "Betweenness is computed level by level; simplices of all dimensions "
            "share one threshold scale."
        )
    return FiltrationReport(
        measure=str(measure),
        thresholds=tuple(deltas),
        steps=steps,
        homology_dim=homology_dim,
        notes=tuple(notes),
    )


def report_rows(report: FiltrationReport) -> list:
    """One row per step: threshold, f-vector and Betti numbers."""
    rows = []
    for step in report.steps:
        row = {"threshold": float(step.threshold)}
        row["f_vector"] = " ".join(str(n) for n in step.f_vector)
        for k, b in enumerate(step.betti):
            row[f"betti_{k}"] = b
        rows.append(row)
    return rows
