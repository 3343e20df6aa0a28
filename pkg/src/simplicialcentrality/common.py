"""
This module contains the enumerations and exceptions shared by the library modules
and the management commands. Stored here to help avoid circular imports.
"""

from enum import IntEnum

from django.db import models


class Measure(models.TextChoices):
    DEGREE = "degree", "maximal generalised degree"
    GCC = "gcc", "generalised clustering coefficient"
    GCC_NORMALIZED = "gcc_normalized", "generalised clustering coefficient (normalized)"
    BETWEENNESS = "betweenness", "generalised weighted betweenness"
    BETWEENNESS_NORMALIZED = (
        "betweenness_normalized",
        "generalised weighted betweenness (normalized)",
    )


# The measures a filtration can be driven by. The command line accepts the short
# names and filtrates on the normalized variants.
FILTRATION_MEASURES = {
    "degree": Measure.DEGREE,
    "gcc": Measure.GCC_NORMALIZED,
    "betweenness": Measure.BETWEENNESS_NORMALIZED,
}


class Provenance(models.TextChoices):
    SCORED = "scored", "score at or above threshold"
    FACE_CLOSURE = "face-closure", "face of a scored simplex"


class OutputFormat(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    TSV = "tsv", "TSV plot data"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    DATA = 2


class SimplicialError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(SimplicialError, ValueError):
    """An argument is outside the domain of the operation."""


class EdgeListParseError(SimplicialError):
    def __init__(self, message, line_number, path=None):
        self.line_number = line_number
        self.path = path
        where = f"{path}:{line_number}" if path else f"line {line_number}"
        super().__init__(f"{where}: {message}")


class EmptyGraphError(SimplicialError):
    """The input network has no vertices."""


class ComplexTooLargeError(SimplicialError):
    """The clique complex exceeds the configured simplex-count cap."""


class FiltrationInvariantError(SimplicialError):
    """A filtration step is not nested in its successor or not downward closed."""


class ComplexFormatError(SimplicialError):
    """A complex JSON document is malformed or inconsistent."""
