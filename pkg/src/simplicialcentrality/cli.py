"""
Shared plumbing for the management commands: the run configuration, input loading,
and the mapping from library errors to process exit codes.

Exit codes are a stable contract for scripts: 0 success, 1 usage error (bad flags,
unknown measure, non-monotone thresholds), 2 data error (unreadable or malformed
input, empty graph, complex too large).
"""

import dataclasses
import logging
import typing as T
from pathlib import Path

import yaml
from django.apps import apps
from django.core.management.base import BaseCommand, CommandError

from simplicialcentrality.common import (
    FILTRATION_MEASURES,
    ArgumentError,
    EmptyGraphError,
    ExitCode,
    OutputFormat,
    SimplicialError,
)
from simplicialcentrality.filtration import clamp_homology_dim, parse_thresholds
from simplicialcentrality.simplicial import (
    SimplicialComplex,
    clique_complex,
    read_complex_json,
    read_edge_list,
)

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class RunConfig:
    input: T.Optional[Path] = None
    max_dim: T.Optional[int] = None
    measures: tuple = ("degree",)
    # Either one threshold list for every measure, or a mapping measure -> list.
    thresholds: T.Any = "auto"
    homology_dim: T.Optional[int] = None
    out: Path = Path(".")
    formats: tuple = tuple(OutputFormat.values)
    threads: T.Optional[int] = None

    @classmethod
    def from_yaml(cls, path) -> dict:
        """Read a YAML run file into keyword arguments for RunConfig."""
        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as exc:
            raise ArgumentError(f"{path}: invalid YAML ({exc})") from exc
        if not isinstance(data, dict):
            raise ArgumentError(f"{path}: expected a mapping of run settings.")
        if "measure" in data:
            data["measures"] = [data.pop("measure")]
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ArgumentError(f"{path}: unknown settings {', '.join(sorted(unknown))}.")
        # Relative paths in the file are relative to the file itself.
        for key in ("input", "out"):
            if data.get(key) is not None:
                data[key] = (path.parent / data[key]).resolve()
        return data

    def validate(self):
        if self.input is None:
            raise ArgumentError("No input given; pass --input or set input in --config.")
        self.input = Path(self.input)
        self.out = Path(self.out)
        self.measures = tuple(self.measures)
        self.formats = tuple(self.formats)
        for measure in self.measures:
            if measure not in FILTRATION_MEASURES:
                raise ArgumentError(
                    f"Unknown measure {measure!r}; choose from "
                    f"{', '.join(FILTRATION_MEASURES)}."
                )
            self.thresholds_for(measure)
        for fmt in self.formats:
            if fmt not in OutputFormat.values:
                raise ArgumentError(f"Unknown format {fmt!r}.")
        if self.max_dim is not None and self.max_dim < 1:
            raise ArgumentError("--max-dim must be at least 1.")
        if self.homology_dim is not None and self.homology_dim < 0:
            raise ArgumentError("--homology-dim must be non-negative.")
        if self.threads is not None and self.threads < 1:
            raise ArgumentError("--threads must be at least 1.")
        return self

    def thresholds_for(self, measure):
        value = self.thresholds
        if isinstance(value, dict):
            value = value.get(measure, "auto")
        return parse_thresholds(value)


def load_complex(config: RunConfig) -> SimplicialComplex:
    """Read a complex JSON file, or build the clique complex of an edge list."""
    path = config.input
    if path.suffix.lower() == ".json":
        return read_complex_json(path)
    graph = read_edge_list(path)
    if graph.vertex_count == 0:
        raise EmptyGraphError(f"{path}: the edge list defines no vertices.")
    return clique_complex(graph, max_dim=config.max_dim)


def summarize(c: SimplicialComplex) -> str:
    f = c.f_vector
    parts = [f"{f[0] if f else 0} vertices"]
    parts += [f"{n} {k}-simplices" for k, n in enumerate(f) if k > 0]
    return ", ".join(parts)


class AnalysisCommand(BaseCommand):
    """Base for the analysis commands. Subclasses implement ``run(config)``."""

    uses_measure = False
    uses_thresholds = False
    uses_homology_dim = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        default_exit = parser.exit

        # argparse exits with status 2 on bad flags, which our contract reserves for
        # data errors.
        def exit(status=0, message=None):
            default_exit(ExitCode.USAGE if status == 2 else status, message)

        parser.exit = exit
        return parser

    def add_arguments(self, parser):
        parser.add_argument(
            "--input",
            type=Path,
            help="Edge-list file (one edge per line) or a complex JSON written by build.",
        )
        parser.add_argument(
            "--max-dim",
            type=int,
            default=None,
            help="Largest simplex dimension of the clique complex. Defaults to unbounded.",
        )
        parser.add_argument(
            "--out", type=Path, default=None, help="Output directory. Defaults to '.'."
        )
        parser.add_argument(
            "--format",
            dest="formats",
            action="append",
            choices=OutputFormat.values,
            help="Output format; repeat for several. Defaults to SIMPLICIAL_OUTPUT_FORMATS.",
        )
        parser.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Worker threads. Defaults to SIMPLICIAL_THREADS, then the core count.",
        )
        if self.uses_measure:
            parser.add_argument(
                "--measure",
                default=None,
                help=f"One of {', '.join(FILTRATION_MEASURES)}. Defaults to degree.",
            )
        if self.uses_thresholds:
            parser.add_argument(
                "--thresholds",
                default=None,
                help='Comma-separated, strictly decreasing thresholds, or "auto".',
            )
        if self.uses_homology_dim:
            parser.add_argument(
                "--homology-dim",
                type=int,
                default=None,
                help="Largest Betti number dimension. Defaults to SIMPLICIAL_HOMOLOGY_DIM.",
            )

    def get_config(self, options, base=None) -> RunConfig:
        conf = apps.get_app_config("simplicialcentrality")
        values = {
            "formats": conf.output_formats,
            "threads": conf.threads,
        }
        values.update(base or {})
        flags = {
            "input": options.get("input"),
            "max_dim": options.get("max_dim"),
            "out": options.get("out"),
            "formats": options.get("formats"),
            "threads": options.get("threads"),
            "thresholds": options.get("thresholds"),
            "homology_dim": options.get("homology_dim"),
        }
        if options.get("measure"):
            flags["measures"] = (options["measure"],)
        values.update({k: v for k, v in flags.items() if v is not None})
        return RunConfig(**values).validate()

    def handle(self, *args, **options):
        verbosity = options.get("verbosity", 1)
        logging.getLogger("simplicialcentrality").setLevel(
            logging.DEBUG if verbosity > 1 else logging.INFO
        )
        try:
            config = self.get_config(options)
            config.out.mkdir(parents=True, exist_ok=True)
            self.run(config)
        except ArgumentError as exc:
            raise CommandError(str(exc), returncode=ExitCode.USAGE) from exc
        except (SimplicialError, OSError, UnicodeDecodeError) as exc:
            raise CommandError(str(exc), returncode=ExitCode.DATA) from exc

    def run(self, config: RunConfig):
        raise NotImplementedError

    def clamp_homology_dim(self, c, config) -> int:
        homology_dim = clamp_homology_dim(c, config.homology_dim)
        if config.homology_dim is not None and homology_dim < config.homology_dim:
            self.stderr.write(
                self.style.WARNING(
                    f"Homology dimension {config.homology_dim} exceeds the complex "
                    f"dimension {c.dimension}; using {homology_dim}."
                )
            )
        return homology_dim

    def write_paths(self, paths):
        for path in paths:
            self.stdout.write(f"  wrote {path}")
