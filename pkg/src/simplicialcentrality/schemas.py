"""
Export records for scores, Betti numbers and filtration reports, and the writers
that turn them into JSON, CSV and TSV files. Output ordering is deterministic
(canonical simplex order, descending thresholds) so files diff cleanly.
"""

import csv
import dataclasses
import json
import typing as T
from fractions import Fraction
from pathlib import Path

from simplicialcentrality.common import OutputFormat
from simplicialcentrality.filtration import report_rows


def plain(value):
    """Convert exact scores to JSON/CSV friendly numbers."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


class SchemaBase:
    def asdict(self):
        return {k: plain(v) for k, v in self.items() if v is not None}

    def items(self):
        """Yield the name and value of each field in the dataclass (similar to the dict
        method).
        """
        for field in dataclasses.fields(self):
            yield field.name, getattr(self, field.name)

    def as_row(self):
        return ["" if v is None else plain(v) for _, v in self.items()]

    @classmethod
    def header(cls):
        return [field.name for field in dataclasses.fields(cls)]


@dataclasses.dataclass
class ScoreRecord(SchemaBase):
    simplex: str
    dimension: int
    measure: str
    raw: T.Any
    normalized: T.Optional[T.Any] = None


@dataclasses.dataclass
class AddedSimplex(SchemaBase):
    simplex: str
    dimension: int
    provenance: str


@dataclasses.dataclass
class StepRecord(SchemaBase):
    threshold: T.Any
    f_vector: list
    betti: list
    added: list

    def asdict(self):
        data = super().asdict()
        data["added"] = [a.asdict() for a in self.added]
        return data


########################################################################################
# Writers
########################################################################################
def _write_csv(path: Path, header, rows, delimiter=","):
    with path.open("w", encoding="utf-8", newline="") as stream:
        writer = csv.writer(stream, delimiter=delimiter, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _write_json(path: Path, data):
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    return path


def score_records(rows) -> list:
    return [ScoreRecord(*row) for row in rows]


def write_scores(records, out_dir: Path, stem: str, formats) -> list:
    out_dir = Path(out_dir)
    written = []
    if OutputFormat.CSV in formats:
        written.append(
            _write_csv(out_dir / f"{stem}.csv", ScoreRecord.header(), [r.as_row() for r in records])
        )
    if OutputFormat.JSON in formats:
        written.append(_write_json(out_dir / f"{stem}.json", [r.asdict() for r in records]))
    return written


def betti_header(homology_dim: int) -> list:
    return [f"betti_{k}" for k in range(homology_dim + 1)]


def write_betti(betti, out_dir: Path, stem: str, formats, coefficient_field="GF(2)") -> list:
    out_dir = Path(out_dir)
    written = []
    if OutputFormat.CSV in formats:
        written.append(_write_csv(out_dir / f"{stem}.csv", betti_header(len(betti) - 1), [list(betti)]))
    if OutputFormat.JSON in formats:
        written.append(
            _write_json(
                out_dir / f"{stem}.json",
                {"coefficient_field": coefficient_field, "betti": list(betti)},
            )
        )
    return written


def report_to_dict(c, report) -> dict:
    steps = [
        StepRecord(
            threshold=step.threshold,
            f_vector=list(step.f_vector),
            betti=list(step.betti),
            added=[
                AddedSimplex(c.format_simplex(s), len(s) - 1, str(step.provenance[s]))
                for s in step.added
            ],
        ).asdict()
        for step in report.steps
    ]
    return {
        "measure": report.measure,
        "coefficient_field": report.coefficient_field,
        "homology_dim": report.homology_dim,
        "notes": list(report.notes),
        "thresholds": plain(list(report.thresholds)),
        "steps": steps,
    }


def write_filtration(c, report, out_dir: Path, stem: str, formats) -> list:
    out_dir = Path(out_dir)
    written = []
    rows = report_rows(report)
    betti_columns = betti_header(report.homology_dim)
    if OutputFormat.JSON in formats:
        written.append(_write_json(out_dir / f"{stem}.json", report_to_dict(c, report)))
    if OutputFormat.CSV in formats:
        header = ["threshold", "f_vector"] + betti_columns
        written.append(
            _write_csv(out_dir / f"{stem}.csv", header, [[row[h] for h in header] for row in rows])
        )
    if OutputFormat.TSV in formats:
        header = ["threshold"] + betti_columns
        written.append(
            _write_csv(
                out_dir / f"{stem}_plot.tsv",
                header,
                [[row[h] for h in header] for row in rows],
                delimiter="\t",
            )
        )
    return written
