from simplicialcentrality.cli import AnalysisCommand, load_complex
from simplicialcentrality.common import FILTRATION_MEASURES
from simplicialcentrality.filtration import run_filtration
from simplicialcentrality.schemas import write_filtration


def describe(report):
    for step in report.steps:
        yield f"  delta >= {float(step.threshold):g}: betti {list(step.betti)}, f-vector {step.f_vector}"


class Command(AnalysisCommand):
    help = (
        "Filtrate the complex by a centrality measure and report the Betti numbers of "
        "every sub-complex (JSON report, CSV summary, TSV plot data)."
    )
    uses_measure = True
    uses_thresholds = True
    uses_homology_dim = True

    def run(self, config):
        c = load_complex(config)
        homology_dim = self.clamp_homology_dim(c, config)
        for measure in config.measures:
            report = run_filtration(
                c,
                FILTRATION_MEASURES[measure],
                thresholds=config.thresholds_for(measure),
                homology_dim=homology_dim,
                threads=config.threads,
            )
            self.stdout.write(
                self.style.SUCCESS(
                    f"{report.measure} filtration, {len(report.steps)} steps, "
                    f"coefficients {report.coefficient_field}"
                )
            )
            for note in report.notes:
                self.stdout.write(f"  note: {note}")
            for line in describe(report):
                self.stdout.write(line)
            self.write_paths(
                write_filtration(c, report, config.out, f"{measure}_filtration", config.formats)
            )
