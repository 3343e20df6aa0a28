from pathlib import Path

from simplicialcentrality.centrality import score_table
from simplicialcentrality.cli import AnalysisCommand, RunConfig, load_complex, summarize
from simplicialcentrality.common import FILTRATION_MEASURES
from simplicialcentrality.filtration import run_filtration
from simplicialcentrality.management.commands.centrality import score_measure
from simplicialcentrality.management.commands.filtrate import describe
from simplicialcentrality.schemas import score_records, write_filtration, write_scores
from simplicialcentrality.simplicial import write_complex_json


class Command(AnalysisCommand):
    help = (
        "Run the whole analysis: build the complex, score it with every measure, "
        "filtrate by each, and write all outputs. Settings may come from a YAML run "
        "file given with --config; flags override it."
    )
    uses_measure = True
    uses_thresholds = True
    uses_homology_dim = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--config", type=Path, default=None, help="YAML run configuration file."
        )

    def get_config(self, options, base=None):
        base = {"measures": tuple(FILTRATION_MEASURES)}
        if options.get("config"):
            base.update(RunConfig.from_yaml(options["config"]))
        return super().get_config(options, base=base)

    def run(self, config):
        c = load_complex(config)
        self.stdout.write(self.style.SUCCESS(summarize(c)))
        self.write_paths([write_complex_json(c, config.out / "complex.json")])
        homology_dim = self.clamp_homology_dim(c, config)
        for measure in config.measures:
            raw, normalized = score_measure(c, measure, threads=config.threads)
            records = score_records(score_table(c, raw, normalized))
            self.write_paths(
                write_scores(records, config.out, f"{measure}_scores", config.formats)
            )
            report = run_filtration(
                c,
                FILTRATION_MEASURES[measure],
                thresholds=config.thresholds_for(measure),
                homology_dim=homology_dim,
                scores=normalized if normalized is not None else raw,
                threads=config.threads,
            )
            self.stdout.write(self.style.SUCCESS(f"{report.measure} filtration"))
            for line in describe(report):
                self.stdout.write(line)
            self.write_paths(
                write_filtration(c, report, config.out, f"{measure}_filtration", config.formats)
            )
