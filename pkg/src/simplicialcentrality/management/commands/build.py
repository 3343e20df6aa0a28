from simplicialcentrality.cli import AnalysisCommand, load_complex, summarize
from simplicialcentrality.simplicial import write_complex_json


class Command(AnalysisCommand):
    help = (
        "Build the clique complex of an edge-list file and write it as canonical "
        "complex JSON (complex.json in the output directory)."
    )

    def run(self, config):
        c = load_complex(config)
        path = write_complex_json(c, config.out / "complex.json")
        self.stdout.write(self.style.SUCCESS(summarize(c)))
        self.stdout.write(f"f-vector: {c.f_vector}; dimension {c.dimension}")
        self.stdout.write(f"{len(c.facet_list)} facets")
        self.write_paths([path])
