from simplicialcentrality.cli import AnalysisCommand, load_complex
from simplicialcentrality.homology import betti_numbers, euler_characteristic
from simplicialcentrality.schemas import write_betti


class Command(AnalysisCommand):
    help = "Print and write the Betti numbers of the whole complex over GF(2)."
    uses_homology_dim = True

    def run(self, config):
        c = load_complex(config)
        homology_dim = self.clamp_homology_dim(c, config)
        betti = betti_numbers(c, max_dim=homology_dim, threads=config.threads)
        self.stdout.write(
            self.style.SUCCESS(f"Betti numbers over GF(2): {list(betti)}")
        )
        self.stdout.write(f"Euler characteristic: {euler_characteristic(c)}")
        self.write_paths(write_betti(betti, config.out, "betti", config.formats))
