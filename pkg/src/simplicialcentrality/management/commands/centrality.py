from simplicialcentrality import centrality
from simplicialcentrality.cli import AnalysisCommand, load_complex
from simplicialcentrality.schemas import plain, score_records, write_scores


def score_measure(c, measure, threads=None):
    """Raw and normalized score maps for one command-line measure."""
    if measure == "degree":
        return centrality.maximal_generalised_degrees(c), None
    if measure == "gcc":
        raw = centrality.generalised_clustering_coefficients(c)
        return raw, centrality.normalize_gcc(raw)
    raw = centrality.all_level_betweenness(c, normalized=False, threads=threads)
    normalized = centrality.all_level_betweenness(c, normalized=True, threads=threads)
    return raw, normalized


class Command(AnalysisCommand):
    help = (
        "Score every simplex with a generalised centrality measure and write the "
        "scores (simplex, dimension, measure, raw, normalized)."
    )
    uses_measure = True

    def run(self, config):
        c = load_complex(config)
        for measure in config.measures:
            raw, normalized = score_measure(c, measure, threads=config.threads)
            records = score_records(centrality.score_table(c, raw, normalized))
            shown = normalized if normalized is not None else raw
            self.stdout.write(self.style.SUCCESS(f"{measure}: {len(records)} simplices scored"))
            for dim in range(c.dimension + 1):
                best = shown.argmax(dim)
                if best is not None:
                    self.stdout.write(
                        f"  top {dim}-simplex {c.format_simplex(best)}: {plain(shown[best]):g}"
                    )
            self.write_paths(
                write_scores(records, config.out, f"{measure}_scores", config.formats)
            )
