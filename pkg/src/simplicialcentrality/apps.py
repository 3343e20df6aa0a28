from django.apps import AppConfig
from django.conf import settings

# Fallback values for the customizable settings. Library code may run without a
# configured Django project (plain imports, notebooks), so lookups go through
# get_setting rather than reading django.conf.settings directly.
DEFAULTS = {
    "SIMPLICIAL_MAX_SIMPLICES": 10_000_000,
    "SIMPLICIAL_DENSE_RENDER_LIMIT": 2_000,
    "SIMPLICIAL_DENSE_RANK_COLUMNS": 10_000,
    "SIMPLICIAL_HOMOLOGY_DIM": 2,
    "SIMPLICIAL_THRESHOLD_TOLERANCE": 1e-12,
    "SIMPLICIAL_THREADS": None,
    "SIMPLICIAL_OUTPUT_FORMATS": ("json", "csv", "tsv"),
}


def get_setting(name):
    """Return the project setting ``name``, or our default when the project does
    not define it (or when no project is configured at all).
    """
    default = DEFAULTS[name]
    if not settings.configured:
        return default
    return getattr(settings, name, default)


class SimplicialCentralityConfig(AppConfig):
    """App config exposing the analysis defaults used by the management commands.
    Each value can be overridden with the corresponding ``SIMPLICIAL_*`` setting.
    """

    name = "simplicialcentrality"
    verbose_name = "Simplicial centrality"

    # Homology is always computed over the two-element field; the commands print
    # this so users know torsion is invisible to the reported Betti numbers.
    coefficient_field = "GF(2)"

    @property
    def max_simplices(self):
        return get_setting("SIMPLICIAL_MAX_SIMPLICES")

    @property
    def dense_render_limit(self):
        return get_setting("SIMPLICIAL_DENSE_RENDER_LIMIT")

    @property
    def homology_dim(self):
        return get_setting("SIMPLICIAL_HOMOLOGY_DIM")

    @property
    def threads(self):
        return get_setting("SIMPLICIAL_THREADS")

    @property
    def output_formats(self):
        return tuple(get_setting("SIMPLICIAL_OUTPUT_FORMATS"))

    def as_dict(self) -> dict:
        return {
            "coefficient_field": self.coefficient_field,
            "dense_render_limit": self.dense_render_limit,
            "homology_dim": self.homology_dim,
            "max_simplices": self.max_simplices,
            "output_formats": self.output_formats,
            "threads": self.threads,
        }
