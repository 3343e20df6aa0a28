"""
Django settings for test_project project.

Only what the analysis commands need: the app itself, logging, and the
``SIMPLICIAL_*`` overrides read from the environment.
"""

from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Get environment settings
env = environ.Env()
DOTENV = BASE_DIR / ".env"
if DOTENV.exists() and not env("IGNORE_ENV_FILE", default=False):
    environ.Env.read_env(DOTENV)

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env("SECRET_KEY", default="django-insecure-simplicial-test-project")
DEBUG = True

INSTALLED_APPS = [
    "simplicialcentrality",
]

DATABASES = {}
USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"class": "logging.StreamHandler"}},
    "loggers": {"": {"handlers": ["console"], "level": "WARNING"}},
}

# Analysis defaults; see simplicialcentrality.apps.DEFAULTS
SIMPLICIAL_THREADS = env("SIMPLICIAL_THREADS", cast=int, default=None)
SIMPLICIAL_HOMOLOGY_DIM = env("SIMPLICIAL_HOMOLOGY_DIM", cast=int, default=2)
SIMPLICIAL_MAX_SIMPLICES = env("SIMPLICIAL_MAX_SIMPLICES", cast=int, default=10_000_000)
# Where the optional Lake Tanganyika food-web edge list lives, if present.
SIMPLICIAL_LAKE_EDGES = env(
    "SIMPLICIAL_LAKE_EDGES", default=str(BASE_DIR / "tests" / "data" / "lake_edges.txt")
)
