"""
Minimal settings for running the analysis commands outside a Django project, as the
``simplicial`` console script does. Projects that install the app use their own
settings and may override any ``SIMPLICIAL_*`` value.
"""

SECRET_KEY = "simplicialcentrality-standalone"
DEBUG = False
INSTALLED_APPS = ["simplicialcentrality"]
DATABASES = {}
USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {"plain": {"format": "%(levelname)s %(name)s: %(message)s"}},
    "handlers": {"console": {"class": "logging.StreamHandler", "formatter": "plain"}},
    "loggers": {
        "simplicialcentrality": {"handlers": ["console"], "level": "INFO"},
    },
}
