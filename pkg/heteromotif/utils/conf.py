from django.conf import settings

HETEROMOTIF_APPS = [
    "heteromotif.core",
    "heteromotif.graphs",
    "heteromotif.motifs",
    "heteromotif.analysis",
    "heteromotif.synth",
]

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "timestamped": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "timestamped",
        },
    },
    "loggers": {
        "heteromotif": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": False,
        },
    },
}


def configure(**overrides):
    """
    Configures Django settings for running outside of a Django project,
    eg from the ``heteromotif`` console script or when used as a plain
    library. Any keyword arguments are passed through as settings,
    which is how registered defaults get overridden in that case.

    Only ``settings.configure()`` is called here. Callers that need the
    app registry (management commands, system checks, logging config)
    call ``django.setup()`` themselves afterwards.
    """
    if settings.configured:
        return
    options = {
        "INSTALLED_APPS": list(HETEROMOTIF_APPS),
        "LOGGING": LOGGING,
        "USE_TZ": True,
    }
    options.update(overrides)
    settings.configure(**options)
