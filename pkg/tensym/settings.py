from pathlib import Path

import environ
import structlog

# Base setup
BASE_DIR = Path(__file__).resolve().parent

env = environ.Env(
    DEBUG=(bool, False),

    # Size guards for exhaustive runs
    TENSYM_GUARD=(int, 12),
    TENSYM_SPACE_GUARD=(int, 6),
    TENSYM_POSET_GUARD=(int, 6),
    TENSYM_DECORATION_GUARD=(int, 4),

    # Process workers for the parallel modes (1 = run inline)
    TENSYM_WORKERS=(int, 1),

    TENSYM_LOG_LEVEL=(str, "INFO"),
)

# Read environment variables from .env file
env.read_env(BASE_DIR / ".env")

SECRET_KEY = env("SECRET_KEY", default="tensym-has-no-secrets")
DEBUG = env("DEBUG")
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    # Third-party
    "rest_framework",

    # Local apps
    "order",
    "algebras",
    "duality",
    "congruences",
    "enumeration",
    "modelfile",
]

# No persistence: every structure lives in memory or in flat model files.
DATABASES = {}

USE_I18N = False
USE_TZ = True
TIME_ZONE = "UTC"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}

# Workbench config
TENSYM_GUARD = env("TENSYM_GUARD")
TENSYM_SPACE_GUARD = env("TENSYM_SPACE_GUARD")
TENSYM_POSET_GUARD = env("TENSYM_POSET_GUARD")
TENSYM_DECORATION_GUARD = env("TENSYM_DECORATION_GUARD")
TENSYM_WORKERS = env("TENSYM_WORKERS")
TENSYM_LOG_LEVEL = env("TENSYM_LOG_LEVEL")

# Logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "structured": {
            "()": structlog.stdlib.ProcessorFormatter,
            "processor": structlog.dev.ConsoleRenderer(colors=False),
            "foreign_pre_chain": [
                structlog.stdlib.add_log_level,
                structlog.stdlib.add_logger_name,
            ],
        },
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "structured"},
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        app: {"handlers": ["console"], "level": TENSYM_LOG_LEVEL, "propagate": False}
        for app in ("order", "algebras", "duality", "congruences", "enumeration", "modelfile")
    },
}
